#include "attsteer/maneuver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace attsteer {

double RampProfile::angle(double t) const { return rate * std::max(0.0, t - start_time); }

Quaternion RampProfile::operator()(double t) const {
  return normalize(initial * Quaternion::from_axis_angle(axis, angle(t)));
}

double smooth_step(double t, double t0, double width) {
  if (t <= t0) return 0.0;
  if (t >= t0 + width) return 1.0;
  return 0.5 * (1.0 - std::cos(std::numbers::pi * (t - t0) / width));
}

namespace {

Eigen::Vector4d kinematics(const SyntheticManeuver& m, const Eigen::Vector4d& q, double t) {
  return kinematics_matrix(m.body_rate(t)) * q;
}

Eigen::Vector4d rk4(const SyntheticManeuver& m, const Eigen::Vector4d& q, double t, double h) {
  const Eigen::Vector4d k1 = kinematics(m, q, t);
  const Eigen::Vector4d k2 = kinematics(m, q + 0.5 * h * k1, t + 0.5 * h);
  const Eigen::Vector4d k3 = kinematics(m, q + 0.5 * h * k2, t + 0.5 * h);
  const Eigen::Vector4d k4 = kinematics(m, q + h * k3, t + h);
  return (q + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)).normalized();
}

}  // namespace

SyntheticManeuver::SyntheticManeuver(Shape shape, double grid_step) : shape_(shape), step_(grid_step) {
  const double w = shape_.transition;
  if (!(shape_.duration > 2.0 * w) || !(w > 0.0) || !(step_ > 0.0) ||
      !(shape_.y_reversal >= w && shape_.y_reversal + w <= shape_.duration - w) ||
      !(shape_.z_reversal >= w && shape_.z_reversal + w <= shape_.duration - w)) {
    throw std::invalid_argument("maneuver phases must not overlap");
  }
  const auto count = static_cast<std::size_t>(std::ceil(shape_.duration / step_)) + 1;
  grid_.reserve(count);
  Eigen::Vector4d q(0.0, 0.0, 0.0, 1.0);
  for (std::size_t k = 0; k < count; ++k) {
    grid_.push_back(Quaternion::from_vector4(q));
    q = rk4(*this, q, static_cast<double>(k) * step_, step_);
  }
}

Eigen::Vector3d SyntheticManeuver::body_rate(double t) const {
  const double w = shape_.transition;
  const double up = smooth_step(t, 0.0, w);
  const double down = smooth_step(t, shape_.duration - w, w);
  const double x = up - down;
  const double y = up - 2.0 * smooth_step(t, shape_.y_reversal, w) + down;
  const double z = up - 2.0 * smooth_step(t, shape_.z_reversal, w) + down;
  return shape_.rate_limit * Eigen::Vector3d(x, y, z);
}

Quaternion SyntheticManeuver::operator()(double t) const {
  const double tc = std::clamp(t, 0.0, static_cast<double>(grid_.size() - 1) * step_);
  const auto k = std::min(static_cast<std::size_t>(std::floor(tc / step_)), grid_.size() - 1);
  const double tk = static_cast<double>(k) * step_;
  const double h = tc - tk;
  if (h <= 0.0) return grid_[k];
  return Quaternion::from_vector4(rk4(*this, grid_[k].as_vector4(), tk, h));
}

}  // namespace attsteer
