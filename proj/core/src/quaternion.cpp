#include "attsteer/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace attsteer {

namespace {
constexpr double kUnitTolerance = 1e-6;
}

Quaternion Quaternion::from_axis_angle(const Eigen::Vector3d& axis, double angle_rad) {
  const double n = axis.norm();
  if (n <= 0.0) return identity();
  return {axis / n * std::sin(0.5 * angle_rad), std::cos(0.5 * angle_rad)};
}

double Quaternion::norm() const { return std::sqrt(vec.squaredNorm() + scalar * scalar); }

Quaternion Quaternion::inverse() const {
  const double n2 = vec.squaredNorm() + scalar * scalar;
  if (n2 <= 0.0) throw std::invalid_argument("cannot invert a zero quaternion");
  return {-vec / n2, scalar / n2};
}

double Quaternion::angle() const { return 2.0 * std::atan2(vec.norm(), std::abs(scalar)); }

bool Quaternion::is_unit(double tol) const { return std::abs(norm() - 1.0) <= tol; }

bool Quaternion::is_finite() const { return vec.allFinite() && std::isfinite(scalar); }

Quaternion quat_multiply(const Quaternion& p, const Quaternion& q) {
  return {p.scalar * q.vec + q.scalar * p.vec + p.vec.cross(q.vec),
          p.scalar * q.scalar - p.vec.dot(q.vec)};
}

Quaternion quat_error(const Quaternion& q, const Quaternion& q_tgt) {
  if (!q.is_unit(kUnitTolerance) || !q_tgt.is_unit(kUnitTolerance)) {
    throw std::invalid_argument("quat_error requires unit quaternions");
  }
  return canonicalize(quat_multiply(q.conjugate(), q_tgt));
}

Quaternion normalize(const Quaternion& q) {
  const double n = q.norm();
  if (!(n > 1e-12)) throw std::invalid_argument("cannot normalize a near-zero quaternion");
  return {q.vec / n, q.scalar / n};
}

Quaternion canonicalize(const Quaternion& q) {
  return q.scalar < 0.0 ? Quaternion{-q.vec, -q.scalar} : q;
}

Eigen::Matrix3d rotation_matrix(const Quaternion& q) {
  const Eigen::Vector3d& v = q.vec;
  const double s = q.scalar;
  Eigen::Matrix3d skew;
  skew << 0.0, -v.z(), v.y(),
          v.z(), 0.0, -v.x(),
          -v.y(), v.x(), 0.0;
  return (s * s - v.squaredNorm()) * Eigen::Matrix3d::Identity() + 2.0 * v * v.transpose() +
         2.0 * s * skew;
}

Eigen::Matrix4d kinematics_matrix(const Eigen::Vector3d& w) {
  Eigen::Matrix4d m;
  m <<  0.0,    w.z(), -w.y(), w.x(),
       -w.z(),  0.0,    w.x(), w.y(),
        w.y(), -w.x(),  0.0,   w.z(),
       -w.x(), -w.y(), -w.z(), 0.0;
  return 0.5 * m;
}

double rotation_distance(const Quaternion& p, const Quaternion& q) {
  const double d = std::abs(p.as_vector4().normalized().dot(q.as_vector4().normalized()));
  return 2.0 * std::acos(std::min(1.0, d));
}

}  // namespace attsteer
