#pragma once

#include <numbers>
#include <vector>

#include <Eigen/Core>

#include "attsteer/quaternion.hpp"

namespace attsteer {

/// Constant-rate rotation about a body axis starting at `start_time`:
/// q(t) = initial * rot(axis, rate * max(0, t - start_time)).
struct RampProfile {
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  double rate = 0.0;  // rad/s
  double start_time = 0.0;
  Quaternion initial;

  double angle(double t) const;
  Quaternion operator()(double t) const;
};

/// 0 before t0, 1 after t0 + width, raised cosine in between.
double smooth_step(double t, double t0, double width);

/// Synthetic fast-maneuver stand-in: all three body rates build up to the
/// rate limit together (an eigenaxis slew about (1,1,1)), then the y and z
/// rates reverse to the opposite limit at staggered times, and every axis
/// winds down to rest at the end. Transitions are raised-cosine blends.
/// The attitude is obtained by integrating the kinematics from identity on
/// a fine grid; queries between grid points finish with one partial RK4 step.
class SyntheticManeuver {
 public:
  struct Shape {
    double duration = 708.0;        // s
    double rate_limit = 0.13 * std::numbers::pi / 180.0;  // rad/s per axis
    double transition = 100.0;      // s, width of each raised-cosine blend
    double y_reversal = 240.0;      // s
    double z_reversal = 380.0;      // s
  };

  SyntheticManeuver() : SyntheticManeuver(Shape{}) {}
  explicit SyntheticManeuver(Shape shape, double grid_step = 0.05);

  const Shape& shape() const { return shape_; }
  Eigen::Vector3d body_rate(double t) const;
  Quaternion operator()(double t) const;

 private:
  Shape shape_;
  double step_;
  std::vector<Quaternion> grid_;
};

}  // namespace attsteer
