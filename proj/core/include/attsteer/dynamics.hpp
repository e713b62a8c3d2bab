#pragma once

#include <functional>

#include <Eigen/Core>

#include "attsteer/quaternion.hpp"

namespace attsteer {

using Vector4 = Eigen::Vector4d;
using WheelAxes = Eigen::Matrix<double, 3, 4>;

/// Rigid body with a four-wheel reaction wheel array. Construction validates
/// the inertia (symmetric positive definite), the wheel axes (unit columns,
/// rank 3) and precomputes the inverse inertia and the allocation pseudoinverse.
class SpacecraftParams {
 public:
  SpacecraftParams(const Eigen::Matrix3d& inertia, double wheel_inertia, const WheelAxes& wheel_axes);

  /// diag(1000, 1500, 2000) kg m^2, 0.1 kg m^2 rotors, 45 deg pyramid.
  static SpacecraftParams default_config();
  /// Four wheels canted `cant_rad` from the body z axis, spaced 90 deg in azimuth.
  static WheelAxes pyramid_axes(double cant_rad);

  const Eigen::Matrix3d& inertia() const { return inertia_; }
  const Eigen::Matrix3d& inertia_inverse() const { return inertia_inv_; }
  double wheel_inertia() const { return wheel_inertia_; }
  const WheelAxes& wheel_axes() const { return axes_; }
  /// Z^T (Z Z^T)^-1
  const Eigen::Matrix<double, 4, 3>& allocation() const { return pinv_; }

 private:
  Eigen::Matrix3d inertia_;
  Eigen::Matrix3d inertia_inv_;
  double wheel_inertia_;
  WheelAxes axes_;
  Eigen::Matrix<double, 4, 3> pinv_;
};

struct SpacecraftState {
  Quaternion q;
  Eigen::Vector3d omega = Eigen::Vector3d::Zero();  // body rates, rad/s
  Vector4 wheel_speeds = Vector4::Zero();            // rad/s
};

struct StateDerivative {
  Eigen::Vector4d q_dot = Eigen::Vector4d::Zero();  // scalar-last
  Eigen::Vector3d omega_dot = Eigen::Vector3d::Zero();
  Vector4 wheel_accel = Vector4::Zero();
};

/// External disturbance torque in the body frame as a function of time.
using ExternalTorqueHook = std::function<Eigen::Vector3d(double t)>;
ExternalTorqueHook zero_external_torque();

/// Rotational equations of motion:
///   q_dot = Q(w) q
///   w_dot = J^-1 [ -w x (J w + Jw Z W) - Z u + tau_ext ]
///   W_dot = u / Jw
/// `u` holds the four wheel (rotor) torques.
StateDerivative state_derivative(const SpacecraftState& x, const Vector4& u,
                                 const Eigen::Vector3d& tau_ext, const SpacecraftParams& p);

/// h = Jw Z W in the body frame.
Eigen::Vector3d wheel_momentum(const Vector4& wheel_speeds, const SpacecraftParams& p);

/// Total body-frame angular momentum J w + h.
Eigen::Vector3d body_momentum(const SpacecraftState& x, const SpacecraftParams& p);

/// Minimum-norm wheel torques Z^T (Z Z^T)^-1 tau_cmd.
Vector4 allocate_torques(const Eigen::Vector3d& tau_cmd, const SpacecraftParams& p);

/// One classical RK4 step with constant wheel torque and external torque
/// sampled at t, t + h/2, t + h. The quaternion is renormalized afterwards.
SpacecraftState rk4_step(const SpacecraftState& x, const Vector4& u, const ExternalTorqueHook& tau_ext,
                         const SpacecraftParams& p, double t, double h);

}  // namespace attsteer
