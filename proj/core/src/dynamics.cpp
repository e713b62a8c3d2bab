#include "attsteer/dynamics.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "attsteer/error.hpp"

namespace attsteer {

SpacecraftParams::SpacecraftParams(const Eigen::Matrix3d& inertia, double wheel_inertia,
                                   const WheelAxes& wheel_axes)
    : inertia_(inertia), wheel_inertia_(wheel_inertia), axes_(wheel_axes) {
  if (!inertia.allFinite() || !inertia.isApprox(inertia.transpose(), 1e-12)) {
    throw ConfigError("inertia matrix must be finite and symmetric");
  }
  Eigen::LLT<Eigen::Matrix3d> llt(inertia);
  if (llt.info() != Eigen::Success) throw ConfigError("inertia matrix must be positive definite");
  inertia_inv_ = llt.solve(Eigen::Matrix3d::Identity());

  if (!(wheel_inertia > 0.0) || !std::isfinite(wheel_inertia)) {
    throw ConfigError("wheel inertia must be positive");
  }
  for (int i = 0; i < 4; ++i) {
    if (std::abs(axes_.col(i).norm() - 1.0) > 1e-12) {
      throw ConfigError("wheel spin axes must be unit vectors");
    }
  }
  Eigen::FullPivLU<WheelAxes> lu(axes_);
  lu.setThreshold(1e-9);
  if (lu.rank() != 3) throw ConfigError("wheel spin axes must span three dimensions");
  const Eigen::Matrix3d zzt = axes_ * axes_.transpose();
  pinv_ = axes_.transpose() * zzt.inverse();
}

WheelAxes SpacecraftParams::pyramid_axes(double cant_rad) {
  WheelAxes z;
  const double s = std::sin(cant_rad);
  const double c = std::cos(cant_rad);
  for (int i = 0; i < 4; ++i) {
    const double az = std::numbers::pi / 4.0 + i * std::numbers::pi / 2.0;
    z.col(i) = Eigen::Vector3d(s * std::cos(az), s * std::sin(az), c).normalized();
  }
  return z;
}

SpacecraftParams SpacecraftParams::default_config() {
  return {Eigen::Vector3d(1000.0, 1500.0, 2000.0).asDiagonal(), 0.1,
          pyramid_axes(std::numbers::pi / 4.0)};
}

ExternalTorqueHook zero_external_torque() {
  return [](double) { return Eigen::Vector3d::Zero().eval(); };
}

Eigen::Vector3d wheel_momentum(const Vector4& wheel_speeds, const SpacecraftParams& p) {
  return p.wheel_inertia() * (p.wheel_axes() * wheel_speeds);
}

Eigen::Vector3d body_momentum(const SpacecraftState& x, const SpacecraftParams& p) {
  return p.inertia() * x.omega + wheel_momentum(x.wheel_speeds, p);
}

StateDerivative state_derivative(const SpacecraftState& x, const Vector4& u,
                                 const Eigen::Vector3d& tau_ext, const SpacecraftParams& p) {
  StateDerivative d;
  d.q_dot = kinematics_matrix(x.omega) * x.q.as_vector4();
  const Eigen::Vector3d h_total = body_momentum(x, p);
  d.omega_dot = p.inertia_inverse() * (-x.omega.cross(h_total) - p.wheel_axes() * u + tau_ext);
  d.wheel_accel = u / p.wheel_inertia();
  return d;
}

Vector4 allocate_torques(const Eigen::Vector3d& tau_cmd, const SpacecraftParams& p) {
  return p.allocation() * tau_cmd;
}

namespace {

SpacecraftState advance(const SpacecraftState& x, const StateDerivative& d, double h) {
  SpacecraftState out;
  out.q = Quaternion::from_vector4(x.q.as_vector4() + h * d.q_dot);
  out.omega = x.omega + h * d.omega_dot;
  out.wheel_speeds = x.wheel_speeds + h * d.wheel_accel;
  return out;
}

}  // namespace

SpacecraftState rk4_step(const SpacecraftState& x, const Vector4& u, const ExternalTorqueHook& tau_ext,
                         const SpacecraftParams& p, double t, double h) {
  const Eigen::Vector3d tau0 = tau_ext(t);
  const Eigen::Vector3d tau_mid = tau_ext(t + 0.5 * h);
  const Eigen::Vector3d tau1 = tau_ext(t + h);

  const StateDerivative k1 = state_derivative(x, u, tau0, p);
  const StateDerivative k2 = state_derivative(advance(x, k1, 0.5 * h), u, tau_mid, p);
  const StateDerivative k3 = state_derivative(advance(x, k2, 0.5 * h), u, tau_mid, p);
  const StateDerivative k4 = state_derivative(advance(x, k3, h), u, tau1, p);

  SpacecraftState out;
  const Eigen::Vector4d q = x.q.as_vector4() + h / 6.0 * (k1.q_dot + 2.0 * k2.q_dot + 2.0 * k3.q_dot + k4.q_dot);
  out.omega = x.omega + h / 6.0 * (k1.omega_dot + 2.0 * k2.omega_dot + 2.0 * k3.omega_dot + k4.omega_dot);
  out.wheel_speeds = x.wheel_speeds + h / 6.0 * (k1.wheel_accel + 2.0 * k2.wheel_accel +
                                                  2.0 * k3.wheel_accel + k4.wheel_accel);
  if (!q.allFinite() || !out.omega.allFinite() || !out.wheel_speeds.allFinite()) {
    throw NumericError("non-finite spacecraft state during integration");
  }
  out.q = normalize(Quaternion::from_vector4(q));
  return out;
}

}  // namespace attsteer
