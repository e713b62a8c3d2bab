#pragma once

#include <numbers>

#include <Eigen/Core>

#include "attsteer/dynamics.hpp"
#include "attsteer/quaternion.hpp"

namespace attsteer {

/// Proportional-integral-rate gains of the quaternion error feedback law.
struct ControllerGains {
  double kp = 0.057;   // 1/s^2
  double ki = 0.0023;  // 1/s^3
  double kr = 0.4;     // 1/s
  double omega_max = 0.13 * std::numbers::pi / 180.0;  // slew rate limit, rad/s

  /// Throws ConfigError unless kp > 0, kr > 0, ki >= 0, omega_max >= 0.
  void validate() const;
};

inline constexpr double kDefaultIntegralThreshold = 0.25 * std::numbers::pi / 180.0;

/// Integral accumulator of 2 a_e (rad s) and the gate flag. Reset to zero
/// whenever the gate turns off.
struct ControllerState {
  Eigen::Vector3d integral = Eigen::Vector3d::Zero();
  bool integral_active = false;
};

struct ControlResult {
  Eigen::Vector3d torque;  // body control torque, N m
  ControllerState state;
};

/// Body control torque
///   tau_c = J (Kp N(2 a_e) - Kr w + Ki int 2 a_e) + w x (J w + h)
/// with a_e the vector part of quat_error(x.q, q_tgt). The gate is evaluated
/// first, then the accumulator is advanced by a rectangular step of `dt`.
/// The limiter N is applied only when `limiter_on`.
ControlResult control_torque(const SpacecraftState& x, const Quaternion& q_tgt, const ControllerGains& g,
                             const ControllerState& cs, const SpacecraftParams& p, double dt, bool limiter_on,
                             double integral_threshold = kDefaultIntegralThreshold);

/// Rescales e so that Kp |e| <= omega_max Kr, keeping its direction.
Eigen::Vector3d proportional_limiter(const Eigen::Vector3d& e, const ControllerGains& g);

/// Integral is active while the error rotation angle is below `threshold`;
/// the accumulator is cleared whenever it is not.
ControllerState integral_gate(const Quaternion& q_e, double threshold, const ControllerState& cs);

struct SecondOrder {
  double omega_n;  // rad/s
  double zeta;
};

/// omega_n = sqrt(Kp), zeta = Kr / (2 sqrt(Kp)).
SecondOrder gains_to_second_order(const ControllerGains& g);

/// Inverse of gains_to_second_order; ki and omega_max are left at the defaults.
ControllerGains gains_from_second_order(double omega_n, double zeta);

}  // namespace attsteer
