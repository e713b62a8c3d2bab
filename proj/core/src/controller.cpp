#include "attsteer/controller.hpp"

#include <cmath>
#include <stdexcept>

#include "attsteer/error.hpp"

namespace attsteer {

void ControllerGains::validate() const {
  if (!(kp > 0.0) || !(kr > 0.0) || !(ki >= 0.0) || !(omega_max >= 0.0)) {
    throw ConfigError("controller gains must satisfy kp > 0, kr > 0, ki >= 0, omega_max >= 0");
  }
}

Eigen::Vector3d proportional_limiter(const Eigen::Vector3d& e, const ControllerGains& g) {
  const double limit = g.omega_max * g.kr / g.kp;
  const double n = e.norm();
  if (n <= limit) return e;
  return e * (limit / n);
}

ControllerState integral_gate(const Quaternion& q_e, double threshold, const ControllerState& cs) {
  if (!(threshold > 0.0)) throw std::invalid_argument("integral threshold must be positive");
  ControllerState out = cs;
  out.integral_active = q_e.angle() < threshold;
  if (!out.integral_active) out.integral.setZero();
  return out;
}

ControlResult control_torque(const SpacecraftState& x, const Quaternion& q_tgt, const ControllerGains& g,
                             const ControllerState& cs, const SpacecraftParams& p, double dt, bool limiter_on,
                             double integral_threshold) {
  if (!(dt > 0.0)) throw std::invalid_argument("controller time step must be positive");
  const Quaternion q_e = quat_error(x.q, q_tgt);
  const Eigen::Vector3d e = 2.0 * q_e.vec;

  ControllerState next = integral_gate(q_e, integral_threshold, cs);
  if (next.integral_active) next.integral += e * dt;

  const Eigen::Vector3d prop = limiter_on ? proportional_limiter(e, g) : e;
  const Eigen::Vector3d accel = g.kp * prop - g.kr * x.omega + g.ki * next.integral;
  const Eigen::Vector3d torque = p.inertia() * accel + x.omega.cross(body_momentum(x, p));
  return {torque, next};
}

SecondOrder gains_to_second_order(const ControllerGains& g) {
  if (!(g.kp > 0.0)) throw std::invalid_argument("kp must be positive");
  const double wn = std::sqrt(g.kp);
  return {wn, g.kr / (2.0 * wn)};
}

ControllerGains gains_from_second_order(double omega_n, double zeta) {
  ControllerGains g;
  g.kp = omega_n * omega_n;
  g.kr = 2.0 * zeta * omega_n;
  return g;
}

}  // namespace attsteer
