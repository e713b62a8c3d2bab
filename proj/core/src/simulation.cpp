#include "attsteer/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "attsteer/error.hpp"

namespace attsteer {

namespace {

long integer_ratio(double num, double den, const char* what) {
  const double r = num / den;
  const double k = std::round(r);
  if (k < 1.0 || std::abs(r - k) > 1e-9 * k) {
    throw ConfigError(fmt::format("{}: {} is not an integer multiple of {}", what, num, den));
  }
  return static_cast<long>(k);
}

}  // namespace

void SimulationConfig::validate() const {
  if (!(dt > 0.0)) throw ConfigError("integration step dt must be positive");
  if (!(acs_period >= dt)) throw ConfigError("ACS period must be at least the integration step");
  integer_ratio(acs_period, dt, "ACS period");
  if (!(duration > 0.0)) throw ConfigError("duration must be positive");
  if (!initial.q.is_unit(1e-6)) throw ConfigError("initial quaternion must be unit norm");
  gains.validate();
  if (!(integral_threshold > 0.0)) throw ConfigError("integral threshold must be positive");
}

int SimulationConfig::substeps() const { return static_cast<int>(integer_ratio(acs_period, dt, "ACS period")); }

TrajectoryLog integrate_closed_loop(const SimulationConfig& cfg, const CommandSource& source) {
  cfg.validate();
  const int substeps = cfg.substeps();
  const auto steps = static_cast<long>(std::ceil(cfg.duration / cfg.dt - 1e-9));

  TrajectoryLog log;
  log.reserve(static_cast<std::size_t>(steps) + 1);

  SpacecraftState x = cfg.initial;
  x.q = normalize(x.q);
  ControllerState cs;
  Quaternion q_tgt;
  Eigen::Vector3d torque = Eigen::Vector3d::Zero();
  Vector4 u = Vector4::Zero();

  for (long i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) * cfg.dt;
    if (i % substeps == 0) {
      q_tgt = command_at(t, source);
      const ControlResult out =
          control_torque(x, q_tgt, cfg.gains, cs, cfg.params, cfg.acs_period, cfg.limiter_on, cfg.integral_threshold);
      torque = out.torque;
      cs = out.state;
      u = allocate_torques(-torque, cfg.params);
    }
    log.push_back({t, x.q, x.omega, x.wheel_speeds, q_tgt, torque});
    if (i == steps) break;
    x = rk4_step(x, u, cfg.external_torque, cfg.params, t, cfg.dt);
  }
  return log;
}

double peak_axis_rate(const TrajectoryLog& log, double from_time) {
  double peak = 0.0;
  for (const LogSample& s : log) {
    if (s.t < from_time) continue;
    peak = std::max(peak, s.omega.cwiseAbs().maxCoeff());
  }
  return peak;
}

SingleAxisLog integrate_single_axis(const SingleAxisLoop& loop, const SampledCommand& command, double duration,
                                    double dt) {
  if (!(loop.omega_n > 0.0) || !(loop.zeta >= 0.0)) throw std::invalid_argument("invalid single-axis loop");
  if (!(dt > 0.0) || !(duration > 0.0)) throw std::invalid_argument("dt and duration must be positive");
  if (!command.signal) throw std::invalid_argument("single-axis command has no signal");
  const long hold = integer_ratio(command.period, dt, "command period");

  const double kp = loop.omega_n * loop.omega_n;
  const double kd = 2.0 * loop.zeta * loop.omega_n;
  const auto steps = static_cast<long>(std::ceil(duration / dt - 1e-9));

  SingleAxisLog log;
  log.reserve(static_cast<std::size_t>(steps) + 1);
  double phi = 0.0;
  double omega = 0.0;
  double cmd = 0.0;
  for (long i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) * dt;
    if (i % hold == 0) cmd = command.signal(static_cast<double>(i / hold) * command.period);
    log.push_back({t, phi, omega, cmd});
    if (i == steps) break;

    auto accel = [&](double p, double w) { return kp * (cmd - p) - kd * w; };
    const double k1p = omega, k1w = accel(phi, omega);
    const double k2p = omega + 0.5 * dt * k1w, k2w = accel(phi + 0.5 * dt * k1p, omega + 0.5 * dt * k1w);
    const double k3p = omega + 0.5 * dt * k2w, k3w = accel(phi + 0.5 * dt * k2p, omega + 0.5 * dt * k2w);
    const double k4p = omega + dt * k3w, k4w = accel(phi + dt * k3p, omega + dt * k3w);
    phi += dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    omega += dt / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    if (!std::isfinite(phi) || !std::isfinite(omega)) throw NumericError("single-axis state is not finite");
  }
  return log;
}

}  // namespace attsteer
