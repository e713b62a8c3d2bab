#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "attsteer/command_source.hpp"
#include "attsteer/controller.hpp"
#include "attsteer/dynamics.hpp"

namespace attsteer {

struct SimulationConfig {
  SpacecraftParams params = SpacecraftParams::default_config();
  ControllerGains gains;
  double integral_threshold = kDefaultIntegralThreshold;
  bool limiter_on = false;
  double acs_period = 0.2;  // s
  double dt = 0.02;         // s, RK4 step
  double duration = 100.0;  // s
  SpacecraftState initial;
  ExternalTorqueHook external_torque = zero_external_torque();

  /// Throws ConfigError unless dt <= acs_period, acs_period is an integer
  /// multiple of dt and duration > 0.
  void validate() const;
  int substeps() const;
};

struct LogSample {
  double t;
  Quaternion q;
  Eigen::Vector3d omega;
  Vector4 wheel_speeds;
  Quaternion q_tgt;
  Eigen::Vector3d torque;  // commanded body torque held over the ACS tick
};

using TrajectoryLog = std::vector<LogSample>;

/// Closed loop with the controller sampled every acs_period and its torque
/// held between ticks. The command source is queried at each tick; the wheel
/// torques are the reaction -Z# tau_c. One log row per integration step,
/// including t = 0 and t = duration.
TrajectoryLog integrate_closed_loop(const SimulationConfig& cfg, const CommandSource& source);

/// Largest |omega_i| over the log and all three axes, rad/s.
double peak_axis_rate(const TrajectoryLog& log, double from_time = 0.0);

/// Reduced single-channel loop Kp / (s^2 + Kd s + Kp) with Kp = wn^2 and
/// Kd = 2 zeta wn.
struct SingleAxisLoop {
  double omega_n = 0.24;
  double zeta = 0.85;
};

/// Angle command sampled every `period` seconds (at k * period) and held.
struct SampledCommand {
  std::function<double(double)> signal;
  double period = 0.2;
};

struct SingleAxisSample {
  double t;
  double phi;      // angle
  double omega;    // rate
  double phi_cmd;  // held command
};

using SingleAxisLog = std::vector<SingleAxisSample>;

/// RK4 integration from rest at step dt; `command.period` must be an
/// integer multiple of dt. Rates are in the units of the command per second.
SingleAxisLog integrate_single_axis(const SingleAxisLoop& loop, const SampledCommand& command, double duration,
                                    double dt);

}  // namespace attsteer
