#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "attsteer/command_source.hpp"
#include "attsteer/simulation.hpp"

namespace attsteer {

enum class CommandKind { FullRateHold, DownsampleHold, CglFilter };
enum class CommandProfile { Step, Ramp, Maneuver, WaypointFile, CoefficientFile };

/// How the attitude target is produced. Angles and rates are stored in
/// radians; the scenario file uses degrees where the key says so.
struct CommandSpec {
  CommandKind kind = CommandKind::FullRateHold;
  CommandProfile profile = CommandProfile::Step;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  double angle = 0.0;              // step, rad
  double rate = 0.0;               // ramp, rad/s
  bool normalize = false;          // scale the ramp by the hold's normalizing gain
  std::optional<double> span;      // s; defaults per profile
  double hold_period = 10.0;       // downsample_hold, s
  int order = 49;                  // cgl_filter
  std::filesystem::path file;      // waypoint or coefficient file
};

struct OutputSpec {
  std::filesystem::path trajectory_csv;
  std::filesystem::path svg;
};

struct ScenarioConfig {
  SimulationConfig sim;
  CommandSpec command;
  OutputSpec output;
};

/// Parses the sectioned key = value scenario format:
///
///   [spacecraft]  inertia (3 diagonal or 9 row-major values, kg m^2),
///                 wheel_inertia (kg m^2), wheel_axes = pyramid | 12 values
///                 (four unit columns x1,y1,z1,...), wheel_cant_deg
///   [controller]  kp, ki, kr, omega_max_degps, integral_threshold_deg, limiter
///   [command]     kind = full_rate_hold | downsample_hold | cgl_filter
///                 profile = step | ramp | maneuver | waypoints | coefficients
///                 axis, angle_deg, rate_degps, normalize, span, hold_period,
///                 order, file
///   [initial]     quaternion (scalar-last), omega (rad/s), wheel_speeds (rad/s)
///   [simulation]  acs_period, dt, duration (s)
///   [output]      trajectory_csv, svg
///
/// Relative file paths resolve against `base_dir`. Unknown sections or keys
/// and invalid values throw ConfigError.
ScenarioConfig parse_scenario(std::istream& is, const std::filesystem::path& base_dir = {});
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Default span of the command profile when none is given.
double command_span(const ScenarioConfig& cfg);

/// Builds the command source the closed loop will query.
CommandSource build_command_source(const ScenarioConfig& cfg);

}  // namespace attsteer
