#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "attsteer/command_source.hpp"

namespace attsteer {

// Waypoint file:
//   # waypoints v1
//   t,q1,q2,q3,q4            (seconds, scalar-last), one record per line
// Coefficient file:
//   # cglcoef v1 N=<n> t0=<s> tf=<s>
//   c_q1,c_q2,c_q3,c_q4      N + 1 lines, node order j = 0..N
// Numbers are written with 17 significant digits so both formats round-trip
// exactly. Readers throw ConfigError with the offending line number.

void write_waypoints(std::ostream& os, const WaypointTable& table);
WaypointTable read_waypoints(std::istream& is);
void save_waypoints(const std::filesystem::path& path, const WaypointTable& table);
WaypointTable load_waypoints(const std::filesystem::path& path);

void write_coefficients(std::ostream& os, const CoefficientRecord& record);
CoefficientRecord read_coefficients(std::istream& is);
void save_coefficients(const std::filesystem::path& path, const CoefficientRecord& record);
CoefficientRecord load_coefficients(const std::filesystem::path& path);

/// Shortest decimal text that is guaranteed to parse back to `v` (%.17g).
std::string format_exact(double v);

}  // namespace attsteer
