#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "attsteer/chebyshev.hpp"
#include "attsteer/quaternion.hpp"

namespace attsteer {

/// Time-tagged attitude commands. Times strictly increase; quaternions are
/// unit norm. `hold_period` is the nominal spacing between commands.
struct WaypointTable {
  std::vector<double> times;
  std::vector<Quaternion> quats;
  double hold_period = 0.0;

  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
  /// Throws std::invalid_argument when an invariant does not hold.
  void validate() const;
};

/// Samples `trajectory` every `period` seconds over [t0, tf] (tf included
/// when it falls on the grid).
WaypointTable sample_waypoints(const std::function<Quaternion(double)>& trajectory, double t0, double tf,
                               double period);

/// Every waypoint whose time lies on the grid t_0 + k * period. Throws when
/// `period` is not positive.
WaypointTable downsample(const WaypointTable& table, double period);

/// Compressed attitude trajectory: N + 1 CGL samples of each quaternion
/// component over one interval.
struct CoefficientRecord {
  int order = 0;
  Interval interval;
  std::array<std::vector<double>, 4> channels;

  void validate() const;
};

/// c_j = q(t_j) componentwise at the CGL instants of `interval`.
CoefficientRecord encode_trajectory(const std::function<Quaternion(double)>& trajectory, const Interval& interval,
                                    int order);

/// Latest waypoint at or before t.
struct FullRateHold {
  WaypointTable table;
};

/// Latest waypoint at or before t0 + floor((t - t0) / T) T, with T the
/// table's hold period. Applied to a dense table this is downsample-and-hold.
struct DownsampleHold {
  WaypointTable table;
};

/// Bank of four CGL interpolating filters; output renormalized.
class CglFilter {
 public:
  explicit CglFilter(CoefficientRecord record);

  const CoefficientRecord& record() const { return record_; }
  /// Interpolated components before renormalization.
  Eigen::Vector4d raw(double t) const;
  Quaternion operator()(double t) const;

 private:
  CoefficientRecord record_;
  CglGrid grid_;
};

using CommandSource = std::variant<FullRateHold, DownsampleHold, CglFilter>;

/// Attitude target at time t; times outside the span clamp to its ends.
/// Throws std::invalid_argument for an empty source.
Quaternion command_at(double t, const CommandSource& source);

/// Uplink storage in bytes with 4-byte floats: 20 bytes per held command
/// (time tag + four components); 16 (N + 1) + 8 for a coefficient record.
std::size_t footprint_bytes(const CommandSource& source);
inline constexpr std::size_t kBytesPerHeldCommand = 20;
std::size_t held_command_footprint(std::size_t count);
std::size_t coefficient_footprint(int order);

}  // namespace attsteer
