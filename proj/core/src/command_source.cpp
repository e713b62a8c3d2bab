#include "attsteer/command_source.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace attsteer {

namespace {

constexpr double kFloatBytes = 4;
// Relative slack when deciding whether a time lies on a hold grid.
constexpr double kGridSlack = 1e-9;

std::size_t latest_index_at_or_before(const std::vector<double>& times, double t) {
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return 0;
  return static_cast<std::size_t>(std::distance(times.begin(), it)) - 1;
}

}  // namespace

void WaypointTable::validate() const {
  if (times.size() != quats.size()) throw std::invalid_argument("waypoint times and quaternions differ in length");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) throw std::invalid_argument("waypoint time is not finite");
    if (i > 0 && !(times[i] > times[i - 1])) throw std::invalid_argument("waypoint times must strictly increase");
    if (!quats[i].is_unit(1e-6)) throw std::invalid_argument("waypoint quaternion is not unit norm");
  }
  if (hold_period < 0.0) throw std::invalid_argument("hold period must be non-negative");
}

WaypointTable sample_waypoints(const std::function<Quaternion(double)>& trajectory, double t0, double tf,
                               double period) {
  if (!(period > 0.0) || !(tf >= t0)) throw std::invalid_argument("sampling needs period > 0 and tf >= t0");
  WaypointTable table;
  table.hold_period = period;
  const auto count = static_cast<std::size_t>(std::floor((tf - t0) / period * (1.0 + kGridSlack))) + 1;
  table.times.reserve(count);
  table.quats.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = t0 + static_cast<double>(k) * period;
    table.times.push_back(t);
    table.quats.push_back(normalize(trajectory(t)));
  }
  return table;
}

WaypointTable downsample(const WaypointTable& table, double period) {
  if (!(period > 0.0)) throw std::invalid_argument("downsample period must be positive");
  WaypointTable out;
  out.hold_period = period;
  if (table.empty()) return out;
  const double t0 = table.times.front();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double k = (table.times[i] - t0) / period;
    if (std::abs(k - std::round(k)) <= kGridSlack * std::max(1.0, k)) {
      out.times.push_back(table.times[i]);
      out.quats.push_back(table.quats[i]);
    }
  }
  return out;
}

void CoefficientRecord::validate() const {
  if (order < 1) throw std::invalid_argument("coefficient record order must be >= 1");
  interval.validate();
  for (const auto& ch : channels) {
    if (ch.size() != static_cast<std::size_t>(order) + 1) {
      throw std::invalid_argument("each channel needs exactly N + 1 coefficients");
    }
  }
}

CoefficientRecord encode_trajectory(const std::function<Quaternion(double)>& trajectory, const Interval& interval,
                                    int order) {
  interval.validate();
  const std::vector<double> nodes = cgl_nodes(order);
  CoefficientRecord rec;
  rec.order = order;
  rec.interval = interval;
  for (auto& ch : rec.channels) ch.resize(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const Eigen::Vector4d q = trajectory(interval.to_time(nodes[j])).as_vector4();
    for (int c = 0; c < 4; ++c) rec.channels[c][j] = q(c);
  }
  return rec;
}

CglFilter::CglFilter(CoefficientRecord record) : record_(std::move(record)), grid_(std::max(record_.order, 1)) {
  record_.validate();
}

Eigen::Vector4d CglFilter::raw(double t) const {
  const Interval& iv = record_.interval;
  const double tau = std::clamp(iv.to_tau(std::clamp(t, iv.t0, iv.tf)), -1.0, 1.0);
  Eigen::Vector4d v;
  for (int c = 0; c < 4; ++c) v(c) = barycentric_eval(record_.channels[c], grid_, tau);
  return v;
}

Quaternion CglFilter::operator()(double t) const { return normalize(Quaternion::from_vector4(raw(t))); }

Quaternion command_at(double t, const CommandSource& source) {
  return std::visit(
      [t](const auto& s) -> Quaternion {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, CglFilter>) {
          return s(t);
        } else {
          if (s.table.empty()) throw std::invalid_argument("command source has no waypoints");
          double query = t;
          if constexpr (std::is_same_v<S, DownsampleHold>) {
            const double period = s.table.hold_period;
            if (period > 0.0) {
              const double t0 = s.table.times.front();
              // Slack keeps t = kT (up to rounding) on sample k.
              query = t0 + std::floor((t - t0) / period + kGridSlack) * period;
              query += kGridSlack * period;
            }
          }
          return s.table.quats[latest_index_at_or_before(s.table.times, query)];
        }
      },
      source);
}

std::size_t held_command_footprint(std::size_t count) { return count * kBytesPerHeldCommand; }

std::size_t coefficient_footprint(int order) {
  return static_cast<std::size_t>(4 * (order + 1) * kFloatBytes + 2 * kFloatBytes);
}

std::size_t footprint_bytes(const CommandSource& source) {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, CglFilter>) {
          return coefficient_footprint(s.record().order);
        } else if constexpr (std::is_same_v<S, DownsampleHold>) {
          // Only the waypoints that the hold grid actually reaches need uplinking.
          if (s.table.hold_period > 0.0) return held_command_footprint(downsample(s.table, s.table.hold_period).size());
          return held_command_footprint(s.table.size());
        } else {
          return held_command_footprint(s.table.size());
        }
      },
      source);
}

}  // namespace attsteer
