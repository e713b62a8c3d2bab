#include "attsteer/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "attsteer/error.hpp"
#include "attsteer/maneuver.hpp"
#include "attsteer/trajectory_io.hpp"
#include "attsteer/zdomain.hpp"

namespace attsteer {

namespace {

namespace pt = boost::property_tree;

constexpr double kDeg = std::numbers::pi / 180.0;

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s{
      {"spacecraft", {"inertia", "wheel_inertia", "wheel_axes", "wheel_cant_deg"}},
      {"controller", {"kp", "ki", "kr", "omega_max_degps", "integral_threshold_deg", "limiter"}},
      {"command",
       {"kind", "profile", "axis", "angle_deg", "rate_degps", "normalize", "span", "hold_period", "order", "file"}},
      {"initial", {"quaternion", "omega", "wheel_speeds"}},
      {"simulation", {"acs_period", "dt", "duration"}},
      {"output", {"trajectory_csv", "svg"}},
  };
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double to_number(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ConfigError(fmt::format("{}: '{}' is not a finite number", key, t));
  }
  return v;
}

std::vector<double> to_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(to_number(key, field));
  return out;
}

bool to_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "on" || t == "yes" || t == "1") return true;
  if (t == "false" || t == "off" || t == "no" || t == "0") return false;
  throw ConfigError(fmt::format("{}: '{}' is not a boolean", key, t));
}

class Section {
 public:
  Section(const pt::ptree* tree, std::string name) : tree_(tree), name_(std::move(name)) {}

  std::optional<std::string> raw(const std::string& key) const {
    if (!tree_) return std::nullopt;
    const auto v = tree_->get_optional<std::string>(key);
    if (!v) return std::nullopt;
    return trim(*v);
  }
  std::string qualified(const std::string& key) const { return name_ + "." + key; }

  double number(const std::string& key, double fallback) const {
    const auto v = raw(key);
    return v ? to_number(qualified(key), *v) : fallback;
  }
  std::vector<double> list(const std::string& key, std::size_t n, std::vector<double> fallback) const {
    const auto v = raw(key);
    if (!v) return fallback;
    auto out = to_list(qualified(key), *v);
    if (out.size() != n) throw ConfigError(fmt::format("{} needs {} values, got {}", qualified(key), n, out.size()));
    return out;
  }
  bool flag(const std::string& key, bool fallback) const {
    const auto v = raw(key);
    return v ? to_bool(qualified(key), *v) : fallback;
  }

 private:
  const pt::ptree* tree_;
  std::string name_;
};

Section section(const pt::ptree& root, const std::string& name) {
  const auto child = root.get_child_optional(name);
  return {child ? &*child : nullptr, name};
}

CommandKind parse_kind(const std::string& s) {
  if (s == "full_rate_hold") return CommandKind::FullRateHold;
  if (s == "downsample_hold") return CommandKind::DownsampleHold;
  if (s == "cgl_filter") return CommandKind::CglFilter;
  throw ConfigError(fmt::format("command.kind: unknown kind '{}'", s));
}

CommandProfile parse_profile(const std::string& s) {
  if (s == "step") return CommandProfile::Step;
  if (s == "ramp") return CommandProfile::Ramp;
  if (s == "maneuver") return CommandProfile::Maneuver;
  if (s == "waypoints") return CommandProfile::WaypointFile;
  if (s == "coefficients") return CommandProfile::CoefficientFile;
  throw ConfigError(fmt::format("command.profile: unknown profile '{}'", s));
}

SpacecraftParams parse_spacecraft(const Section& s) {
  Eigen::Matrix3d inertia = SpacecraftParams::default_config().inertia();
  if (const auto v = s.raw("inertia")) {
    const auto vals = to_list(s.qualified("inertia"), *v);
    if (vals.size() == 3) {
      inertia = Eigen::Vector3d(vals[0], vals[1], vals[2]).asDiagonal();
    } else if (vals.size() == 9) {
      inertia = Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(vals.data());
    } else {
      throw ConfigError("spacecraft.inertia needs 3 (diagonal) or 9 (row-major) values");
    }
  }
  const double wheel_inertia = s.number("wheel_inertia", 0.1);
  WheelAxes axes = SpacecraftParams::pyramid_axes(s.number("wheel_cant_deg", 45.0) * kDeg);
  if (const auto v = s.raw("wheel_axes"); v && *v != "pyramid") {
    const auto vals = to_list(s.qualified("wheel_axes"), *v);
    if (vals.size() != 12) throw ConfigError("spacecraft.wheel_axes needs 'pyramid' or 12 values");
    for (int c = 0; c < 4; ++c) axes.col(c) = Eigen::Vector3d(vals[3 * c], vals[3 * c + 1], vals[3 * c + 2]);
  }
  return {inertia, wheel_inertia, axes};
}

void check_schema(const pt::ptree& root) {
  for (const auto& [name, child] : root) {
    const auto it = schema().find(name);
    if (it == schema().end()) throw ConfigError(fmt::format("unknown section [{}]", name));
    for (const auto& [key, value] : child) {
      if (!it->second.contains(key)) throw ConfigError(fmt::format("unknown key '{}' in [{}]", key, name));
    }
  }
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  if (p.empty()) return {};
  std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

}  // namespace

ScenarioConfig parse_scenario(std::istream& is, const std::filesystem::path& base_dir) {
  pt::ptree root;
  try {
    pt::read_ini(is, root);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(fmt::format("scenario syntax error at line {}: {}", e.line(), e.message()));
  }
  check_schema(root);

  ScenarioConfig cfg;
  try {
    cfg.sim.params = parse_spacecraft(section(root, "spacecraft"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  const Section ctl = section(root, "controller");
  cfg.sim.gains.kp = ctl.number("kp", cfg.sim.gains.kp);
  cfg.sim.gains.ki = ctl.number("ki", cfg.sim.gains.ki);
  cfg.sim.gains.kr = ctl.number("kr", cfg.sim.gains.kr);
  cfg.sim.gains.omega_max = ctl.number("omega_max_degps", cfg.sim.gains.omega_max / kDeg) * kDeg;
  cfg.sim.integral_threshold = ctl.number("integral_threshold_deg", cfg.sim.integral_threshold / kDeg) * kDeg;

  const Section cmd = section(root, "command");
  CommandSpec& spec = cfg.command;
  if (const auto v = cmd.raw("kind")) spec.kind = parse_kind(*v);
  if (const auto v = cmd.raw("profile")) spec.profile = parse_profile(*v);
  const auto axis = cmd.list("axis", 3, {0.0, 0.0, 1.0});
  spec.axis = Eigen::Vector3d(axis[0], axis[1], axis[2]);
  if (!(spec.axis.norm() > 0.0)) throw ConfigError("command.axis must be non-zero");
  spec.axis.normalize();
  spec.angle = cmd.number("angle_deg", 0.0) * kDeg;
  spec.rate = cmd.number("rate_degps", 0.0) * kDeg;
  spec.normalize = cmd.flag("normalize", false);
  if (cmd.raw("span")) spec.span = cmd.number("span", 0.0);
  spec.hold_period = cmd.number("hold_period", spec.hold_period);
  const double order = cmd.number("order", spec.order);
  if (order != std::floor(order) || order < 1) throw ConfigError("command.order must be a positive integer");
  spec.order = static_cast<int>(order);
  if (const auto v = cmd.raw("file")) spec.file = resolve(base_dir, *v);

  // Steady steering runs without the limiter; step regulation uses it.
  cfg.sim.limiter_on = ctl.flag("limiter", spec.profile == CommandProfile::Step);

  const Section init = section(root, "initial");
  const auto q = init.list("quaternion", 4, {0.0, 0.0, 0.0, 1.0});
  cfg.sim.initial.q = Quaternion(q[0], q[1], q[2], q[3]);
  const auto w = init.list("omega", 3, {0.0, 0.0, 0.0});
  cfg.sim.initial.omega = Eigen::Vector3d(w[0], w[1], w[2]);
  const auto ws = init.list("wheel_speeds", 4, {0.0, 0.0, 0.0, 0.0});
  cfg.sim.initial.wheel_speeds = Vector4(ws[0], ws[1], ws[2], ws[3]);

  const Section sim = section(root, "simulation");
  cfg.sim.acs_period = sim.number("acs_period", cfg.sim.acs_period);
  cfg.sim.dt = sim.number("dt", cfg.sim.dt);
  cfg.sim.duration = sim.number("duration", cfg.sim.duration);

  const Section out = section(root, "output");
  if (const auto v = out.raw("trajectory_csv")) cfg.output.trajectory_csv = resolve(base_dir, *v);
  if (const auto v = out.raw("svg")) cfg.output.svg = resolve(base_dir, *v);

  cfg.sim.gains.validate();
  cfg.sim.validate();
  if (spec.kind == CommandKind::DownsampleHold && !(spec.hold_period > 0.0)) {
    throw ConfigError("command.hold_period must be positive");
  }
  if ((spec.profile == CommandProfile::WaypointFile || spec.profile == CommandProfile::CoefficientFile) &&
      spec.file.empty()) {
    throw ConfigError("command.file is required for file-based profiles");
  }
  if (spec.profile == CommandProfile::CoefficientFile && spec.kind != CommandKind::CglFilter) {
    throw ConfigError("coefficient files can only drive kind = cgl_filter");
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open scenario '{}'", path.string()));
  return parse_scenario(in, path.parent_path());
}

double command_span(const ScenarioConfig& cfg) {
  if (cfg.command.span) return *cfg.command.span;
  if (cfg.command.profile == CommandProfile::Maneuver) return SyntheticManeuver::Shape{}.duration;
  return cfg.sim.duration;
}

CommandSource build_command_source(const ScenarioConfig& cfg) {
  const CommandSpec& spec = cfg.command;
  const double span = command_span(cfg);
  if (!(span > 0.0)) throw ConfigError("command span must be positive");

  if (spec.profile == CommandProfile::CoefficientFile) return CglFilter(load_coefficients(spec.file));

  if (spec.profile == CommandProfile::WaypointFile) {
    WaypointTable table = load_waypoints(spec.file);
    switch (spec.kind) {
      case CommandKind::FullRateHold:
        return FullRateHold{std::move(table)};
      case CommandKind::DownsampleHold:
        table.hold_period = spec.hold_period;
        return DownsampleHold{std::move(table)};
      case CommandKind::CglFilter: {
        const CommandSource dense = FullRateHold{table};
        const Interval iv{table.times.front(), table.times.back()};
        return CglFilter(encode_trajectory([&](double t) { return command_at(t, dense); }, iv, spec.order));
      }
    }
  }

  std::function<Quaternion(double)> reference;
  switch (spec.profile) {
    case CommandProfile::Step: {
      const Quaternion target = Quaternion::from_axis_angle(spec.axis, spec.angle);
      reference = [target](double) { return target; };
      break;
    }
    case CommandProfile::Ramp: {
      double rate = spec.rate;
      if (spec.normalize) {
        const double period = spec.kind == CommandKind::DownsampleHold ? spec.hold_period : cfg.sim.acs_period;
        const SecondOrder loop = gains_to_second_order(cfg.sim.gains);
        rate *= normalizing_gain(zoh_rate_tf(loop.omega_n, loop.zeta, period));
      }
      reference = RampProfile{spec.axis, rate, 0.0, cfg.sim.initial.q};
      break;
    }
    case CommandProfile::Maneuver: {
      SyntheticManeuver::Shape shape;
      shape.duration = span;
      shape.rate_limit = cfg.sim.gains.omega_max;
      reference = SyntheticManeuver(shape);
      break;
    }
    default:
      throw ConfigError("unsupported command profile");
  }

  switch (spec.kind) {
    case CommandKind::FullRateHold:
      return FullRateHold{sample_waypoints(reference, 0.0, span, cfg.sim.acs_period)};
    case CommandKind::DownsampleHold:
      return DownsampleHold{sample_waypoints(reference, 0.0, span, spec.hold_period)};
    case CommandKind::CglFilter:
      return CglFilter(encode_trajectory(reference, Interval{0.0, span}, spec.order));
  }
  throw ConfigError("unsupported command kind");
}

}  // namespace attsteer
