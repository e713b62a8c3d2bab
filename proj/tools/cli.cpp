#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "attsteer/chebyshev.hpp"
#include "attsteer/command_source.hpp"
#include "attsteer/error.hpp"
#include "attsteer/maneuver.hpp"
#include "attsteer/report.hpp"
#include "attsteer/scenario.hpp"
#include "attsteer/simulation.hpp"
#include "attsteer/trajectory_io.hpp"
#include "attsteer/zdomain.hpp"

namespace attsteer {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError(fmt::format("cannot write '{}'", path));
  return f;
}

struct LoopOptions {
  double wn = 0.24;
  double zeta = 0.85;
  double wmax = 0.13;  // deg/s
};

void add_loop_options(CLI::App* cmd, LoopOptions& o) {
  cmd->add_option("--wn", o.wn, "Natural frequency, rad/s")->capture_default_str();
  cmd->add_option("--zeta", o.zeta, "Damping ratio")->capture_default_str();
  cmd->add_option("--wmax", o.wmax, "Rate limit, deg/s")->capture_default_str();
}

std::string format_complex(std::complex<double> z) {
  if (std::abs(z.imag()) < 1e-12) return fmt::format("{:.6g}", z.real());
  return fmt::format("{:.6g}{:+.6g}j", z.real(), z.imag());
}

std::string join_roots(const std::vector<std::complex<double>>& roots) {
  std::string s;
  for (const auto& r : roots) s += (s.empty() ? "" : " ") + format_complex(r);
  return s;
}

// --- simulate ---------------------------------------------------------------

struct SimulateOptions {
  std::string config;
  std::string csv;
  std::string svg;
};

int run_simulate(const SimulateOptions& o, std::ostream& out) {
  ScenarioConfig cfg = load_scenario(o.config);
  if (!o.csv.empty()) cfg.output.trajectory_csv = o.csv;
  if (!o.svg.empty()) cfg.output.svg = o.svg;

  const CommandSource source = build_command_source(cfg);
  const TrajectoryLog log = integrate_closed_loop(cfg.sim, source);

  if (cfg.output.svg.string().size()) {
    std::ofstream f = open_output(cfg.output.svg.string());
    write_svg_chart(f, {"Body rates", "t (s)", "rate (deg/s)"}, rate_series(log));
  }
  if (cfg.output.trajectory_csv.empty()) {
    write_trajectory_csv(out, log);
    return kExitOk;
  }
  std::ofstream f = open_output(cfg.output.trajectory_csv.string());
  write_trajectory_csv(f, log);
  fmt::print(out, "samples={} peak_rate_degps={:.6f} command_footprint_bytes={}\n", log.size(),
             peak_axis_rate(log) / kDeg, footprint_bytes(source));
  return kExitOk;
}

// --- analyze-ripple / table1 ------------------------------------------------

struct RippleOptions {
  LoopOptions loop;
  std::vector<double> periods;
  std::string csv;
  std::string gain_svg;
  std::string pz_svg;
  int gain_samples = 100;
};

int run_ripple(const RippleOptions& o, std::ostream& out) {
  std::vector<RippleReport> reports;
  for (double T : o.periods) reports.push_back(analyze_ripple(o.loop.wn, o.loop.zeta, T, o.loop.wmax, o.gain_samples));

  write_ripple_csv(out, reports);
  if (!o.csv.empty()) {
    std::ofstream f = open_output(o.csv);
    write_ripple_csv(f, reports);
  }
  if (!o.gain_svg.empty()) {
    std::vector<Series> series;
    for (const auto& r : reports) {
      Series s{fmt::format("T = {:g} s", r.T), {}, {}};
      for (const auto& g : r.gain) {
        s.x.push_back(g.m);
        s.y.push_back(g.gain_db);
      }
      series.push_back(std::move(s));
    }
    std::ofstream f = open_output(o.gain_svg);
    write_svg_chart(f, {"Normalizing gain", "m", "K (dB)"}, series);
  }
  if (!o.pz_svg.empty()) {
    std::vector<PoleZero> maps;
    std::vector<std::string> labels;
    for (const auto& r : reports) {
      maps.push_back(r.pole_zero);
      labels.push_back(fmt::format("T={:g}, m={:.3f}", r.T, r.m_star));
    }
    std::ofstream f = open_output(o.pz_svg);
    write_svg_pole_zero(f, "Pole-zero map at m*", maps, labels);
  }
  return kExitOk;
}

// --- encode / decode --------------------------------------------------------

struct EncodeOptions {
  std::string input = "ramp";
  double rate = 0.13;  // deg/s
  std::vector<double> axis{0.0, 0.0, 1.0};
  std::string waypoints;
  std::optional<double> t0;
  std::optional<double> tf;
  int order = 5;
  std::string out;
};

int run_encode(const EncodeOptions& o, std::ostream& out) {
  std::function<Quaternion(double)> reference;
  Interval iv{o.t0.value_or(0.0), o.tf.value_or(60.0)};
  const bool ramp = o.input == "ramp";
  const Eigen::Vector3d axis(o.axis[0], o.axis[1], o.axis[2]);
  if (ramp) {
    if (!(axis.norm() > 0.0)) throw ConfigError("--axis must be non-zero");
    reference = RampProfile{axis.normalized(), o.rate * kDeg, 0.0, Quaternion::identity()};
  } else {
    if (o.waypoints.empty()) throw ConfigError("--input waypoints needs --waypoints FILE");
    const CommandSource table = FullRateHold{load_waypoints(o.waypoints)};
    const auto& times = std::get<FullRateHold>(table).table.times;
    iv = Interval{o.t0.value_or(times.front()), o.tf.value_or(times.back())};
    reference = [table](double t) { return command_at(t, table); };
  }
  const CoefficientRecord record = encode_trajectory(reference, iv, o.order);
  if (!o.out.empty()) save_coefficients(o.out, record);

  const CglGrid grid(o.order);
  out << (ramp ? "j,tau_j,t_j,angle_deg\n" : "j,tau_j,t_j,q1,q2,q3,q4\n");
  for (int j = 0; j <= o.order; ++j) {
    const double tau = grid.nodes()[j];
    const double t = iv.to_time(tau);
    if (ramp) {
      fmt::print(out, "{},{:.4f},{:.4f},{:.4f}\n", j, tau, t, o.rate * t);
    } else {
      fmt::print(out, "{},{:.4f},{:.4f},{:.9f},{:.9f},{:.9f},{:.9f}\n", j, tau, t, record.channels[0][j],
                 record.channels[1][j], record.channels[2][j], record.channels[3][j]);
    }
  }
  return kExitOk;
}

struct DecodeOptions {
  std::string coeffs;
  double rate_hz = 5.0;
  std::string out;
};

int run_decode(const DecodeOptions& o, std::ostream& out) {
  if (!(o.rate_hz > 0.0)) throw ConfigError("--rate must be positive");
  const CglFilter filter(load_coefficients(o.coeffs));
  const Interval iv = filter.record().interval;
  WaypointTable table = sample_waypoints(std::cref(filter), iv.t0, iv.tf, 1.0 / o.rate_hz);
  if (o.out.empty()) {
    write_waypoints(out, table);
  } else {
    save_waypoints(o.out, table);
  }
  return kExitOk;
}

// --- footprint ----------------------------------------------------------------

struct FootprintOptions {
  std::optional<std::size_t> held;
  std::optional<double> duration;
  std::optional<double> period;
  std::optional<int> order;
  std::string coeffs;
  std::string waypoints;
};

void print_footprint(std::ostream& out, const std::string& what, std::size_t bytes) {
  fmt::print(out, "{}: {} bytes ({:.2f} kB)\n", what, bytes, bytes / 1000.0);
}

int run_footprint(const FootprintOptions& o, std::ostream& out) {
  bool any = false;
  if (o.held) {
    print_footprint(out, fmt::format("{} held commands", *o.held), held_command_footprint(*o.held));
    any = true;
  }
  if (o.duration || o.period) {
    if (!o.duration || !o.period) throw ConfigError("--duration and --period go together");
    if (!(*o.duration > 0.0) || !(*o.period > 0.0)) throw ConfigError("--duration and --period must be positive");
    const auto count = static_cast<std::size_t>(std::ceil(*o.duration / *o.period - 1e-9));
    print_footprint(out, fmt::format("{} held commands ({:g} s every {:g} s)", count, *o.duration, *o.period),
                    held_command_footprint(count));
    any = true;
  }
  if (o.order) {
    if (*o.order < 1) throw ConfigError("--order must be at least 1");
    print_footprint(out, fmt::format("CGL record, order {} ({} coefficients x 4 channels)", *o.order, *o.order + 1),
                    coefficient_footprint(*o.order));
    any = true;
  }
  if (!o.coeffs.empty()) {
    print_footprint(out, o.coeffs, footprint_bytes(CglFilter(load_coefficients(o.coeffs))));
    any = true;
  }
  if (!o.waypoints.empty()) {
    print_footprint(out, o.waypoints, footprint_bytes(FullRateHold{load_waypoints(o.waypoints)}));
    any = true;
  }
  if (!any) throw ConfigError("footprint needs --held, --duration/--period, --order, --coeffs or --waypoints");
  return kExitOk;
}

// --- pole-zero ----------------------------------------------------------------

struct PoleZeroOptions {
  LoopOptions loop;
  double T = 10.0;
  std::vector<double> offsets{0.2, 0.5, 0.9};
  std::string svg;
};

int run_pole_zero(const PoleZeroOptions& o, std::ostream& out) {
  std::vector<PoleZero> maps;
  std::vector<std::string> labels;
  const PoleZero zoh = pole_zero(zoh_rate_tf(o.loop.wn, o.loop.zeta, o.T));
  fmt::print(out, "zoh zeros: {} poles: {}\n", join_roots(zoh.zeros), join_roots(zoh.poles));
  for (double m : o.offsets) {
    const PoleZero pz = pole_zero(modified_rate_tf(o.loop.wn, o.loop.zeta, o.T, m));
    fmt::print(out, "m={:g} zeros: {} poles: {}\n", m, join_roots(pz.zeros), join_roots(pz.poles));
    maps.push_back(pz);
    labels.push_back(fmt::format("m = {:g}", m));
  }
  if (!o.svg.empty()) {
    std::ofstream f = open_output(o.svg);
    write_svg_pole_zero(f, fmt::format("Modified transfer function, T = {:g} s", o.T), maps, labels);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Attitude steering simulation and command-compression toolkit", "attsteer"};
  app.require_subcommand(1);
  int status = kExitOk;

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Run a closed-loop scenario and write its trajectory CSV");
  simulate->add_option("--config", sim.config, "Scenario file")->required()->check(CLI::ExistingFile);
  simulate->add_option("--out", sim.csv, "Trajectory CSV (default: stdout)");
  simulate->add_option("--svg", sim.svg, "Body-rate chart");
  simulate->callback([&] { status = run_simulate(sim, out); });

  RippleOptions ripple;
  auto* analyze = app.add_subcommand("analyze-ripple", "Steady-state ripple peak for downsample periods");
  add_loop_options(analyze, ripple.loop);
  analyze->add_option("--T", ripple.periods, "Hold period(s), s")->required()->check(CLI::PositiveNumber);
  analyze->add_option("--csv", ripple.csv, "Also write the CSV here");
  analyze->add_option("--gain-svg", ripple.gain_svg, "Normalizing-gain curve");
  analyze->add_option("--pz-svg", ripple.pz_svg, "Pole-zero map at m*");
  analyze->add_option("--gain-samples", ripple.gain_samples, "Points on the gain curve")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  analyze->callback([&] { status = run_ripple(ripple, out); });

  RippleOptions table;
  table.periods = {10.0, 5.0, 2.0, 1.0, 0.2};
  auto* table1 = app.add_subcommand("table1", "Ripple peak for T = 10, 5, 2, 1, 0.2 s");
  add_loop_options(table1, table.loop);
  table1->add_option("--csv", table.csv, "Also write the CSV here");
  table1->callback([&] { status = run_ripple(table, out); });

  EncodeOptions enc;
  auto* encode = app.add_subcommand("encode", "Encode a trajectory as CGL filter coefficients");
  encode->add_option("--input", enc.input, "ramp or waypoints")
      ->capture_default_str()
      ->check(CLI::IsMember({"ramp", "waypoints"}));
  encode->add_option("--rate", enc.rate, "Ramp rate, deg/s")->capture_default_str();
  encode->add_option("--axis", enc.axis, "Ramp axis")->expected(3)->delimiter(',');
  encode->add_option("--waypoints", enc.waypoints, "Waypoint file for --input waypoints")->check(CLI::ExistingFile);
  encode->add_option("--t0", enc.t0, "Interval start, s");
  encode->add_option("--tf", enc.tf, "Interval end, s");
  encode->add_option("--N", enc.order, "Filter order (N + 1 nodes)")->capture_default_str()->check(CLI::PositiveNumber);
  encode->add_option("--out", enc.out, "Coefficient file");
  encode->callback([&] { status = run_encode(enc, out); });

  DecodeOptions dec;
  auto* decode = app.add_subcommand("decode", "Evaluate a coefficient file into waypoints");
  decode->add_option("--coeffs", dec.coeffs, "Coefficient file")->required()->check(CLI::ExistingFile);
  decode->add_option("--rate", dec.rate_hz, "Output rate, Hz")->capture_default_str();
  decode->add_option("--out", dec.out, "Waypoint file (default: stdout)");
  decode->callback([&] { status = run_decode(dec, out); });

  FootprintOptions fp;
  auto* footprint = app.add_subcommand("footprint", "Command-buffer memory footprint");
  footprint->add_option("--held", fp.held, "Number of held commands");
  footprint->add_option("--duration", fp.duration, "Slew duration, s");
  footprint->add_option("--period", fp.period, "Command period, s");
  footprint->add_option("--order", fp.order, "CGL filter order");
  footprint->add_option("--coeffs", fp.coeffs, "Coefficient file")->check(CLI::ExistingFile);
  footprint->add_option("--waypoints", fp.waypoints, "Waypoint file")->check(CLI::ExistingFile);
  footprint->callback([&] { status = run_footprint(fp, out); });

  PoleZeroOptions pzo;
  auto* pz = app.add_subcommand("pole-zero", "Zeros and poles of the hold and modified transfer functions");
  add_loop_options(pz, pzo.loop);
  pz->add_option("--T", pzo.T, "Hold period, s")->capture_default_str()->check(CLI::PositiveNumber);
  pz->add_option("--m", pzo.offsets, "Sample offsets in [0, 1)");
  pz->add_option("--svg", pzo.svg, "Pole-zero map");
  pz->callback([&] { status = run_pole_zero(pzo, out); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const ConfigError& e) {
    fmt::print(err, "config error: {}\n", e.what());
    return kExitConfig;
  } catch (const NumericError& e) {
    fmt::print(err, "numeric failure: {}\n", e.what());
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "invalid input: {}\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitConfig;
  }
  return status;
}

}  // namespace attsteer
