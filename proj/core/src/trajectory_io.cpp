#include "attsteer/trajectory_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "attsteer/error.hpp"

namespace attsteer {

namespace {

constexpr const char* kWaypointHeader = "# waypoints v1";
constexpr const char* kCoefficientTag = "# cglcoef v1";

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, std::size_t line_no) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(fmt::format("line {}: '{}' is not a number", line_no, t));
  }
  return v;
}

std::vector<double> parse_row(const std::string& line, std::size_t expected, std::size_t line_no) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(parse_number(field, line_no));
  if (out.size() != expected) {
    throw ConfigError(fmt::format("line {}: expected {} fields, found {}", line_no, expected, out.size()));
  }
  return out;
}

template <typename Reader>
auto load_file(const std::filesystem::path& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open '{}'", path.string()));
  return reader(in);
}

template <typename Writer, typename T>
void save_file(const std::filesystem::path& path, const T& value, Writer writer) {
  std::ofstream out(path);
  if (!out) throw ConfigError(fmt::format("cannot write '{}'", path.string()));
  writer(out, value);
  if (!out) throw ConfigError(fmt::format("failed writing '{}'", path.string()));
}

}  // namespace

std::string format_exact(double v) { return fmt::format("{:.17g}", v); }

void write_waypoints(std::ostream& os, const WaypointTable& table) {
  os << kWaypointHeader << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Quaternion& q = table.quats[i];
    os << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", table.times[i], q.vec.x(), q.vec.y(),
                      q.vec.z(), q.scalar);
  }
}

WaypointTable read_waypoints(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(is, line) || trim(line) != kWaypointHeader) {
    throw ConfigError("waypoint file must start with '# waypoints v1'");
  }
  ++line_no;
  WaypointTable table;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto row = parse_row(t, 5, line_no);
    table.times.push_back(row[0]);
    table.quats.emplace_back(row[1], row[2], row[3], row[4]);
  }
  if (table.size() >= 2) table.hold_period = table.times[1] - table.times[0];
  try {
    table.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(fmt::format("invalid waypoint file: {}", e.what()));
  }
  return table;
}

void write_coefficients(std::ostream& os, const CoefficientRecord& record) {
  os << fmt::format("{} N={} t0={:.17g} tf={:.17g}\n", kCoefficientTag, record.order, record.interval.t0,
                    record.interval.tf);
  for (std::size_t j = 0; j < record.channels[0].size(); ++j) {
    os << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", record.channels[0][j], record.channels[1][j],
                      record.channels[2][j], record.channels[3][j]);
  }
}

CoefficientRecord read_coefficients(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("empty coefficient file");
  const std::string header = trim(line);
  if (header.rfind(kCoefficientTag, 0) != 0) throw ConfigError("coefficient file must start with '# cglcoef v1'");

  CoefficientRecord rec;
  bool have_n = false, have_t0 = false, have_tf = false;
  std::stringstream ss(header.substr(std::string(kCoefficientTag).size()));
  std::string token;
  while (ss >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ConfigError(fmt::format("malformed header field '{}'", token));
    const std::string key = token.substr(0, eq);
    const double value = parse_number(token.substr(eq + 1), 1);
    if (key == "N") {
      rec.order = static_cast<int>(value);
      if (rec.order != value) throw ConfigError("header N must be an integer");
      have_n = true;
    } else if (key == "t0") {
      rec.interval.t0 = value;
      have_t0 = true;
    } else if (key == "tf") {
      rec.interval.tf = value;
      have_tf = true;
    } else {
      throw ConfigError(fmt::format("unknown header field '{}'", key));
    }
  }
  if (!have_n || !have_t0 || !have_tf) throw ConfigError("coefficient header needs N, t0 and tf");

  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto row = parse_row(t, 4, line_no);
    for (int c = 0; c < 4; ++c) rec.channels[c].push_back(row[c]);
  }
  try {
    rec.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(fmt::format("invalid coefficient file: {}", e.what()));
  }
  return rec;
}

void save_waypoints(const std::filesystem::path& path, const WaypointTable& table) {
  save_file(path, table, [](std::ostream& os, const WaypointTable& t) { write_waypoints(os, t); });
}

WaypointTable load_waypoints(const std::filesystem::path& path) {
  return load_file(path, [](std::istream& is) { return read_waypoints(is); });
}

void save_coefficients(const std::filesystem::path& path, const CoefficientRecord& record) {
  save_file(path, record, [](std::ostream& os, const CoefficientRecord& r) { write_coefficients(os, r); });
}

CoefficientRecord load_coefficients(const std::filesystem::path& path) {
  return load_file(path, [](std::istream& is) { return read_coefficients(is); });
}

}  // namespace attsteer
