#include "attsteer/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace attsteer {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double x0, x1, y0, y1;
  static constexpr double kWidth = 800, kHeight = 480, kLeft = 80, kRight = 160, kTop = 40, kBottom = 60;

  double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); }
  double py(double y) const { return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom); }
};

void widen(double& lo, double& hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    lo = 0.0;
    hi = 1.0;
  } else if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi))) {
    lo -= 0.5;
    hi += 0.5;
  }
}

void open_svg(std::ostream& os, const std::string& title) {
  fmt::print(os, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" font-family=\"sans-serif\" "
                 "font-size=\"12\">\n",
             Frame::kWidth, Frame::kHeight);
  fmt::print(os, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
  fmt::print(os, "<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n", Frame::kWidth / 2,
             escape(title));
}

void draw_axes(std::ostream& os, const Frame& f, const std::string& xl, const std::string& yl) {
  const double l = Frame::kLeft, r = Frame::kWidth - Frame::kRight;
  const double t = Frame::kTop, b = Frame::kHeight - Frame::kBottom;
  fmt::print(os, "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n", l, t, r - l,
             b - t);
  for (int i = 0; i <= 5; ++i) {
    const double xv = f.x0 + (f.x1 - f.x0) * i / 5.0;
    const double yv = f.y0 + (f.y1 - f.y0) * i / 5.0;
    fmt::print(os, "<text x=\"{:.1f}\" y=\"{}\" text-anchor=\"middle\">{:.4g}</text>\n", f.px(xv), b + 16, xv);
    fmt::print(os, "<text x=\"{}\" y=\"{:.1f}\" text-anchor=\"end\">{:.4g}</text>\n", l - 6, f.py(yv) + 4, yv);
    fmt::print(os, "<line x1=\"{:.1f}\" y1=\"{}\" x2=\"{:.1f}\" y2=\"{}\" stroke=\"#ddd\"/>\n", f.px(xv), t, f.px(xv),
               b);
    fmt::print(os, "<line x1=\"{}\" y1=\"{:.1f}\" x2=\"{}\" y2=\"{:.1f}\" stroke=\"#ddd\"/>\n", l, f.py(yv), r,
               f.py(yv));
  }
  fmt::print(os, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", (l + r) / 2, b + 40, escape(xl));
  fmt::print(os, "<text x=\"20\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {})\">{}</text>\n",
             (t + b) / 2, (t + b) / 2, escape(yl));
}

void draw_legend(std::ostream& os, const std::vector<std::string>& names) {
  const double x = Frame::kWidth - Frame::kRight + 16;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const double y = Frame::kTop + 16 + 18 * static_cast<double>(i);
    const char* color = kPalette[i % std::size(kPalette)];
    fmt::print(os, "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"/>\n", x, y - 4,
               x + 20, y - 4, color);
    fmt::print(os, "<text x=\"{}\" y=\"{}\">{}</text>\n", x + 26, y, escape(names[i]));
  }
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const TrajectoryLog& log) {
  os << kTrajectoryCsvHeader << '\n';
  for (const auto& s : log) {
    fmt::print(os, "{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},", s.t, s.q.vec.x(), s.q.vec.y(),
               s.q.vec.z(), s.q.scalar, s.omega.x(), s.omega.y(), s.omega.z());
    fmt::print(os, "{:.12g},{:.12g},{:.12g},{:.12g},", s.wheel_speeds(0), s.wheel_speeds(1), s.wheel_speeds(2),
               s.wheel_speeds(3));
    fmt::print(os, "{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g}\n", s.q_tgt.vec.x(), s.q_tgt.vec.y(),
               s.q_tgt.vec.z(), s.q_tgt.scalar, s.torque.x(), s.torque.y(), s.torque.z());
  }
}

void write_single_axis_csv(std::ostream& os, const SingleAxisLog& log) {
  os << "t,phi,omega,phi_cmd\n";
  for (const auto& s : log) fmt::print(os, "{:.12g},{:.12g},{:.12g},{:.12g}\n", s.t, s.phi, s.omega, s.phi_cmd);
}

void write_ripple_csv(std::ostream& os, const std::vector<RippleReport>& reports) {
  os << "T,m_star,omega_peak_degps\n";
  for (const auto& r : reports) fmt::print(os, "{:.10g},{:.10g},{:.10g}\n", r.T, r.m_star, r.omega_peak);
}

void write_svg_chart(std::ostream& os, const ChartSpec& spec, const std::vector<Series>& series) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series) {
    for (double v : s.x) x0 = std::min(x0, v), x1 = std::max(x1, v);
    for (double v : s.y) y0 = std::min(y0, v), y1 = std::max(y1, v);
  }
  widen(x0, x1);
  widen(y0, y1);
  const double pad = 0.05 * (y1 - y0);
  const Frame f{x0, x1, y0 - pad, y1 + pad};

  open_svg(os, spec.title);
  draw_axes(os, f, spec.x_label, spec.y_label);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kPalette[i % std::size(kPalette)];
    const std::size_t n = std::min(s.x.size(), s.y.size());
    names.push_back(s.name);
    if (spec.markers) {
      for (std::size_t k = 0; k < n; ++k) {
        fmt::print(os, "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2\" fill=\"{}\"/>\n", f.px(s.x[k]), f.py(s.y[k]),
                   color);
      }
      continue;
    }
    // Thin dense series so the file stays a manageable size.
    const std::size_t stride = std::max<std::size_t>(1, n / 4000);
    fmt::print(os, "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"", color);
    for (std::size_t k = 0; k < n; k += stride) fmt::print(os, "{:.2f},{:.2f} ", f.px(s.x[k]), f.py(s.y[k]));
    if (n > 0 && (n - 1) % stride != 0) fmt::print(os, "{:.2f},{:.2f}", f.px(s.x[n - 1]), f.py(s.y[n - 1]));
    os << "\"/>\n";
  }
  draw_legend(os, names);
  os << "</svg>\n";
}

void write_svg_pole_zero(std::ostream& os, const std::string& title, const std::vector<PoleZero>& maps,
                         const std::vector<std::string>& labels) {
  double lim = 1.2;
  for (const auto& m : maps) {
    for (const auto& z : m.zeros) lim = std::max(lim, 1.1 * std::abs(z));
    for (const auto& p : m.poles) lim = std::max(lim, 1.1 * std::abs(p));
  }
  const Frame f{-lim, lim, -lim, lim};
  open_svg(os, title);
  draw_axes(os, f, "Re z", "Im z");
  std::string circle;
  for (int i = 0; i <= 128; ++i) {
    const double a = 2.0 * std::numbers::pi * i / 128.0;
    circle += fmt::format("{:.2f},{:.2f} ", f.px(std::cos(a)), f.py(std::sin(a)));
  }
  fmt::print(os, "<polyline fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 3\" points=\"{}\"/>\n", circle);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    for (const auto& z : maps[i].zeros) {
      fmt::print(os, "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"5\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
                 f.px(z.real()), f.py(z.imag()), color);
    }
    for (const auto& p : maps[i].poles) {
      const double x = f.px(p.real()), y = f.py(p.imag());
      fmt::print(os,
                 "<path d=\"M{:.2f},{:.2f} L{:.2f},{:.2f} M{:.2f},{:.2f} L{:.2f},{:.2f}\" stroke=\"{}\" "
                 "stroke-width=\"1.5\"/>\n",
                 x - 5, y - 5, x + 5, y + 5, x - 5, y + 5, x + 5, y - 5, color);
    }
  }
  std::vector<std::string> names(labels.begin(), labels.end());
  names.resize(maps.size());
  draw_legend(os, names);
  os << "</svg>\n";
}

std::vector<Series> rate_series(const TrajectoryLog& log) {
  std::vector<Series> out{{"wx", {}, {}}, {"wy", {}, {}}, {"wz", {}, {}}};
  for (const auto& s : log) {
    for (int a = 0; a < 3; ++a) {
      out[a].x.push_back(s.t);
      out[a].y.push_back(s.omega(a) * kRadToDeg);
    }
  }
  return out;
}

}  // namespace attsteer
