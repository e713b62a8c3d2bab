#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "attsteer/simulation.hpp"
#include "attsteer/zdomain.hpp"

namespace attsteer {

inline constexpr const char* kTrajectoryCsvHeader =
    "t,q1,q2,q3,q4,wx,wy,wz,W1,W2,W3,W4,qt1,qt2,qt3,qt4,tcx,tcy,tcz";

void write_trajectory_csv(std::ostream& os, const TrajectoryLog& log);
void write_single_axis_csv(std::ostream& os, const SingleAxisLog& log);

/// Columns T,m_star,omega_peak_degps.
void write_ripple_csv(std::ostream& os, const std::vector<RippleReport>& reports);

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool markers = false;  // draw points instead of polylines
};

/// Self-contained SVG line chart with auto-scaled axes.
void write_svg_chart(std::ostream& os, const ChartSpec& spec, const std::vector<Series>& series);

/// Pole-zero map on the z-plane with the unit circle. Zeros as circles,
/// poles as crosses.
void write_svg_pole_zero(std::ostream& os, const std::string& title, const std::vector<PoleZero>& maps,
                         const std::vector<std::string>& labels);

/// Body rates in deg/s against time, one series per axis.
std::vector<Series> rate_series(const TrajectoryLog& log);

}  // namespace attsteer
