#include "attsteer/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace attsteer {

namespace {
constexpr double kNodeGuard = 1e-14;
}

std::vector<double> cgl_nodes(int order) {
  if (order < 1) throw std::invalid_argument("CGL order must be >= 1");
  std::vector<double> nodes(static_cast<std::size_t>(order) + 1);
  // -cos(pi j / N) == sin(pi (2j - N) / (2N)); the sine form is exactly
  // antisymmetric about the midpoint.
  for (int j = 0; j <= order; ++j) {
    nodes[j] = std::sin(std::numbers::pi * (2.0 * j - order) / (2.0 * order));
  }
  nodes.front() = -1.0;
  nodes.back() = 1.0;
  return nodes;
}

std::vector<double> barycentric_weights(std::span<const double> nodes) {
  std::vector<double> w(nodes.size(), 1.0);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    double prod = 1.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i == j) continue;
      const double d = nodes[j] - nodes[i];
      if (d == 0.0) throw std::invalid_argument("barycentric weights need distinct nodes");
      prod *= d;
    }
    w[j] = 1.0 / prod;
  }
  return w;
}

CglGrid::CglGrid(int order) : order_(order), nodes_(cgl_nodes(order)), weights_(barycentric_weights(nodes_)) {}

double chebyshev_T(int j, double tau) {
  if (j < 0) throw std::invalid_argument("Chebyshev degree must be non-negative");
  if (j == 0) return 1.0;
  double prev = 1.0;
  double cur = tau;
  for (int k = 1; k < j; ++k) {
    const double next = 2.0 * tau * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev_T_derivative(int n, double tau) {
  if (n < 0) throw std::invalid_argument("Chebyshev degree must be non-negative");
  if (n == 0) return 0.0;
  if (tau == 1.0) return static_cast<double>(n) * n;
  if (tau == -1.0) return ((n % 2 == 0) ? -1.0 : 1.0) * n * n;
  // U_{n-1} by recurrence: U_0 = 1, U_1 = 2 tau.
  double prev = 1.0;
  double cur = 2.0 * tau;
  if (n == 1) return 1.0;
  for (int k = 1; k < n - 1; ++k) {
    const double next = 2.0 * tau * cur - prev;
    prev = cur;
    cur = next;
  }
  return n * cur;
}

double lagrange_basis(int j, double tau, const CglGrid& grid) {
  const int n = grid.order();
  if (j < 0 || j > n) throw std::out_of_range("basis index outside grid");
  const double tj = grid.nodes()[j];
  const double diff = tau - tj;
  if (tau == tj || std::abs(diff) < kNodeGuard) return 1.0;
  for (double tk : grid.nodes()) {
    if (tau == tk || std::abs(tau - tk) < kNodeGuard) return 0.0;
  }
  const double a = (j == 0 || j == n) ? 2.0 : 1.0;
  const double sign = ((j + n + 1) % 2 == 0) ? 1.0 : -1.0;
  return sign / (static_cast<double>(n) * n * a) * (1.0 - tau * tau) * chebyshev_T_derivative(n, tau) / diff;
}

double lagrange_eval(std::span<const double> coeffs, const CglGrid& grid, double tau) {
  if (coeffs.size() != grid.size()) throw std::invalid_argument("coefficient count must equal N + 1");
  double sum = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (tau == grid.nodes()[j]) return coeffs[j];
    sum += coeffs[j] * lagrange_basis(static_cast<int>(j), tau, grid);
  }
  return sum;
}

double barycentric_eval(std::span<const double> coeffs, std::span<const double> nodes,
                        std::span<const double> weights, double tau) {
  if (coeffs.size() != nodes.size() || weights.size() != nodes.size() || nodes.empty()) {
    throw std::invalid_argument("coefficients, nodes and weights must have equal, non-zero length");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double diff = tau - nodes[j];
    if (tau == nodes[j] || std::abs(diff) < kNodeGuard) return coeffs[j];
    const double r = weights[j] / diff;
    num += r * coeffs[j];
    den += r;
  }
  return num / den;
}

double barycentric_eval(std::span<const double> coeffs, const CglGrid& grid, double tau) {
  return barycentric_eval(coeffs, grid.nodes(), grid.weights(), tau);
}

void Interval::validate() const {
  if (!std::isfinite(t0) || !std::isfinite(tf) || !(tf > t0)) {
    throw std::invalid_argument("interval requires finite t0 < tf");
  }
}

std::vector<double> encode_signal(const ScalarSampler& x, const Interval& interval, int order) {
  interval.validate();
  const std::vector<double> nodes = cgl_nodes(order);
  std::vector<double> coeffs(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) coeffs[j] = x(interval.to_time(nodes[j]));
  return coeffs;
}

CglInterpolant::CglInterpolant(Interval interval, std::vector<double> coeffs)
    : interval_(interval),
      grid_(static_cast<int>(coeffs.size()) - 1),
      coeffs_(std::move(coeffs)) {
  interval_.validate();
}

double CglInterpolant::operator()(double t) const {
  const double tau = std::clamp(interval_.to_tau(std::clamp(t, interval_.t0, interval_.tf)), -1.0, 1.0);
  return barycentric_eval(coeffs_, grid_, tau);
}

std::vector<double> chebyshev_gauss_nodes(int order) {
  if (order < 1) throw std::invalid_argument("Chebyshev order must be >= 1");
  std::vector<double> nodes(order);
  for (int k = 1; k <= order; ++k) nodes[k - 1] = std::cos(std::numbers::pi * (k - 0.5) / order);
  return nodes;
}

std::vector<double> conventional_cheb_coeffs(const ScalarSampler& x, const Interval& interval, int order) {
  interval.validate();
  const std::vector<double> nodes = chebyshev_gauss_nodes(order);
  std::vector<double> samples(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) samples[k] = x(interval.to_time(nodes[k]));

  std::vector<double> coeffs(static_cast<std::size_t>(order) + 1, 0.0);
  for (int j = 0; j <= order; ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) sum += samples[k] * chebyshev_T(j, nodes[k]);
    coeffs[j] = 2.0 / order * sum;
  }
  return coeffs;
}

double conventional_cheb_eval(std::span<const double> coeffs, double tau) {
  if (coeffs.empty()) return 0.0;
  double sum = 0.5 * coeffs[0];
  for (std::size_t j = 1; j < coeffs.size(); ++j) sum += coeffs[j] * chebyshev_T(static_cast<int>(j), tau);
  return sum;
}

}  // namespace attsteer
