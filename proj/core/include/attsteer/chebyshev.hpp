#pragma once

#include <functional>
#include <span>
#include <vector>

namespace attsteer {

/// Chebyshev-Gauss-Lobatto nodes tau_j = -cos(pi j / N), j = 0..N, ascending
/// from -1 to +1. Throws std::invalid_argument for N < 1.
std::vector<double> cgl_nodes(int order);

/// w_j = 1 / prod_{i != j} (tau_j - tau_i). Throws std::invalid_argument on
/// duplicate nodes.
std::vector<double> barycentric_weights(std::span<const double> nodes);

/// CGL nodes of one order with their barycentric weights.
class CglGrid {
 public:
  explicit CglGrid(int order);

  int order() const { return order_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  int order_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// First-kind Chebyshev polynomial T_j by the three-term recurrence.
double chebyshev_T(int j, double tau);

/// dT_N/dtau, evaluated as N U_{N-1}(tau); the endpoint values
/// (+-1)^{N+1} N^2 are returned exactly.
double chebyshev_T_derivative(int n, double tau);

/// Cardinal polynomial of the CGL grid written through the derivative of T_N:
///   phi_j(tau) = s_j / (N^2 a_j) * (1 - tau^2) T_N'(tau) / (tau - tau_j)
/// with a_0 = a_N = 2, a_j = 1 otherwise. The sign s_j = (-1)^{j+N+1} matches
/// the ascending node ordering. Returns exactly 1 at tau = tau_j and 0 at
/// the other nodes.
double lagrange_basis(int j, double tau, const CglGrid& grid);

/// h(tau) = sum_j c_j phi_j(tau) using lagrange_basis.
double lagrange_eval(std::span<const double> coeffs, const CglGrid& grid, double tau);

/// Barycentric form of the same interpolant. A node hit returns the stored
/// coefficient exactly.
double barycentric_eval(std::span<const double> coeffs, std::span<const double> nodes,
                        std::span<const double> weights, double tau);
double barycentric_eval(std::span<const double> coeffs, const CglGrid& grid, double tau);

/// Affine map between [t0, tf] and [-1, 1].
struct Interval {
  double t0 = 0.0;
  double tf = 1.0;

  double duration() const { return tf - t0; }
  double to_tau(double t) const { return 2.0 * (t - t0) / (tf - t0) - 1.0; }
  double to_time(double tau) const { return t0 + (tf - t0) * (tau + 1.0) / 2.0; }
  /// Throws std::invalid_argument unless tf > t0 and both are finite.
  void validate() const;
};

using ScalarSampler = std::function<double(double t)>;

/// Filter coefficients c_j = x(t_j) at the CGL instants of `interval`.
std::vector<double> encode_signal(const ScalarSampler& x, const Interval& interval, int order);

/// Single-channel interpolating filter over a time interval. Evaluation
/// outside the interval clamps to the end points.
class CglInterpolant {
 public:
  CglInterpolant(Interval interval, std::vector<double> coeffs);

  int order() const { return grid_.order(); }
  const Interval& interval() const { return interval_; }
  const CglGrid& grid() const { return grid_; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  double operator()(double t) const;

 private:
  Interval interval_;
  CglGrid grid_;
  std::vector<double> coeffs_;
};

/// Sample instants of the conventional Chebyshev filter,
/// tau_k = cos(pi (k - 1/2) / N), k = 1..N.
std::vector<double> chebyshev_gauss_nodes(int order);

/// c_j = (2/N) sum_k x(tau_k) T_j(tau_k), j = 0..N, over the Gauss grid above.
std::vector<double> conventional_cheb_coeffs(const ScalarSampler& x, const Interval& interval, int order);

/// sum_j c_j T_j(tau) with the customary half weight on c_0, so that a
/// constant signal is reproduced.
double conventional_cheb_eval(std::span<const double> coeffs, double tau);

}  // namespace attsteer
