#include "attsteer/polynomial.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace attsteer {

double poly_eval(const Polynomial& p, double z) {
  double acc = 0.0;
  for (double c : p) acc = acc * z + c;
  return acc;
}

std::complex<double> poly_eval(const Polynomial& p, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (double c : p) acc = acc * z + c;
  return acc;
}

Polynomial poly_trim(const Polynomial& p) {
  std::size_t first = 0;
  while (first < p.size() && p[first] == 0.0) ++first;
  return Polynomial(p.begin() + static_cast<std::ptrdiff_t>(first), p.end());
}

std::vector<std::complex<double>> poly_roots(const Polynomial& p) {
  const Polynomial q = poly_trim(p);
  if (q.empty()) throw std::invalid_argument("the zero polynomial has no finite root set");
  const int n = static_cast<int>(q.size()) - 1;
  if (n == 0) return {};
  if (n == 1) return {std::complex<double>(-q[1] / q[0], 0.0)};

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) companion(0, i) = -q[i + 1] / q[0];
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(i);
  return roots;
}

Polynomial poly_deflate(const Polynomial& p, double r, double* remainder) {
  if (p.empty()) throw std::invalid_argument("cannot deflate an empty polynomial");
  Polynomial quotient(p.size() - 1);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc = acc * r + p[i];
    if (i + 1 < p.size()) quotient[i] = acc;
  }
  if (remainder) *remainder = acc;
  return quotient;
}

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace attsteer
