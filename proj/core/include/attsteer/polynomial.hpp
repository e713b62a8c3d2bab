#pragma once

#include <complex>
#include <vector>

namespace attsteer {

/// Coefficients in descending powers of z.
using Polynomial = std::vector<double>;

double poly_eval(const Polynomial& p, double z);
std::complex<double> poly_eval(const Polynomial& p, std::complex<double> z);

/// Drops leading zero coefficients (a zero polynomial becomes empty).
Polynomial poly_trim(const Polynomial& p);

/// Roots via the eigenvalues of the companion matrix. Throws
/// std::invalid_argument for the zero polynomial.
std::vector<std::complex<double>> poly_roots(const Polynomial& p);

/// Quotient of p / (z - r) by synthetic division; the remainder p(r) is
/// stored in `remainder` when non-null.
Polynomial poly_deflate(const Polynomial& p, double r, double* remainder = nullptr);

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b);

}  // namespace attsteer
