#include <gtest/gtest.h>

#include <algorithm>

#include "attsteer/polynomial.hpp"
#include "test_support.hpp"

namespace attsteer {
namespace {

Polynomial from_roots(const std::vector<double>& roots) {
  Polynomial p{1.0};
  for (double r : roots) p = poly_multiply(p, {1.0, -r});
  return p;
}

TEST(Polynomial, EvalAndTrim) {
  const Polynomial p{2.0, -3.0, 1.0};  // 2z^2 - 3z + 1
  EXPECT_EQ(poly_eval(p, 2.0), 3.0);
  EXPECT_EQ(poly_eval(p, std::complex<double>(0, 1)), std::complex<double>(-1, -3));
  EXPECT_EQ(poly_trim({0.0, 0.0, 1.0, 2.0}), (Polynomial{1.0, 2.0}));
  EXPECT_TRUE(poly_trim({0.0, 0.0}).empty());
}

TEST(Polynomial, RealRoots) {
  auto roots = poly_roots(from_roots({1.0, -2.0, 3.0}));
  ASSERT_EQ(roots.size(), 3u);
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) { return a.real() < b.real(); });
  EXPECT_NEAR(roots[0].real(), -2.0, 1e-12);
  EXPECT_NEAR(roots[1].real(), 1.0, 1e-12);
  EXPECT_NEAR(roots[2].real(), 3.0, 1e-12);
}

TEST(Polynomial, ComplexRootsReconstruct) {
  for (int n = 0; n < 20; ++n) {
    Polynomial p(5);
    for (double& c : p) c = testing::uniform(-2.0, 2.0);
    p[0] = 1.0 + std::abs(p[0]);
    const auto roots = poly_roots(p);
    ASSERT_EQ(roots.size(), 4u);
    // Expand lead * prod (z - r) and compare coefficients.
    std::vector<std::complex<double>> e{p[0]};
    for (const auto& r : roots) {
      std::vector<std::complex<double>> next(e.size() + 1, 0.0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        next[i] += e[i];
        next[i + 1] -= e[i] * r;
      }
      e = next;
    }
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_LT(std::abs(e[i] - p[i]), 1e-9);
  }
}

TEST(Polynomial, LinearAndZero) {
  const auto r = poly_roots({2.0, -1.0});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], std::complex<double>(0.5, 0.0));
  EXPECT_THROW(poly_roots({0.0, 0.0}), std::invalid_argument);
  EXPECT_TRUE(poly_roots({3.0}).empty());
}

TEST(Polynomial, DeflateByKnownRoot) {
  double rem = -1.0;
  const Polynomial q = poly_deflate(from_roots({1.0, 4.0, -0.5}), 4.0, &rem);
  EXPECT_NEAR(rem, 0.0, 1e-12);
  const Polynomial expected = from_roots({1.0, -0.5});
  ASSERT_EQ(q.size(), expected.size());
  for (std::size_t i = 0; i < q.size(); ++i) EXPECT_NEAR(q[i], expected[i], 1e-12);
  poly_deflate({1.0, 0.0, 1.0}, 1.0, &rem);
  EXPECT_EQ(rem, 2.0);
}

}  // namespace
}  // namespace attsteer
