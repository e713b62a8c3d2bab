#include <gtest/gtest.h>

#include <numeric>

#include "attsteer/chebyshev.hpp"
#include "test_support.hpp"

namespace attsteer {
namespace {

// Product-form Lagrange basis straight from the definition.
double lagrange_oracle(int j, double tau, const std::vector<double>& nodes) {
  double v = 1.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (static_cast<int>(i) != j) v *= (tau - nodes[i]) / (nodes[j] - nodes[i]);
  }
  return v;
}

std::vector<double> random_poly(int degree) {
  std::vector<double> c(degree + 1);
  for (double& v : c) v = testing::uniform(-1.0, 1.0);
  return c;
}

double horner(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (double a : c) v = v * x + a;
  return v;
}

TEST(CglNodes, SmallOrders) {
  EXPECT_EQ(cgl_nodes(1), (std::vector<double>{-1.0, 1.0}));
  const auto n2 = cgl_nodes(2);
  EXPECT_EQ(n2.front(), -1.0);
  EXPECT_EQ(n2.back(), 1.0);
  EXPECT_NEAR(n2[1], 0.0, 1e-16);
  EXPECT_THROW(cgl_nodes(0), std::invalid_argument);
}

TEST(CglNodes, OrderFiveMatchesTable) {
  const std::vector<double> expected{-1.0, -0.8090, -0.3090, 0.3090, 0.8090, 1.0};
  const auto nodes = cgl_nodes(5);
  ASSERT_EQ(nodes.size(), 6u);
  for (int j = 0; j <= 5; ++j) EXPECT_NEAR(nodes[j], expected[j], 5e-5);
}

TEST(CglNodes, DefinitionAndOrdering) {
  for (int n : {3, 8, 17, 64}) {
    const auto nodes = cgl_nodes(n);
    EXPECT_EQ(nodes.front(), -1.0);
    EXPECT_EQ(nodes.back(), 1.0);
    for (int j = 0; j <= n; ++j) EXPECT_NEAR(nodes[j], -std::cos(std::numbers::pi * j / n), 1e-15);
    EXPECT_TRUE(std::is_sorted(nodes.begin(), nodes.end()));
    EXPECT_EQ(std::adjacent_find(nodes.begin(), nodes.end()), nodes.end());
  }
}

// End spacing ~ pi^2 / (2 N^2), mid spacing ~ pi / N.
TEST(CglNodes, ClusterAtEndpoints) {
  const int n = 16;
  const auto nodes = cgl_nodes(n);
  const double end_gap = nodes[1] - nodes[0];
  const double mid_gap = nodes[n / 2 + 1] - nodes[n / 2];
  const double pi = std::numbers::pi;
  EXPECT_NEAR(end_gap * n * n, pi * pi / 2.0, 0.05);
  EXPECT_NEAR(mid_gap * n, pi, 0.05);
  EXPECT_GT(mid_gap / end_gap, n / 2.0);
}

TEST(BarycentricWeights, ThreeNodes) {
  const std::vector<double> nodes{-1.0, 0.0, 1.0};
  EXPECT_EQ(barycentric_weights(nodes), (std::vector<double>{0.5, -1.0, 0.5}));
}

TEST(BarycentricWeights, AlternateAndMatchProducts) {
  for (int n : {4, 7, 20}) {
    const auto nodes = cgl_nodes(n);
    const auto w = barycentric_weights(nodes);
    for (int j = 0; j <= n; ++j) {
      double prod = 1.0;
      for (int i = 0; i <= n; ++i)
        if (i != j) prod *= nodes[j] - nodes[i];
      EXPECT_NEAR(w[j] * prod, 1.0, 1e-12);
      if (j > 0) {
        EXPECT_LT(w[j] * w[j - 1], 0.0);
      }
    }
  }
}

TEST(BarycentricWeights, RejectDuplicates) {
  const std::vector<double> nodes{-1.0, 0.2, 0.2, 1.0};
  EXPECT_THROW(barycentric_weights(nodes), std::invalid_argument);
}

TEST(ChebyshevT, KnownValues) {
  EXPECT_EQ(chebyshev_T(0, 0.3), 1.0);
  EXPECT_EQ(chebyshev_T(1, 0.3), 0.3);
  EXPECT_EQ(chebyshev_T(2, 0.0), -1.0);
  EXPECT_NEAR(chebyshev_T(3, 0.5), -1.0, 1e-15);
}

TEST(ChebyshevT, TrigIdentity) {
  for (int n = 0; n < 50; ++n) {
    const double theta = testing::uniform(0.0, std::numbers::pi);
    for (int j = 0; j <= 10; ++j) EXPECT_NEAR(chebyshev_T(j, std::cos(theta)), std::cos(j * theta), 1e-12);
  }
}

// T_N'(cos t) = N sin(N t) / sin t, with N^2 at tau = 1 and (-1)^(N+1) N^2 at -1.
TEST(ChebyshevT, DerivativeIdentity) {
  for (int n : {1, 2, 5, 6, 13}) {
    for (int k = 0; k < 20; ++k) {
      const double theta = testing::uniform(0.01, std::numbers::pi - 0.01);
      EXPECT_NEAR(chebyshev_T_derivative(n, std::cos(theta)), n * std::sin(n * theta) / std::sin(theta), 1e-9);
    }
    EXPECT_DOUBLE_EQ(chebyshev_T_derivative(n, 1.0), n * n);
    EXPECT_DOUBLE_EQ(chebyshev_T_derivative(n, -1.0), (n % 2 ? 1.0 : -1.0) * n * n);
  }
}

TEST(LagrangeBasis, Cardinality) {
  const CglGrid grid(6);
  for (int j = 0; j <= 6; ++j) {
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(lagrange_basis(j, grid.nodes()[k], grid), j == k ? 1.0 : 0.0);
  }
}

TEST(LagrangeBasis, MatchesProductFormForOddAndEvenOrders) {
  for (int n : {5, 6, 7, 16}) {
    const CglGrid grid(n);
    for (int k = 0; k < 50; ++k) {
      const double tau = testing::uniform(-1.0, 1.0);
      double sum = 0.0;
      for (int j = 0; j <= n; ++j) {
        const double phi = lagrange_basis(j, tau, grid);
        EXPECT_NEAR(phi, lagrange_oracle(j, tau, grid.nodes()), 1e-10) << "N=" << n << " j=" << j;
        sum += phi;
      }
      EXPECT_NEAR(sum, 1.0, 1e-10);
    }
  }
}

TEST(Barycentric, NodeHitReturnsCoefficientExactly) {
  const CglGrid grid(9);
  const auto c = random_poly(9);
  for (int j = 0; j <= 9; ++j) EXPECT_EQ(barycentric_eval(c, grid, grid.nodes()[j]), c[j]);
}

TEST(Barycentric, ConstantReproduced) {
  const CglGrid grid(12);
  const std::vector<double> c(13, 3.25);
  for (int k = 0; k < 20; ++k) EXPECT_NEAR(barycentric_eval(c, grid, testing::uniform(-1, 1)), 3.25, 1e-13);
}

TEST(Barycentric, WeightScalingIsInvisible) {
  const CglGrid grid(8);
  const auto c = random_poly(8);
  std::vector<double> scaled = grid.weights();
  for (double& w : scaled) w *= 37.5;
  for (int k = 0; k < 20; ++k) {
    const double tau = testing::uniform(-1, 1);
    EXPECT_NEAR(barycentric_eval(c, grid.nodes(), scaled, tau), barycentric_eval(c, grid, tau), 1e-13);
  }
}

TEST(Barycentric, AgreesWithDirectLagrangeForm) {
  for (int n : {5, 6, 16, 49}) {
    const CglGrid grid(n);
    const auto c = random_poly(n);
    for (int k = 0; k < 200; ++k) {
      const double tau = testing::uniform(-1, 1);
      EXPECT_NEAR(barycentric_eval(c, grid, tau), lagrange_eval(c, grid, tau), 1e-10);
    }
  }
}

TEST(Encode, PolynomialsUpToOrderAreExact) {
  const Interval iv{-3.0, 17.0};
  for (int n : {3, 5, 10, 20}) {
    for (int degree = 0; degree <= n; degree += std::max(1, n / 4)) {
      const auto p = random_poly(degree);
      const auto x = [&](double t) { return horner(p, iv.to_tau(t)); };
      const CglInterpolant f(iv, encode_signal(x, iv, n));
      for (int k = 0; k < 100; ++k) {
        const double t = testing::uniform(iv.t0, iv.tf);
        EXPECT_NEAR(f(t), x(t), 1e-9);
        EXPECT_NEAR(lagrange_eval(f.coefficients(), f.grid(), iv.to_tau(t)), x(t), 1e-9);
      }
    }
  }
}

TEST(Encode, RampTableValues) {
  const Interval iv{0.0, 60.0};
  const auto ramp = [](double t) { return 0.13 * t; };
  const auto c = encode_signal(ramp, iv, 5);
  const CglGrid grid(5);
  const std::vector<double> times{0.0, 5.73, 20.73, 39.27, 54.27, 60.00};
  const std::vector<double> coeffs{0.0, 0.74, 2.69, 5.11, 7.06, 7.80};
  for (int j = 0; j <= 5; ++j) {
    EXPECT_NEAR(iv.to_time(grid.nodes()[j]), times[j], 0.005);
    EXPECT_NEAR(c[j], coeffs[j], 0.005);
  }
  const CglInterpolant f(iv, c);
  for (int k = 0; k < 100; ++k) {
    const double t = testing::uniform(0.0, 60.0);
    EXPECT_NEAR(f(t), ramp(t), 1e-9);
  }
}

TEST(Encode, ConstantGivesEqualCoefficients) {
  const auto c = encode_signal([](double) { return -0.5; }, Interval{0, 1}, 7);
  for (double v : c) EXPECT_EQ(v, -0.5);
}

TEST(Encode, RejectsEmptyInterval) {
  EXPECT_THROW(encode_signal([](double t) { return t; }, Interval{5.0, 5.0}, 4), std::invalid_argument);
  EXPECT_THROW(encode_signal([](double t) { return t; }, Interval{5.0, 1.0}, 4), std::invalid_argument);
}

TEST(Interpolant, ClampsOutsideInterval) {
  const Interval iv{0.0, 10.0};
  const CglInterpolant f(iv, encode_signal([](double t) { return t * t; }, iv, 4));
  EXPECT_EQ(f(-5.0), 0.0);
  EXPECT_EQ(f(15.0), 100.0);
}

// Direct sum (2/N) sum_k x(cos th_k) cos(j th_k), th_k = pi (k - 1/2) / N.
std::vector<double> gauss_sum_oracle(const std::function<double(double)>& x, int n) {
  std::vector<double> c(n + 1, 0.0);
  for (int j = 0; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const double th = std::numbers::pi * (k - 0.5) / n;
      c[j] += 2.0 / n * x(std::cos(th)) * std::cos(j * th);
    }
  }
  return c;
}

TEST(Conventional, ConstantAndLinear) {
  const Interval iv{-1.0, 1.0};
  const auto c1 = conventional_cheb_coeffs([](double) { return 1.0; }, iv, 8);
  EXPECT_NEAR(c1[0], 2.0, 1e-10);
  for (std::size_t j = 1; j < c1.size(); ++j) EXPECT_NEAR(c1[j], 0.0, 1e-10);
  const auto ct = conventional_cheb_coeffs([](double t) { return t; }, iv, 8);
  EXPECT_NEAR(ct[1], 1.0, 1e-10);
  for (std::size_t j = 0; j < ct.size(); ++j) {
    if (j != 1) {
      EXPECT_NEAR(ct[j], 0.0, 1e-10);
    }
  }
}

TEST(Conventional, MatchesDirectSum) {
  const Interval iv{10.0, 30.0};
  const auto x = [&](double t) { return std::exp(0.05 * t) * std::sin(0.3 * t); };
  const auto c = conventional_cheb_coeffs(x, iv, 9);
  const auto oracle = gauss_sum_oracle([&](double tau) { return x(iv.to_time(tau)); }, 9);
  for (std::size_t j = 0; j < c.size(); ++j) EXPECT_NEAR(c[j], oracle[j], 1e-12);
  EXPECT_EQ(chebyshev_gauss_nodes(4).size(), 4u);
  EXPECT_NEAR(chebyshev_gauss_nodes(4)[0], std::cos(std::numbers::pi / 8), 1e-15);
}

// The Gauss-grid expansion never samples the end points, so it misses the
// end values that the interpolating filter hits exactly.
TEST(Conventional, DiffersFromInterpolatingFilterAtEndpoints) {
  const Interval iv{0.0, 60.0};
  const auto x = [](double t) { return std::exp(t / 30.0); };
  const int n = 5;
  const auto conv = conventional_cheb_coeffs(x, iv, n);
  const CglInterpolant cgl(iv, encode_signal(x, iv, n));
  for (double t : {0.0, 60.0}) {
    EXPECT_EQ(cgl(t), x(t));
    EXPECT_GT(std::abs(conventional_cheb_eval(conv, iv.to_tau(t)) - x(t)), 1e-4);
  }
}

}  // namespace
}  // namespace attsteer
