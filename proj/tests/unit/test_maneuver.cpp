#include <gtest/gtest.h>

#include "attsteer/maneuver.hpp"
#include "test_support.hpp"

namespace attsteer {
namespace {

using testing::kDeg;

TEST(SmoothStep, Shape) {
  EXPECT_EQ(smooth_step(-1.0, 0.0, 10.0), 0.0);
  EXPECT_EQ(smooth_step(10.0, 0.0, 10.0), 1.0);
  EXPECT_NEAR(smooth_step(5.0, 0.0, 10.0), 0.5, 1e-15);
  EXPECT_EQ(smooth_step(3.0, 3.0, 0.0), 0.0);
  EXPECT_EQ(smooth_step(3.0 + 1e-12, 3.0, 0.0), 1.0);
}

TEST(Ramp, AngleAndAttitude) {
  const RampProfile r{Eigen::Vector3d::UnitX(), 0.13 * kDeg, 5.0, Quaternion::identity()};
  EXPECT_EQ(r.angle(2.0), 0.0);
  EXPECT_NEAR(r.angle(15.0), 1.3 * kDeg, 1e-15);
  EXPECT_NEAR(r(15.0).angle(), 1.3 * kDeg, 1e-14);
}

TEST(Maneuver, RatesRespectLimitAndEndAtRest) {
  const SyntheticManeuver man;
  const double lim = man.shape().rate_limit;
  double peak = 0.0;
  for (double t = 0.0; t <= 708.0; t += 0.5) peak = std::max(peak, man.body_rate(t).cwiseAbs().maxCoeff());
  EXPECT_NEAR(peak, lim, 1e-12);
  EXPECT_EQ(man.body_rate(0.0).norm(), 0.0);
  EXPECT_LT(man.body_rate(708.0).norm(), 1e-15);
  // Every axis reaches the limit and the y and z axes reverse.
  EXPECT_NEAR(man.body_rate(150.0).x(), lim, 1e-12);
  EXPECT_NEAR(man.body_rate(150.0).y(), lim, 1e-12);
  EXPECT_NEAR(man.body_rate(500.0).y(), -lim, 1e-12);
  EXPECT_NEAR(man.body_rate(500.0).z(), -lim, 1e-12);
}

// Finite-difference body rate of the attitude, 2 vec(q^-1 dq/dt).
TEST(Maneuver, AttitudeIsConsistentWithRates) {
  const SyntheticManeuver man;
  const double h = 1e-3;
  for (double t : {10.0, 77.7, 240.0, 333.3, 600.0, 700.0}) {
    const Quaternion q = man(t);
    const Eigen::Vector4d dq = (man(t + h).as_vector4() - man(t - h).as_vector4()) / (2 * h);
    const Eigen::Vector3d w = 2.0 * (q.conjugate() * Quaternion::from_vector4(dq)).vec;
    EXPECT_LT((w - man.body_rate(t)).norm(), 1e-9) << t;
    EXPECT_NEAR(q.norm(), 1.0, 1e-12);
  }
  EXPECT_EQ(man(0.0).as_vector4(), Quaternion::identity().as_vector4());
  EXPECT_EQ(man(-5.0).as_vector4(), man(0.0).as_vector4());
}

}  // namespace
}  // namespace attsteer
