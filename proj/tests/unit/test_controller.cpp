#include <gtest/gtest.h>

#include "attsteer/controller.hpp"
#include "attsteer/dynamics.hpp"
#include "attsteer/error.hpp"
#include "test_support.hpp"

namespace attsteer {
namespace {

using testing::kDeg;

TEST(Controller, ZeroErrorAtRestGivesZeroTorque) {
  const auto p = SpacecraftParams::default_config();
  const ControlResult r = control_torque(SpacecraftState{}, Quaternion::identity(), ControllerGains{}, {}, p, 0.2, true);
  EXPECT_EQ(r.torque.norm(), 0.0);
}

TEST(Controller, ProportionalTermUsesTwiceTheErrorVector) {
  const auto p = SpacecraftParams::default_config();
  ControllerGains g;
  g.ki = 0.0;
  const Quaternion tgt = Quaternion::from_axis_angle(Eigen::Vector3d::UnitX(), 0.1 * kDeg);
  const ControlResult r = control_torque(SpacecraftState{}, tgt, g, {}, p, 0.2, false);
  const Eigen::Vector3d expected = p.inertia() * (g.kp * 2.0 * tgt.vec);
  EXPECT_LT((r.torque - expected).norm(), 1e-15);
}

TEST(Controller, RateTermOpposesMotion) {
  const auto p = SpacecraftParams::default_config();
  ControllerGains g;
  SpacecraftState x;
  x.omega = Eigen::Vector3d(0.0, 0.0, 0.001);
  const ControlResult r = control_torque(x, Quaternion::identity(), g, {}, p, 0.2, false);
  const Eigen::Vector3d gyro = x.omega.cross(p.inertia() * x.omega);
  EXPECT_LT((r.torque - (p.inertia() * (-g.kr * x.omega) + gyro)).norm(), 1e-15);
}

// With the reaction -Z# tau_c, the feedforward cancels the gyroscopic
// coupling and each axis sees w_dot = Kp e - Kr w.
TEST(Controller, FeedforwardDecouplesAxes) {
  const auto p = SpacecraftParams::default_config();
  ControllerGains g;
  g.ki = 0.0;
  SpacecraftState x;
  x.q = Quaternion::from_axis_angle(Eigen::Vector3d(1, 2, 3).normalized(), 0.2 * kDeg);
  x.omega = Eigen::Vector3d(0.01, -0.02, 0.03);
  x.wheel_speeds = Vector4(100, -50, 25, 0);
  const Quaternion tgt = Quaternion::identity();
  const ControlResult r = control_torque(x, tgt, g, {}, p, 0.2, false);
  const StateDerivative d = state_derivative(x, allocate_torques(-r.torque, p), Eigen::Vector3d::Zero(), p);
  const Eigen::Vector3d e = 2.0 * quat_error(x.q, tgt).vec;
  EXPECT_LT((d.omega_dot - (g.kp * e - g.kr * x.omega)).norm(), 1e-15);
}

TEST(Limiter, CapsProportionalRate) {
  ControllerGains g;
  const Eigen::Vector3d big = Eigen::Vector3d(1.0, -2.0, 0.5) * 0.1;
  const Eigen::Vector3d limited = proportional_limiter(big, g);
  EXPECT_NEAR(g.kp * limited.norm(), g.omega_max * g.kr, 1e-15);
  EXPECT_LT((limited.normalized() - big.normalized()).norm(), 1e-15);
  const Eigen::Vector3d small(1e-5, 0.0, 0.0);
  EXPECT_EQ(proportional_limiter(small, g), small);
}

TEST(IntegralGate, ActiveOnlyInsideThreshold) {
  ControllerState cs;
  cs.integral = Eigen::Vector3d(1, 2, 3);
  const Quaternion inside = Quaternion::from_axis_angle(Eigen::Vector3d::UnitZ(), 0.1 * kDeg);
  const Quaternion outside = Quaternion::from_axis_angle(Eigen::Vector3d::UnitZ(), 0.5 * kDeg);
  EXPECT_TRUE(integral_gate(inside, kDefaultIntegralThreshold, cs).integral_active);
  const ControllerState off = integral_gate(outside, kDefaultIntegralThreshold, cs);
  EXPECT_FALSE(off.integral_active);
  EXPECT_EQ(off.integral.norm(), 0.0);
  EXPECT_THROW(integral_gate(inside, 0.0, cs), std::invalid_argument);
}

TEST(IntegralGate, AccumulatesTwiceTheErrorVector) {
  const auto p = SpacecraftParams::default_config();
  const Quaternion tgt = Quaternion::from_axis_angle(Eigen::Vector3d::UnitY(), 0.1 * kDeg);
  ControllerState cs;
  for (int i = 0; i < 5; ++i) cs = control_torque(SpacecraftState{}, tgt, ControllerGains{}, cs, p, 0.2, false).state;
  EXPECT_TRUE(cs.integral_active);
  EXPECT_LT((cs.integral - 5 * 0.2 * 2.0 * tgt.vec).norm(), 1e-15);
}

TEST(Gains, SecondOrderConversion) {
  const SecondOrder so = gains_to_second_order(ControllerGains{});
  EXPECT_NEAR(so.omega_n, 0.24, 0.005);
  // 0.85 is the rounded design value; the exact figure for these gains:
  EXPECT_NEAR(so.zeta, 0.4 / (2.0 * std::sqrt(0.057)), 1e-15);
  EXPECT_NEAR(so.zeta, 0.85, 0.015);
  const ControllerGains back = gains_from_second_order(so.omega_n, so.zeta);
  EXPECT_NEAR(back.kp, 0.057, 1e-15);
  EXPECT_NEAR(back.kr, 0.4, 1e-15);
}

TEST(Gains, ValidateRejectsNonsense) {
  ControllerGains g;
  g.kp = 0.0;
  EXPECT_THROW(g.validate(), ConfigError);
  g = {};
  g.ki = -1.0;
  EXPECT_THROW(g.validate(), ConfigError);
  EXPECT_NO_THROW(ControllerGains{}.validate());
}

}  // namespace
}  // namespace attsteer
