#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fsp/costing.hpp"
#include "fsp/planner.hpp"
#include "test_util.hpp"

namespace fsp {
namespace {

SnapResult MakeSnap(const Pose2& pose, double z, double area = 1.0, double roll = 0.0, double pitch = 0.0) {
  SnapResult s;
  s.foothold_pose = RigidTransform3(RotationZ(pose.yaw), Eigen::Vector3d(pose.x, pose.y, z));
  s.planar_pose = pose;
  s.area_fraction = area;
  s.surface_roll = roll;
  s.surface_pitch = pitch;
  return s;
}

TEST(EdgeCost, InPlaceStepCostsOnlyPerStep) {
  CostParams p;
  // Right foot at the nominal offset from the left: both imply the same midstance.
  const SnapResult left = MakeSnap(Pose2(0, 0.1, 0), 0);
  const SnapResult right = MakeSnap(Pose2(0, -0.1, 0), 0);
  EXPECT_NEAR(EdgeCost(left, Side::kLeft, right, Side::kRight, p), p.cost_per_step, 1e-12);
}

TEST(EdgeCost, HalfMeterSwingMovesMidstanceQuarter) {
  CostParams p;
  p.w_distance = 1.0;
  p.cost_per_step = 0.1;
  // The right foot swings from 0.25 m behind the left to 0.25 m ahead.
  const SnapResult left = MakeSnap(Pose2(0, 0.1, 0), 0);
  const SnapResult right = MakeSnap(Pose2(0.25, -0.1, 0), 0);
  EXPECT_NEAR(EdgeCost(left, Side::kLeft, right, Side::kRight, p), 0.35, 1e-12);
}

TEST(EdgeCost, CompositeStepMatchesHandArithmetic) {
  const CostParams p;  // w_distance 1, w_height 1, w_yaw 0.2, w_area 0.5, w_roll_pitch 0.2, per step 0.15
  const double yaw = 10.0 * 3.14159265358979323846 / 180.0;
  const double roll = 5.0 * 3.14159265358979323846 / 180.0;
  const SnapResult parent = MakeSnap(Pose2(0, 0.1, 0), 0.0);
  const SnapResult child = MakeSnap(Pose2(0.3, -0.12, yaw), 0.2, 0.8, roll, 0.0);
  // Parent midstance (0, 0); child midstance is 0.1 m to the child's left.
  const double mx = 0.3 - 0.1 * std::sin(yaw);
  const double my = -0.12 + 0.1 * std::cos(yaw);
  const double expected = 1.0 * std::sqrt(mx * mx + my * my) + 1.0 * 0.2 + 0.2 * yaw + 0.5 * (1 - 0.8) +
                          0.2 * roll + 0.15;
  EXPECT_NEAR(EdgeCost(parent, Side::kLeft, child, Side::kRight, p), expected, 1e-12);
}

TEST(EdgeCost, AtLeastPerStepAndRigidInvariant) {
  const CostParams p;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 500; ++i) {
    const Pose2 a(u(rng), u(rng), 3 * u(rng));
    const Pose2 b(u(rng), u(rng), 3 * u(rng));
    const double za = u(rng), zb = u(rng);
    const double area = 0.5 + 0.5 * std::abs(u(rng));
    const double roll = 0.3 * u(rng), pitch = 0.3 * u(rng);
    const double c = EdgeCost(MakeSnap(a, za), Side::kRight, MakeSnap(b, zb, area, roll, pitch), Side::kLeft, p);
    EXPECT_GE(c, p.cost_per_step);
    // Move the whole pair rigidly in the plane and vertically.
    const Pose2 t(u(rng) * 5, u(rng) * 5, 3 * u(rng));
    const double dz = u(rng);
    auto move = [&](const Pose2& q) {
      const Point2 w = t.Apply(q.position());
      return Pose2(w.x, w.y, q.yaw + t.yaw);
    };
    const double c2 = EdgeCost(MakeSnap(move(a), za + dz), Side::kRight, MakeSnap(move(b), zb + dz, area, roll, pitch),
                               Side::kLeft, p);
    EXPECT_NEAR(c, c2, 1e-12);
  }
}

TEST(ReferenceYaw, AtGoalIsGoalYaw) {
  const CostParams p;
  const Pose2 goal(2, 1, 0.7);
  EXPECT_EQ(ReferenceYaw(goal.position(), goal, Pose2(0, 0, 0), p), goal.yaw);
}

TEST(ReferenceYaw, FarAwayPointsAlongStartGoalHeading) {
  const CostParams p;
  EXPECT_NEAR(ReferenceYaw({-3, 0}, Pose2(5, 0, 2.0), Pose2(0, 0, 0), p), 0.0, 1e-12);
}

TEST(ReferenceYaw, HalfRadiusIsWrappedMidpoint) {
  const CostParams p;
  const Pose2 goal(5, 0, 1.0);
  const double r = p.final_turn_radius;
  EXPECT_NEAR(ReferenceYaw({5 - r / 2, 0}, goal, Pose2(0, 0, 0), p), 0.5, 1e-12);
  // Across the wrap: heading pi, goal yaw -pi + 0.4 -> midpoint -pi + 0.2.
  const Pose2 g2(-5, 0, -kPi + 0.4);
  EXPECT_NEAR(ReferenceYaw({-5 + r / 2, 0}, g2, Pose2(0, 0, 0), p), -kPi + 0.2, 1e-12);
}

TEST(ReferenceYaw, ContinuousAtTurnRadius) {
  const CostParams p;
  const Pose2 goal(4, 0, 2.5);
  const double r = p.final_turn_radius;
  const double in = ReferenceYaw({4 - r + 1e-12, 0}, goal, Pose2(0, 0, 0), p);
  const double out = ReferenceYaw({4 - r - 1e-12, 0}, goal, Pose2(0, 0, 0), p);
  EXPECT_NEAR(AngleDifference(in, out), 0.0, 1e-9);
}

TEST(HeuristicCost, ZeroAtGoal) {
  const CostParams p;
  const Pose2 goal(1, 2, -0.4);
  EXPECT_NEAR(HeuristicCost(goal, goal, Pose2(0, 0, 0), p), 0.0, 1e-12);
}

TEST(HeuristicCost, LinearInInflation) {
  CostParams p;
  p.inflation = 1.3;
  const Pose2 node(0.2, -0.4, 0.9), goal(3, 1, 0), start(0, 0, 0);
  const double h1 = HeuristicCost(node, goal, start, p);
  p.inflation = 2.6;
  EXPECT_NEAR(HeuristicCost(node, goal, start, p), 2 * h1, 1e-12);
}

TEST(HeuristicCost, StraightThreeMeters) {
  CostParams p;
  p.max_step_length_for_heuristic = 0.4;
  p.cost_per_step = 0.1;
  p.w_distance = 1.0;
  p.inflation = 1.0;
  EXPECT_NEAR(HeuristicCost(Pose2(0, 0, 0), Pose2(3, 0, 0), Pose2(0, 0, 0), p), 3.8, 1e-12);
}

TEST(HeuristicCost, AdmissibleAgainstSearchOracle) {
  const Environment env = testing::FlatGround(-1, -1, 1, 1);
  const PlannerParams params = testing::OptimalityParams(1.0);
  std::mt19937_64 rng(77);
  for (int i = 0; i < 5; ++i) {
    const PlannerRequest request = testing::RandomOptimalityInstance(rng, env, params);
    const testing::OracleResult oracle = testing::UniformCostSearch(request);
    ASSERT_TRUE(oracle.found);
    const Pose2 start_mid = Midstance(request.start_left, request.start_right);
    double h = std::numeric_limits<double>::infinity();
    for (const auto& [pose, side] : {std::pair{request.start_left, Side::kLeft}, {request.start_right, Side::kRight}}) {
      const FootstepNode n = PoseToNode(pose, side, params.lattice);
      h = std::min(h, HeuristicCost(NodeMidstance(n, params), request.goal_midstance, start_mid, params.cost));
    }
    EXPECT_LE(h, oracle.cost + 1e-9);
  }
}

TEST(Midstance, MeanPositionCircularYaw) {
  const Pose2 m = Midstance(Pose2(0, 0.1, DegToRad(170)), Pose2(0.2, -0.1, DegToRad(-170)));
  EXPECT_NEAR(m.x, 0.1, 1e-12);
  EXPECT_NEAR(m.y, 0.0, 1e-12);
  EXPECT_NEAR(std::abs(m.yaw), kPi, 1e-12);
}

TEST(NominalMidstance, InvertsFootFromMidstance) {
  const Pose2 mid(1.0, -2.0, 0.6);
  for (Side s : {Side::kLeft, Side::kRight}) {
    const Pose2 back = NominalMidstance(FootFromMidstance(mid, s, 0.2), s, 0.2);
    EXPECT_NEAR(back.x, mid.x, 1e-12);
    EXPECT_NEAR(back.y, mid.y, 1e-12);
    EXPECT_NEAR(back.yaw, mid.yaw, 1e-12);
  }
}

TEST(CostParams, ValidateRejectsBadValues) {
  CostParams p;
  EXPECT_NO_THROW(p.Validate());
  p.inflation = 0.9;
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  p = CostParams{};
  p.w_yaw = -1;
  EXPECT_THROW(p.Validate(), std::invalid_argument);
}

}  // namespace
}  // namespace fsp
