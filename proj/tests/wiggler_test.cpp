#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fsp/planner.hpp"
#include "fsp/toolkit/generators.hpp"
#include "fsp/wiggler.hpp"

namespace fsp {
namespace {

using toolkit::HorizontalBox;

SnapResult SnapOk(const Pose2& pose, const Environment& env, const FootPolygon& foot) {
  const SnapOutcome o = SnapPose(pose, env, foot);
  EXPECT_TRUE(std::holds_alternative<SnapResult>(o));
  return std::get<SnapResult>(o);
}

ConvexPolygon2 RotatedAboutOrigin(const ConvexPolygon2& poly, double angle) {
  std::vector<Point2> v;
  for (const Point2& p : poly.vertices()) v.push_back(Rotate(p, angle));
  return ConvexPolygon2::FromVertices(std::move(v));
}

TEST(BuildWiggleQP, RowsMatchHandAssembly) {
  // Axis-aligned sole and square piece; rows are n . [I | perp(r)] per vertex and edge.
  const ConvexPolygon2 foot = ConvexPolygon2::Box(0.3, -0.05, 0.5, 0.05);
  const ConvexPolygon2 piece = ConvexPolygon2::Box(-1, -1, 1, 1);
  const double d = 0.02;
  const WiggleQP qp = BuildWiggleQP(foot, piece, d, WiggleParams{});
  const Point2 c{0.4, 0.0};
  const std::vector<Point2> normals{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  std::multiset<std::vector<long long>> expected, got;
  auto key = [](double a, double b, double t, double rhs) {
    return std::vector<long long>{std::llround(a * 1e9), std::llround(b * 1e9), std::llround(t * 1e9),
                                  std::llround(rhs * 1e9)};
  };
  for (const Point2& x : foot.vertices()) {
    const Point2 r = x - c;
    for (const Point2& n : normals) {
      // n . x <= 1 - d for every edge of the square.
      expected.insert(key(n.x, n.y, -n.x * r.y + n.y * r.x, (1 - d) - Dot(n, x)));
    }
  }
  ASSERT_EQ(qp.A.rows(), 16);
  for (Eigen::Index i = 0; i < qp.A.rows(); ++i) got.insert(key(qp.A(i, 0), qp.A(i, 1), qp.A(i, 2), qp.b[i]));
  EXPECT_EQ(got, expected);
  EXPECT_EQ(qp.upper, Eigen::Vector3d(0.02, 0.02, DegToRad(5.0)));
  EXPECT_EQ(qp.lower, -qp.upper);
  EXPECT_TRUE(qp.Q.isApprox(Eigen::Vector3d(1, 1, 0.1).asDiagonal().toDenseMatrix()));
}

TEST(BuildWiggleQP, InsideAlreadyGivesZeroShift) {
  const WiggleQP qp = BuildWiggleQP(ConvexPolygon2::Box(-0.1, -0.05, 0.1, 0.05), ConvexPolygon2::Box(-1, -1, 1, 1),
                                    0.02, WiggleParams{});
  EXPECT_GE(qp.b.minCoeff(), 0.0);
  const auto sol = SolveQP3(qp);
  ASSERT_TRUE(sol.has_value());
  EXPECT_TRUE(sol->q.isZero(0.0));
}

TEST(BuildWiggleQP, EquivariantUnderCommonRotation) {
  WiggleParams params;
  params.max_translation = 1.0;  // the per-axis box is not rotation invariant
  params.max_rotation = 1.0;
  const ConvexPolygon2 foot = ConvexPolygon2::Box(0.25, 0.1, 0.47, 0.21);
  const ConvexPolygon2 piece = ConvexPolygon2::Box(-0.3, -0.3, 0.4, 0.2);
  const auto base = SolveQP3(BuildWiggleQP(foot, piece, 0.02, params));
  ASSERT_TRUE(base.has_value());
  ASSERT_FALSE(base->q.isZero(1e-6));
  for (double a : {0.3, -1.2, 2.5}) {
    const auto turned = SolveQP3(BuildWiggleQP(RotatedAboutOrigin(foot, a), RotatedAboutOrigin(piece, a), 0.02, params));
    ASSERT_TRUE(turned.has_value());
    const Point2 v = Rotate({base->q.x(), base->q.y()}, a);
    EXPECT_NEAR(turned->q.x(), v.x, 1e-9);
    EXPECT_NEAR(turned->q.y(), v.y, 1e-9);
    EXPECT_NEAR(turned->q.z(), base->q.z(), 1e-9);
    EXPECT_NEAR(turned->objective, base->objective, 1e-12);
  }
}

TEST(WiggleParams, InsetMustStayBelowResolution) {
  WiggleParams p;
  EXPECT_NO_THROW(p.Validate(0.05));
  p.inset_distance = 0.05;
  EXPECT_THROW(p.Validate(0.05), std::invalid_argument);
  p = WiggleParams{};
  p.max_rotation = 0.0;
  EXPECT_THROW(p.Validate(0.05), std::invalid_argument);
}

TEST(WiggleStep, InteriorFootUnchanged) {
  const Environment env({HorizontalBox(0, -1, -1, 1, 1, 0.1)});
  const FootPolygon foot;
  const SnapResult s = SnapOk(Pose2(0.2, -0.1, 0.4), env, foot);
  const WiggleOutcome w = WiggleStep(s, env, foot, WiggleParams{});
  EXPECT_TRUE(w.solved);
  EXPECT_FALSE(w.changed);
  EXPECT_TRUE(w.shift.isZero(0.0));
  EXPECT_TRUE(w.snap.foothold_pose.translation() == s.foothold_pose.translation());
}

TEST(WiggleStep, ToeOverEdgeRetreatsToBestReachableInset) {
  // The toe sticks 0.015 m past x = 0; the 0.02 m shift cap leaves 0.005 m.
  const Environment env({HorizontalBox(0, -1, -1, 0, 1, 0.0)});
  const FootPolygon foot;
  const SnapResult s = SnapOk(Pose2(-0.095, 0.0, 0.0), env, foot);
  const PlanarRegion& region = env.regions()[0];
  const ConvexPolygon2& piece = region.pieces()[0];
  const ConvexPolygon2 before = SoleInRegion(s, region, foot);
  EXPECT_NEAR(SoleInset(before, piece), -0.015, 1e-12);

  const WiggleParams params;
  const WiggleOutcome w = WiggleStep(s, env, foot, params);
  EXPECT_FALSE(w.solved);
  EXPECT_TRUE(w.changed);
  EXPECT_NEAR(w.inset_achieved, 0.005, 1e-15);
  EXPECT_NEAR(w.shift.x(), -0.02, 1e-9);
  const double after = SoleInset(SoleInRegion(w.snap, region, foot), piece);
  EXPECT_NEAR(after, 0.005, 1e-9);

  // Grid over the bounded shifts: nothing reaches a larger inset.
  double best = -1.0;
  for (int i = -8; i <= 8; ++i) {
    for (int j = -8; j <= 8; ++j) {
      for (int k = -10; k <= 10; ++k) {
        const Eigen::Vector3d q(i * params.max_translation / 8, j * params.max_translation / 8,
                                k * params.max_rotation / 10);
        best = std::max(best, SoleInset(ConvexPolygon2::FromVertices(ApplyWiggle(before, q)), piece));
      }
    }
  }
  EXPECT_NEAR(after, best, 1e-6);
}

TEST(WiggleStep, ResultRespectsBoundsAndSolvedMeansInset) {
  const Environment env({HorizontalBox(0, 0.0, 0.0, 0.4, 0.2, 0.0)});
  const FootPolygon foot;
  const WiggleParams params;
  const PlanarRegion& region = env.regions()[0];
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(0.1, 0.3), uy(0.06, 0.14), uyaw(-0.3, 0.3);
  int solved = 0;
  for (int i = 0; i < 200; ++i) {
    const SnapOutcome o = SnapPose(Pose2(ux(rng), uy(rng), uyaw(rng)), env, foot);
    if (!std::holds_alternative<SnapResult>(o)) continue;
    const WiggleOutcome w = WiggleStep(std::get<SnapResult>(o), env, foot, params);
    EXPECT_LE(std::abs(w.shift.x()), params.max_translation + 1e-12);
    EXPECT_LE(std::abs(w.shift.y()), params.max_translation + 1e-12);
    EXPECT_LE(std::abs(w.shift.z()), params.max_rotation + 1e-12);
    if (w.inset_achieved > 0.0 || w.solved) {
      EXPECT_GE(SoleInset(SoleInRegion(w.snap, region, foot), region.pieces()[0]), w.inset_achieved - 1e-6);
    }
    if (!w.solved) continue;
    ++solved;
    // Idempotent: a solved foothold does not move again.
    const WiggleOutcome again = WiggleStep(w.snap, env, foot, params);
    EXPECT_TRUE(again.solved);
    EXPECT_LE(again.shift.norm(), 1e-9);
  }
  EXPECT_GT(solved, 20);
}

TEST(WigglePlan, CentersStepsOnBeamWithRoomForInset) {
  // 0.15 m beam, 0.11 m sole, 0.02 m inset: the only feasible lateral place is the middle.
  const double axis = 0.025;
  const Environment env({HorizontalBox(0, 0.0, axis - 0.075, 3.0, axis + 0.075, 0.0)});
  PlannerParams params;
  const std::vector<double> offsets{0.02, -0.015, 0.01, -0.02, 0.005, 0.0};
  PlannerResult plan;
  plan.status = PlanStatus::kFoundSolution;
  plan.origin = PlannedStep{{}, Side::kLeft, SnapOk(Pose2(0.2, axis, 0), env, params.foot)};
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const Side side = i % 2 == 0 ? Side::kRight : Side::kLeft;
    plan.steps.push_back({{}, side, SnapOk(Pose2(0.4 + 0.2 * i, axis + offsets[i], 0), env, params.foot)});
  }
  const std::vector<WiggleOutcome> out = WigglePlan(plan, env, params);
  ASSERT_EQ(out.size(), offsets.size());
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    EXPECT_TRUE(out[i].solved) << i;
    EXPECT_NEAR(plan.steps[i].snap.foothold_pose.translation().y(), axis, 1e-3) << i;
    EXPECT_NEAR(plan.steps[i].snap.foothold_pose.translation().x(), 0.4 + 0.2 * i, 1e-3) << i;
  }
}

TEST(WigglePlan, LeavesInteriorPlanUntouched) {
  const Environment env({HorizontalBox(0, -2, -2, 2, 2, 0.0)});
  PlannerParams params;
  PlannerResult plan;
  plan.status = PlanStatus::kFoundSolution;
  plan.origin = PlannedStep{{}, Side::kLeft, SnapOk(Pose2(0, 0.1, 0), env, params.foot)};
  for (int i = 0; i < 4; ++i) {
    const Side side = i % 2 == 0 ? Side::kRight : Side::kLeft;
    plan.steps.push_back({{}, side, SnapOk(Pose2(0.2 * (i + 1), side == Side::kLeft ? 0.1 : -0.1, 0), env, params.foot)});
  }
  const PlannerResult before = plan;
  for (const WiggleOutcome& w : WigglePlan(plan, env, params)) EXPECT_FALSE(w.changed);
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    EXPECT_TRUE(plan.steps[i].snap.foothold_pose.translation() == before.steps[i].snap.foothold_pose.translation());
  }
}

}  // namespace
}  // namespace fsp
