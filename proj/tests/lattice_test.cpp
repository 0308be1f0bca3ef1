#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "fsp/lattice.hpp"

namespace fsp {
namespace {

TEST(NodeToPose, Origin) {
  const Pose2 p = NodeToPose({0, 0, 0, Side::kLeft}, LatticeParams{});
  EXPECT_EQ(p.x, 0.0);
  EXPECT_EQ(p.y, 0.0);
  EXPECT_EQ(p.yaw, 0.0);
}

TEST(NodeToPose, IndicesScaleByResolution) {
  const Pose2 p = NodeToPose({2, -1, 9, Side::kRight}, LatticeParams{});
  EXPECT_NEAR(p.x, 0.10, 1e-12);
  EXPECT_NEAR(p.y, -0.05, 1e-12);
  EXPECT_NEAR(p.yaw, kPi / 2, 1e-12);
}

TEST(NodeToPose, YawIndexAboveHalfTurnWrapsNegative) {
  EXPECT_NEAR(NodeToPose({0, 0, 27, Side::kLeft}, LatticeParams{}).yaw, -kPi / 2, 1e-12);
  EXPECT_NEAR(NodeToPose({0, 0, 18, Side::kLeft}, LatticeParams{}).yaw, kPi, 1e-12);
}

TEST(PoseToNode, ExactLatticePose) {
  const LatticeParams lp;
  const FootstepNode n = PoseToNode(Pose2(0.35, -0.2, DegToRad(-30)), Side::kLeft, lp);
  EXPECT_EQ(n, (FootstepNode{7, -4, 33, Side::kLeft}));
}

TEST(PoseToNode, RoundsToNearest) {
  const FootstepNode n = PoseToNode(Pose2(0.024, 0.026, DegToRad(4)), Side::kRight, LatticeParams{});
  EXPECT_EQ(n, (FootstepNode{0, 1, 0, Side::kRight}));
}

TEST(PoseToNode, HalfwayRoundsAwayFromZero) {
  LatticeParams lp;
  lp.xy_resolution = 0.5;  // exact in binary so the halfway case is exact
  const FootstepNode n = PoseToNode(Pose2(0.25, -0.25, 0.0), Side::kLeft, lp);
  EXPECT_EQ(n.x_index, 1);
  EXPECT_EQ(n.y_index, -1);
}

TEST(PoseToNode, RoundTripsRandomNodes) {
  const LatticeParams lp;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> xy(-1000, 1000);
  std::uniform_int_distribution<int> yaw(0, lp.YawCount() - 1);
  for (int i = 0; i < 1000; ++i) {
    const FootstepNode n{xy(rng), xy(rng), yaw(rng), i % 2 ? Side::kLeft : Side::kRight};
    EXPECT_EQ(PoseToNode(NodeToPose(n, lp), n.side, lp), n);
  }
}

TEST(PoseToNode, QuantizationErrorWithinHalfCell) {
  const LatticeParams lp;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  std::uniform_real_distribution<double> a(-kPi, kPi);
  for (int i = 0; i < 5000; ++i) {
    const Pose2 p(u(rng), u(rng), a(rng));
    const Pose2 q = NodeToPose(PoseToNode(p, Side::kLeft, lp), lp);
    EXPECT_LE(std::abs(q.x - p.x), lp.xy_resolution / 2 + 1e-12);
    EXPECT_LE(std::abs(q.y - p.y), lp.xy_resolution / 2 + 1e-12);
    EXPECT_LE(std::abs(AngleDifference(q.yaw, p.yaw)), lp.yaw_resolution / 2 + 1e-12);
  }
}

TEST(LatticeParams, RejectsYawStepNotDividingCircle) {
  LatticeParams lp;
  lp.yaw_resolution = DegToRad(7.0);
  EXPECT_THROW(lp.Validate(), std::invalid_argument);
  lp.yaw_resolution = DegToRad(10.0);
  lp.xy_resolution = 0.0;
  EXPECT_THROW(lp.Validate(), std::invalid_argument);
}

TEST(ExpandNode, DefaultCountNearSixHundred) {
  const auto children = ExpandNode({0, 0, 0, Side::kLeft}, LatticeParams{}, ExpansionParams{});
  EXPECT_GE(children.size(), 400u);
  EXPECT_LE(children.size(), 800u);
  for (const FootstepNode& c : children) EXPECT_EQ(c.side, Side::kRight);
}

TEST(ExpandNode, CollapsedBoxYieldsOneChild) {
  const LatticeParams lp;
  ExpansionParams ep;
  ep.min_length = ep.max_length = 0.0;
  ep.min_width = ep.max_width = 0.20;
  ep.min_yaw_delta = ep.max_yaw_delta = 0.0;
  // Validate() wants strict ranges; the expansion itself accepts a point box.
  const auto children = ExpandNode({0, 0, 0, Side::kLeft}, lp, ep);
  ASSERT_EQ(children.size(), 1u);
  EXPECT_EQ(children[0], (FootstepNode{0, -4, 0, Side::kRight}));
}

// Brute force: every lattice vertex near the parent, filtered by the bounds.
std::set<FootstepNode> ScanBox(const FootstepNode& parent, const LatticeParams& lp, const ExpansionParams& ep,
                               bool apply_reach) {
  std::set<FootstepNode> out;
  const Pose2 stance = NodeToPose(parent, lp);
  const int span = static_cast<int>(std::ceil(1.0 / lp.xy_resolution));
  for (int dx = -span; dx <= span; ++dx) {
    for (int dy = -span; dy <= span; ++dy) {
      for (int k = 0; k < lp.YawCount(); ++k) {
        const FootstepNode c{parent.x_index + dx, parent.y_index + dy, k, Opposite(parent.side)};
        const StanceOffset o = ToStanceFrame(stance, parent.side, NodeToPose(c, lp));
        constexpr double e = 1e-9;
        if (o.forward < ep.min_length - e || o.forward > ep.max_length + e) continue;
        if (o.width < ep.min_width - e || o.width > ep.max_width + e) continue;
        if (o.yaw < ep.min_yaw_delta - e || o.yaw > ep.max_yaw_delta + e) continue;
        if (apply_reach && std::hypot(o.forward, o.width) > ep.max_reach + e) continue;
        out.insert(c);
      }
    }
  }
  return out;
}

TEST(ExpandNode, MatchesExhaustiveBoxScan) {
  const LatticeParams lp;
  const ExpansionParams ep;
  for (const FootstepNode parent : {FootstepNode{0, 0, 0, Side::kLeft}, FootstepNode{3, -2, 7, Side::kRight},
                                    FootstepNode{-5, 4, 31, Side::kLeft}}) {
    const auto children = ExpandNode(parent, lp, ep);
    const std::set<FootstepNode> got(children.begin(), children.end());
    EXPECT_EQ(got.size(), children.size()) << "duplicates";
    EXPECT_EQ(got, ScanBox(parent, lp, ep, true));
    // Anything in the box but not returned must break the reach cap.
    const Pose2 stance = NodeToPose(parent, lp);
    for (const FootstepNode& c : ScanBox(parent, lp, ep, false)) {
      if (got.contains(c)) continue;
      const StanceOffset o = ToStanceFrame(stance, parent.side, NodeToPose(c, lp));
      EXPECT_GT(std::hypot(o.forward, o.width), ep.max_reach);
    }
  }
}

TEST(ExpandNode, MirrorSymmetric) {
  const LatticeParams lp;
  const ExpansionParams ep;
  const int n = lp.YawCount();
  const FootstepNode left{2, 3, 5, Side::kLeft};
  const FootstepNode right{2, -3, (n - 5) % n, Side::kRight};
  std::set<FootstepNode> mirrored;
  for (const FootstepNode& c : ExpandNode(left, lp, ep)) {
    mirrored.insert({c.x_index, -c.y_index, (n - c.yaw_index) % n, Side::kLeft});
  }
  const auto r = ExpandNode(right, lp, ep);
  EXPECT_EQ(std::set<FootstepNode>(r.begin(), r.end()), mirrored);
}

TEST(ExpandNode, DeterministicAndSortedByStanceOffset) {
  const LatticeParams lp;
  const ExpansionParams ep;
  const FootstepNode parent{1, 1, 4, Side::kRight};
  const auto a = ExpandNode(parent, lp, ep);
  EXPECT_EQ(a, ExpandNode(parent, lp, ep));
  const Pose2 stance = NodeToPose(parent, lp);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const StanceOffset p = ToStanceFrame(stance, parent.side, NodeToPose(a[i - 1], lp));
    const StanceOffset q = ToStanceFrame(stance, parent.side, NodeToPose(a[i], lp));
    const auto key = [](const StanceOffset& o) {
      return std::tuple(std::round(o.forward * 1e6), std::round(o.width * 1e6), std::round(o.yaw * 1e6));
    };
    EXPECT_LE(key(p), key(q));
  }
}

TEST(ExpandNode, NoChildSharesParentCell) {
  const FootstepNode parent{0, 0, 0, Side::kLeft};
  for (const FootstepNode& c : ExpandNode(parent, LatticeParams{}, ExpansionParams{})) {
    EXPECT_FALSE(c.x_index == 0 && c.y_index == 0 && c.yaw_index == 0);
    EXPECT_NE(c.side, parent.side);
  }
}

TEST(ToStanceFrame, WidthMeasuredTowardSwingSide) {
  // Left stance at origin, right foot 0.2 m to its right.
  const StanceOffset o = ToStanceFrame(Pose2(0, 0, 0), Side::kLeft, Pose2(0.1, -0.2, DegToRad(-15)));
  EXPECT_NEAR(o.forward, 0.1, 1e-12);
  EXPECT_NEAR(o.width, 0.2, 1e-12);
  EXPECT_NEAR(o.yaw, DegToRad(15), 1e-12);  // right toe turned outward
}

}  // namespace
}  // namespace fsp
