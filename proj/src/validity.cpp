#include "fsp/validity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fsp/collision.hpp"

namespace fsp {
namespace {

Aabb3 BoundsOf(const std::vector<Eigen::Vector3d>& pts) {
  Aabb3 box;
  for (const auto& p : pts) box.Extend(p);
  return box;
}

bool AnyPieceHits(const Environment& env, const Aabb3& query, auto&& hits) {
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (!env.bounds(i).Overlaps(query)) continue;
    for (const ConvexPatch3& patch : env.world_pieces(i)) {
      if (hits(patch)) return true;
    }
  }
  return false;
}

}  // namespace

std::string_view ToString(RejectionReason reason) {
  switch (reason) {
    case RejectionReason::kUnsnappable: return "UNSNAPPABLE";
    case RejectionReason::kTooSteep: return "TOO_STEEP";
    case RejectionReason::kInsufficientArea: return "INSUFFICIENT_AREA";
    case RejectionReason::kBadStanceGeometry: return "BAD_STANCE_GEOMETRY";
    case RejectionReason::kStepTooHighOrLow: return "STEP_TOO_HIGH_OR_LOW";
    case RejectionReason::kTallStepTooLong: return "TALL_STEP_TOO_LONG";
    case RejectionReason::kCliffTooClose: return "CLIFF_TOO_CLOSE";
    case RejectionReason::kStepOverObstacle: return "STEP_OVER_OBSTACLE";
    case RejectionReason::kBodyBoxCollision: return "BODY_BOX_COLLISION";
    case RejectionReason::kSelfOverlap: return "SELF_OVERLAP";
  }
  return "UNKNOWN";
}

void CheckerParams::Validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("checker: ") + what);
  };
  require(max_incline >= 0.0 && max_incline <= kPi / 2, "max_incline must lie in [0, pi/2]");
  require(min_area_fraction > 0.0 && min_area_fraction <= 1.0, "min_area_fraction must lie in (0, 1]");
  require(max_forward >= 0.0 && max_backward >= 0.0, "max_forward and max_backward must be >= 0");
  require(min_width <= max_width, "min_width must not exceed max_width");
  require(max_reach > 0.0, "max_reach must be positive");
  require(max_step_up >= 0.0 && max_step_down >= 0.0, "step up/down limits must be >= 0");
  require(tall_step_height > 0.0 && tall_step_max_length > 0.0 && tall_step_max_width > 0.0,
          "tall step limits must be positive");
  require(cliff_height > 0.0 && cliff_clearance >= 0.0, "cliff limits must be positive");
  require(step_over_height > 0.0, "step_over_height must be positive");
  require(body_box_width > 0.0 && body_box_depth > 0.0, "body box must have positive size");
  require(body_box_bottom < body_box_top, "body_box_bottom must be below body_box_top");
}

std::uint64_t RejectionCounts::Total() const {
  return std::accumulate(by_reason.begin(), by_reason.end(), std::uint64_t{0});
}

CheckResult CheckIncline(const SnapResult& snap, const CheckerParams& p) {
  const double cos_tilt = std::clamp(snap.foothold_pose.rotation()(2, 2), -1.0, 1.0);
  if (std::acos(cos_tilt) > p.max_incline + tol::kBoundary) {
    return RejectionReason::kTooSteep;
  }
  return std::nullopt;
}

CheckResult CheckArea(const SnapResult& snap, const CheckerParams& p) {
  if (snap.area_fraction < p.min_area_fraction - tol::kBoundary) {
    return RejectionReason::kInsufficientArea;
  }
  return std::nullopt;
}

CheckResult CheckStepGeometry(const SnappedFoot& stance, const SnappedFoot& swing, const FootPolygon& foot,
                              const CheckerParams& p) {
  const Pose2& stance_pose = stance.snap->planar_pose;
  const Pose2& swing_pose = swing.snap->planar_pose;

  const ConvexPolygon2 keep_out = TransformPolygon(p.stance_clearance, stance_pose);
  if (ClipConvex(keep_out, TransformPolygon(foot.sole, swing_pose))) {
    return RejectionReason::kSelfOverlap;
  }

  const StanceOffset offset = ToStanceFrame(stance_pose, stance.side, swing_pose);
  constexpr double s = tol::kBoundary;
  if (offset.forward > p.max_forward + s || offset.forward < -p.max_backward - s || offset.width < p.min_width - s ||
      offset.width > p.max_width + s || std::hypot(offset.forward, offset.width) > p.max_reach + s) {
    return RejectionReason::kBadStanceGeometry;
  }

  const double dz = swing.snap->Height() - stance.snap->Height();
  if (dz > p.max_step_up + s || -dz > p.max_step_down + s) {
    return RejectionReason::kStepTooHighOrLow;
  }
  if (std::abs(dz) >= p.tall_step_height - s &&
      (std::abs(offset.forward) > p.tall_step_max_length + s || offset.width > p.tall_step_max_width + s)) {
    return RejectionReason::kTallStepTooLong;
  }
  return std::nullopt;
}

CheckResult CheckCliffClearance(const SnapResult& swing, const Environment& env, const FootPolygon& foot,
                                const CheckerParams& p) {
  const ConvexPolygon2 footprint = ProjectedSole(swing, foot);
  const Point2 center = swing.CenterXY();
  const double reach = footprint.CircumradiusAbout(center) + p.cliff_clearance;
  const Point2 r{reach, reach};
  for (std::size_t i : env.IndicesOverlappingXY(center - r, center + r)) {
    const PlanarRegion& region = env.regions()[i];
    if (region.id() == swing.region_id) continue;
    const auto h = region.PlaneHeightAt(center.x, center.y);
    if (!h || *h < swing.Height() + p.cliff_height) continue;
    for (const auto& piece : env.projected_pieces(i)) {
      if (piece && PolygonDistance(footprint, *piece) < p.cliff_clearance) {
        return RejectionReason::kCliffTooClose;
      }
    }
  }
  return std::nullopt;
}

ConvexPatch3 StepOverPatch(const SnapResult& stance, const SnapResult& swing, const FootPolygon& foot,
                           const CheckerParams& p) {
  const Point2 a = stance.CenterXY();
  const Point2 b = swing.CenterXY();
  const double z = std::max(stance.Height(), swing.Height()) + p.step_over_height;
  const double len = Distance(a, b);
  ConvexPatch3 patch;
  if (len < 1e-9) return patch;
  const Point2 side = Perp((b - a) / len) * (0.5 * foot.Width());
  for (const Point2& q : {a - side, b - side, b + side, a + side}) {
    patch.vertices.emplace_back(q.x, q.y, z);
  }
  return patch;
}

CheckResult CheckStepOverObstacle(const SnapResult& stance, const SnapResult& swing, const Environment& env,
                                  const FootPolygon& foot, const CheckerParams& p) {
  const ConvexPatch3 plane = StepOverPatch(stance, swing, foot, p);
  if (plane.vertices.empty()) return std::nullopt;
  const bool hit =
      AnyPieceHits(env, BoundsOf(plane.vertices), [&](const ConvexPatch3& piece) { return Intersects(plane, piece); });
  if (hit) return RejectionReason::kStepOverObstacle;
  return std::nullopt;
}

OrientedBox3 BodyBox(const SnapResult& stance, const SnapResult& swing, const CheckerParams& p) {
  const Point2 mid = (stance.CenterXY() + swing.CenterXY()) * 0.5;
  const double yaw = CircularMean(stance.planar_pose.yaw, swing.planar_pose.yaw);
  const double z = 0.5 * (stance.Height() + swing.Height());
  OrientedBox3 box;
  box.center = Eigen::Vector3d(mid.x, mid.y, z + 0.5 * (p.body_box_bottom + p.body_box_top));
  box.axes = RotationZ(yaw);
  box.half_extents = Eigen::Vector3d(0.5 * p.body_box_depth, 0.5 * p.body_box_width,
                                     0.5 * (p.body_box_top - p.body_box_bottom));
  return box;
}

CheckResult CheckBodyBox(const SnapResult& stance, const SnapResult& swing, const Environment& env,
                         const CheckerParams& p) {
  const OrientedBox3 box = BodyBox(stance, swing, p);
  const bool hit =
      AnyPieceHits(env, BoundsOf(box.Corners()), [&](const ConvexPatch3& piece) { return Intersects(box, piece); });
  if (hit) return RejectionReason::kBodyBoxCollision;
  return std::nullopt;
}

CheckResult ValidateEdge(const SnappedFoot& stance, const SnapOutcome& swing, Side swing_side,
                         const Environment& env, const FootPolygon& foot, const CheckerParams& p) {
  const SnapResult* child = std::get_if<SnapResult>(&swing);
  if (!child) return RejectionReason::kUnsnappable;
  if (auto r = CheckIncline(*child, p)) return r;
  if (auto r = CheckArea(*child, p)) return r;
  if (auto r = CheckStepGeometry(stance, {child, swing_side}, foot, p)) return r;
  if (auto r = CheckCliffClearance(*child, env, foot, p)) return r;
  if (auto r = CheckStepOverObstacle(*stance.snap, *child, env, foot, p)) return r;
  if (auto r = CheckBodyBox(*stance.snap, *child, env, p)) return r;
  return std::nullopt;
}

}  // namespace fsp
