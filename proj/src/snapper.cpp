#include "fsp/snapper.hpp"

#include <algorithm>
#include <limits>

#include "fsp/collision.hpp"

namespace fsp {

double FootPolygon::Width() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Point2& v : sole.vertices()) {
    lo = std::min(lo, v.y);
    hi = std::max(hi, v.y);
  }
  return hi - lo;
}

double FootPolygon::Length() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Point2& v : sole.vertices()) {
    lo = std::min(lo, v.x);
    hi = std::max(hi, v.x);
  }
  return hi - lo;
}

std::string_view ToString(SnapFailureReason reason) {
  switch (reason) {
    case SnapFailureReason::kNoRegionUnderFoot:
      return "NO_REGION_UNDER_FOOT";
    case SnapFailureReason::kRegionNearlyVertical:
      return "REGION_NEARLY_VERTICAL";
  }
  return "UNKNOWN";
}

Eigen::Matrix3d AlignedFootRotation(double yaw, const Eigen::Vector3d& normal, double* roll, double* pitch) {
  Eigen::Vector3d n = normal.normalized();
  if (n.z() < 0.0) n = -n;  // the sole faces up whichever way the region is wound
  // Normal in the yawed frame; the pitch-roll part must carry z onto it.
  const Eigen::Vector3d nl = RotationZ(-yaw) * n;
  const double r = -std::asin(std::clamp(nl.y(), -1.0, 1.0));
  const double p = std::atan2(nl.x(), nl.z());
  if (roll) *roll = r;
  if (pitch) *pitch = p;
  return RotationZ(yaw) * RotationY(p) * RotationX(r);
}

CropResult CropFoothold(const RigidTransform3& foothold_pose, const PlanarRegion& region, const FootPolygon& foot) {
  std::vector<Point2> local;
  local.reserve(foot.sole.size());
  for (const Point2& v : foot.sole.vertices()) {
    const Eigen::Vector3d l = region.ToLocal(foothold_pose.Apply(Eigen::Vector3d(v.x, v.y, 0.0)));
    local.push_back({l.x(), l.y()});
  }
  CropResult out;
  const auto sole_in_region = ConvexPolygon2::TryFromVertices(std::move(local));
  if (!sole_in_region) {
    return out;
  }
  double total = 0.0;
  double best_area = 0.0;
  std::optional<ConvexPolygon2> best;
  for (const ConvexPolygon2& piece : region.pieces()) {
    auto clip = ClipConvex(*sole_in_region, piece);
    if (!clip) continue;
    const double a = clip->Area();
    total += a;
    if (a > best_area) {
      best_area = a;
      best = std::move(clip);
    }
  }
  out.area_fraction = std::clamp(total / foot.sole.Area(), 0.0, 1.0);
  if (best) {
    std::vector<Point2> in_foot;
    for (const Point2& v : best->vertices()) {
      const Eigen::Vector3d f = foothold_pose.ApplyInverse(region.ToWorld(v));
      in_foot.push_back({f.x(), f.y()});
    }
    out.cropped = ConvexPolygon2::TryFromVertices(std::move(in_foot));
  }
  return out;
}

SnapResult SnapOntoRegion(const Pose2& pose, const PlanarRegion& region, const FootPolygon& foot) {
  const auto height = region.PlaneHeightAt(pose.x, pose.y);
  if (!height) {
    throw GeometryError("cannot snap onto a vertical region");
  }
  SnapResult snap;
  const Eigen::Matrix3d rotation = AlignedFootRotation(pose.yaw, region.Normal(), &snap.surface_roll,
                                                       &snap.surface_pitch);
  snap.foothold_pose = RigidTransform3(rotation, Eigen::Vector3d(pose.x, pose.y, *height));
  snap.region_id = region.id();
  snap.planar_pose = pose;
  CropResult crop = CropFoothold(snap.foothold_pose, region, foot);
  snap.cropped_foothold = std::move(crop.cropped);
  snap.area_fraction = crop.area_fraction;
  return snap;
}

SnapOutcome SnapPose(const Pose2& pose, const Environment& env, const FootPolygon& foot) {
  const ConvexPolygon2 footprint = TransformPolygon(foot.sole, pose);
  const double radius = foot.sole.CircumradiusAbout({0.0, 0.0});
  bool saw_vertical = false;
  std::optional<SnapResult> best;
  double best_top = -std::numeric_limits<double>::infinity();

  for (int id : env.RegionsOverlappingDisc(pose.position(), radius)) {
    const std::size_t index = *env.IndexOf(id);
    const PlanarRegion& region = env.regions()[index];
    if (!region.IsSnappable()) {
      for (const auto& loop : env.projected_loops(index)) {
        if (PolygonToLoopDistance(footprint, loop) <= 0.0) {
          saw_vertical = true;
          break;
        }
      }
      continue;
    }
    bool under = false;
    for (const auto& piece : env.projected_pieces(index)) {
      if (piece && ClipConvex(footprint, *piece)) {
        under = true;
        break;
      }
    }
    if (!under) continue;

    SnapResult candidate = SnapOntoRegion(pose, region, foot);
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& corner : WorldSole(candidate, foot)) {
      top = std::max(top, corner.z());
    }
    const bool higher = top > best_top + tol::kSnapTie;
    const bool tie_lower_id = std::abs(top - best_top) <= tol::kSnapTie && best && id < best->region_id;
    if (!best || higher || tie_lower_id) {
      best_top = top;
      best = std::move(candidate);
    }
  }
  if (best) {
    return *std::move(best);
  }
  return SnapFailure{saw_vertical ? SnapFailureReason::kRegionNearlyVertical
                                  : SnapFailureReason::kNoRegionUnderFoot};
}

SnapOutcome SnapNode(const FootstepNode& node, const LatticeParams& lattice, const Environment& env,
                     const FootPolygon& foot) {
  return SnapPose(NodeToPose(node, lattice), env, foot);
}

std::vector<Eigen::Vector3d> WorldSole(const SnapResult& snap, const FootPolygon& foot) {
  std::vector<Eigen::Vector3d> out;
  out.reserve(foot.sole.size());
  for (const Point2& v : foot.sole.vertices()) {
    out.push_back(snap.foothold_pose.Apply(Eigen::Vector3d(v.x, v.y, 0.0)));
  }
  return out;
}

ConvexPolygon2 ProjectedSole(const SnapResult& snap, const FootPolygon& foot) {
  std::vector<Point2> xy;
  for (const auto& w : WorldSole(snap, foot)) {
    xy.push_back({w.x(), w.y()});
  }
  return ConvexPolygon2::FromVertices(std::move(xy));
}

const SnapOutcome& SnapCache::Get(const FootstepNode& node) {
  auto it = cache_.find(node);
  if (it == cache_.end()) {
    it = cache_.emplace(node, SnapNode(node, lattice_, env_, foot_)).first;
  }
  return it->second;
}

}  // namespace fsp
