#pragma once

#include <optional>
#include <string_view>
#include <unordered_map>
#include <variant>

#include "fsp/geometry.hpp"
#include "fsp/lattice.hpp"
#include "fsp/world_model.hpp"

namespace fsp {

/// Sole outline in the foot frame: origin at the sole center, x forward.
struct FootPolygon {
  ConvexPolygon2 sole = ConvexPolygon2::Rectangle(0.22, 0.11);

  /// Extent of the sole across the foot (y).
  double Width() const;
  double Length() const;
};

struct SnapResult {
  RigidTransform3 foothold_pose;  // foot frame -> world
  int region_id = -1;
  std::optional<ConvexPolygon2> cropped_foothold;  // foot frame; empty when nothing is supported
  double area_fraction = 0.0;
  double surface_roll = 0.0;
  double surface_pitch = 0.0;
  Pose2 planar_pose;  // the (x, y, yaw) this foothold was snapped from

  double Height() const { return foothold_pose.translation().z(); }
  Point2 CenterXY() const { return planar_pose.position(); }
};

enum class SnapFailureReason { kNoRegionUnderFoot, kRegionNearlyVertical };
std::string_view ToString(SnapFailureReason reason);

struct SnapFailure {
  SnapFailureReason reason = SnapFailureReason::kNoRegionUnderFoot;
};

using SnapOutcome = std::variant<SnapResult, SnapFailure>;

/// Foot rotation that keeps `yaw` about world z and lays the sole on a plane
/// with world normal `normal` (yaw, then pitch, then roll).
Eigen::Matrix3d AlignedFootRotation(double yaw, const Eigen::Vector3d& normal, double* roll = nullptr,
                                    double* pitch = nullptr);

/// Lays the foot on `region`'s plane with its center above (pose.x, pose.y)
/// and crops it against the region. Throws GeometryError for a vertical region.
SnapResult SnapOntoRegion(const Pose2& pose, const PlanarRegion& region, const FootPolygon& foot);

/// Snaps onto the region giving the highest sole vertex among the snappable
/// regions under the foot's vertical footprint.
SnapOutcome SnapPose(const Pose2& pose, const Environment& env, const FootPolygon& foot);
SnapOutcome SnapNode(const FootstepNode& node, const LatticeParams& lattice, const Environment& env,
                     const FootPolygon& foot);

struct CropResult {
  std::optional<ConvexPolygon2> cropped;  // foot frame, largest piece
  double area_fraction = 0.0;             // all pieces
};

/// Crops a foot laid on `region`'s plane with pose `foothold_pose`.
CropResult CropFoothold(const RigidTransform3& foothold_pose, const PlanarRegion& region, const FootPolygon& foot);

/// Sole corners of a snapped foot in world coordinates.
std::vector<Eigen::Vector3d> WorldSole(const SnapResult& snap, const FootPolygon& foot);
/// Vertical projection of the snapped sole onto the xy plane.
ConvexPolygon2 ProjectedSole(const SnapResult& snap, const FootPolygon& foot);

/// Memo of node snaps for one search. Not shared between searches.
class SnapCache {
 public:
  SnapCache(const Environment& env, const LatticeParams& lattice, const FootPolygon& foot)
      : env_(env), lattice_(lattice), foot_(foot) {}

  const SnapOutcome& Get(const FootstepNode& node);
  std::size_t size() const { return cache_.size(); }

 private:
  const Environment& env_;
  LatticeParams lattice_;
  FootPolygon foot_;
  std::unordered_map<FootstepNode, SnapOutcome, FootstepNodeHash> cache_;
};

}  // namespace fsp
