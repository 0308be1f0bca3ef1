#pragma once

#include <optional>
#include <vector>

#include "fsp/qp.hpp"
#include "fsp/snapper.hpp"
#include "fsp/world_model.hpp"

namespace fsp {

struct WiggleParams {
  double inset_distance = 0.02;
  /// Per-axis bound on the translation.
  double max_translation = 0.02;
  double max_rotation = DegToRad(5.0);
  Eigen::Vector3d weights = Eigen::Vector3d(1.0, 1.0, 0.1);  // diagonal of Q

  /// Throws std::invalid_argument on out-of-range values, including an inset
  /// that is not below `xy_resolution`.
  void Validate(double xy_resolution) const;
};

/// Linearized QP moving `foot` (vertices in the piece's frame) to lie
/// `inset` inside `piece`. q = [vx, vy, theta], rotation about the foot centroid.
WiggleQP BuildWiggleQP(const ConvexPolygon2& foot, const ConvexPolygon2& piece, double inset,
                       const WiggleParams& params);

/// Applies q exactly (rotation about the centroid of `foot`, then translation).
std::vector<Point2> ApplyWiggle(const ConvexPolygon2& foot, const Eigen::Vector3d& q);

struct WiggleOutcome {
  SnapResult snap;                       // adjusted (or unchanged) foothold
  Eigen::Vector3d shift = Eigen::Vector3d::Zero();  // total [vx, vy, theta] in the region frame
  double inset_achieved = 0.0;           // inset the QP was solved for
  bool solved = false;                   // full requested inset reached
  bool changed = false;
};

/// Shifts one snapped foothold inside the region piece it overlaps most.
WiggleOutcome WiggleStep(const SnapResult& snap, const Environment& env, const FootPolygon& foot,
                         const WiggleParams& params);

/// Sole of a snapped foot in its region's frame.
ConvexPolygon2 SoleInRegion(const SnapResult& snap, const PlanarRegion& region, const FootPolygon& foot);

/// Smallest edge slack of the sole's vertices inside `piece` (region frame);
/// negative when a vertex is outside.
double SoleInset(const ConvexPolygon2& sole_in_region, const ConvexPolygon2& piece);

}  // namespace fsp
