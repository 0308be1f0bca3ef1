#include "fsp/wiggler.hpp"

#include <limits>
#include <stdexcept>

namespace fsp {
namespace {

constexpr int kMaxRelinearizations = 8;
constexpr double kSolvedViolation = 1e-9;
constexpr double kConverged = 1e-12;
constexpr int kInsetHalvings = 5;

// Largest constraint violation of the sole vertices against the inset piece.
double Violation(std::span<const Point2> vertices, const HalfPlaneSet& inset) {
  double worst = 0.0;
  for (const Point2& v : vertices) {
    worst = std::max(worst, -inset.MinSlack(v));
  }
  return worst;
}

struct Attempt {
  Eigen::Vector3d q = Eigen::Vector3d::Zero();
  bool feasible = false;
};

// Sequentially re-linearizes around the current rotation so the exact
// (not small-angle) pose meets the inset. The pivot is the sole centroid,
// which moves with the translation, so successive shifts simply add up.
Attempt SolveAtInset(const ConvexPolygon2& sole, const ConvexPolygon2& piece, double inset,
                     const WiggleParams& params) {
  const HalfPlaneSet planes = InsetHalfPlanes(piece, inset);
  const Eigen::Vector3d limit(params.max_translation, params.max_translation, params.max_rotation);
  Attempt out;
  for (int iter = 0; iter < kMaxRelinearizations; ++iter) {
    const std::vector<Point2> moved = ApplyWiggle(sole, out.q);
    if (Violation(moved, planes) <= kConverged) {
      out.feasible = true;
      return out;
    }
    const auto current = ConvexPolygon2::TryFromVertices(moved);
    if (!current) return out;
    WiggleQP qp = BuildWiggleQP(*current, piece, inset, params);
    qp.lower = -limit - out.q;
    qp.upper = limit - out.q;
    const auto sol = SolveQP3(qp);
    if (!sol) return out;
    out.q += sol->q;
  }
  out.feasible = Violation(ApplyWiggle(sole, out.q), planes) <= kSolvedViolation;
  return out;
}

}  // namespace

void WiggleParams::Validate(double xy_resolution) const {
  if (!(inset_distance >= 0.0)) throw std::invalid_argument("wiggle: inset_distance must be >= 0");
  if (!(inset_distance < xy_resolution)) {
    throw std::invalid_argument("wiggle: inset_distance must be smaller than the lattice resolution");
  }
  if (!(max_translation > 0.0) || !(max_rotation > 0.0)) {
    throw std::invalid_argument("wiggle: shift bounds must be positive");
  }
  if ((weights.array() <= 0.0).any()) throw std::invalid_argument("wiggle: weights must be positive");
}

WiggleQP BuildWiggleQP(const ConvexPolygon2& foot, const ConvexPolygon2& piece, double inset,
                       const WiggleParams& params) {
  const HalfPlaneSet planes = InsetHalfPlanes(piece, inset);
  const Point2 rc = foot.Centroid();
  const auto rows = static_cast<Eigen::Index>(planes.size() * foot.size());
  WiggleQP qp;
  qp.Q = params.weights.asDiagonal();
  qp.A.resize(rows, 3);
  qp.b.resize(rows);
  Eigen::Index row = 0;
  for (const Point2& x : foot.vertices()) {
    const Point2 r = x - rc;
    Eigen::Matrix<double, 2, 3> j;
    j << 1.0, 0.0, -r.y, 0.0, 1.0, r.x;
    for (const HalfPlane& hp : planes.planes()) {
      const Eigen::RowVector2d a(hp.normal.x, hp.normal.y);
      qp.A.row(row) = a * j;
      qp.b[row] = hp.offset - Dot(hp.normal, rc + r);
      ++row;
    }
  }
  const Eigen::Vector3d limit(params.max_translation, params.max_translation, params.max_rotation);
  qp.lower = -limit;
  qp.upper = limit;
  return qp;
}

std::vector<Point2> ApplyWiggle(const ConvexPolygon2& foot, const Eigen::Vector3d& q) {
  const Point2 rc = foot.Centroid();
  std::vector<Point2> out;
  out.reserve(foot.size());
  for (const Point2& x : foot.vertices()) {
    out.push_back(rc + Rotate(x - rc, q.z()) + Point2{q.x(), q.y()});
  }
  return out;
}

ConvexPolygon2 SoleInRegion(const SnapResult& snap, const PlanarRegion& region, const FootPolygon& foot) {
  std::vector<Point2> local;
  for (const auto& w : WorldSole(snap, foot)) {
    const Eigen::Vector3d l = region.ToLocal(w);
    local.push_back({l.x(), l.y()});
  }
  return ConvexPolygon2::FromVertices(std::move(local));
}

double SoleInset(const ConvexPolygon2& sole_in_region, const ConvexPolygon2& piece) {
  double worst = std::numeric_limits<double>::infinity();
  for (const Point2& v : sole_in_region.vertices()) {
    worst = std::min(worst, DistanceInside(v, piece));
  }
  return worst;
}

WiggleOutcome WiggleStep(const SnapResult& snap, const Environment& env, const FootPolygon& foot,
                         const WiggleParams& params) {
  WiggleOutcome out;
  out.snap = snap;
  const PlanarRegion* region = env.FindRegion(snap.region_id);
  if (!region) return out;

  const ConvexPolygon2 sole = SoleInRegion(snap, *region, foot);
  const ConvexPolygon2* piece = nullptr;
  double best_overlap = 0.0;
  for (const ConvexPolygon2& candidate : region->pieces()) {
    if (auto clip = ClipConvex(sole, candidate); clip && clip->Area() > best_overlap) {
      best_overlap = clip->Area();
      piece = &candidate;
    }
  }
  if (!piece) return out;

  double inset = params.inset_distance;
  Attempt attempt;
  for (int k = 0; k <= kInsetHalvings + 1; ++k) {
    attempt = SolveAtInset(sole, *piece, inset, params);
    if (attempt.feasible) break;
    inset = (k == kInsetHalvings) ? 0.0 : inset * 0.5;
  }
  if (!attempt.feasible) return out;

  out.solved = inset == params.inset_distance;
  out.inset_achieved = inset;
  out.shift = attempt.q;
  if (attempt.q.isZero(0.0)) return out;

  // Carry the sole center and heading through the in-plane motion, then
  // re-snap to the same region to restore height, roll and pitch.
  const Point2 rc = sole.Centroid();
  const Eigen::Vector3d center_local = region->ToLocal(snap.foothold_pose.translation());
  const Point2 c{center_local.x(), center_local.y()};
  const Point2 moved = rc + Rotate(c - rc, attempt.q.z()) + Point2{attempt.q.x(), attempt.q.y()};
  const Eigen::Vector3d heading_local =
      region->transform_to_world().rotation().transpose() * snap.foothold_pose.rotation().col(0);
  const Point2 heading = Rotate({heading_local.x(), heading_local.y()}, attempt.q.z());
  const Eigen::Vector3d center_world = region->ToWorld(moved);
  const Eigen::Vector3d heading_world =
      region->transform_to_world().rotation() * Eigen::Vector3d(heading.x, heading.y, 0.0);
  const Pose2 pose(center_world.x(), center_world.y(), std::atan2(heading_world.y(), heading_world.x()));
  out.snap = SnapOntoRegion(pose, *region, foot);
  out.changed = true;
  return out;
}

}  // namespace fsp
