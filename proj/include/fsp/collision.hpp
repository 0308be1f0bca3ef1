#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "fsp/geometry.hpp"

namespace fsp {

double PointToSegmentDistance(const Point2& p, const Point2& a, const Point2& b);

/// Distance from `p` to the closed convex hull of `loop`. The loop may be
/// degenerate (a segment, e.g. a vertical region seen from above).
double DistanceToLoop(const Point2& p, std::span<const Point2> loop);

/// Distance between a convex polygon and a (possibly degenerate) convex loop;
/// zero when they touch or overlap.
double PolygonToLoopDistance(const ConvexPolygon2& poly, std::span<const Point2> loop);

/// Distance between two convex polygons; zero when they touch or overlap.
double PolygonDistance(const ConvexPolygon2& a, const ConvexPolygon2& b);

/// A planar convex polygon embedded in 3D, vertices in order.
struct ConvexPatch3 {
  std::vector<Eigen::Vector3d> vertices;

  Eigen::Vector3d Normal() const;
};

/// Box with orthonormal axes (columns of `axes`) and half extents along them.
struct OrientedBox3 {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  Eigen::Matrix3d axes = Eigen::Matrix3d::Identity();
  Eigen::Vector3d half_extents = Eigen::Vector3d::Zero();

  std::vector<Eigen::Vector3d> Corners() const;
};

/// Separating-axis tests. Shapes that only touch (overlap below
/// tol::kContact on some axis) do not intersect.
bool Intersects(const OrientedBox3& box, const ConvexPatch3& patch);
bool Intersects(const ConvexPatch3& a, const ConvexPatch3& b);

}  // namespace fsp
