#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fsp/tolerances.hpp"

namespace fsp {

inline constexpr double kPi = std::numbers::pi;

inline constexpr double DegToRad(double deg) { return deg * kPi / 180.0; }
inline constexpr double RadToDeg(double rad) { return rad * 180.0 / kPi; }

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  constexpr Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Point2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Point2 operator-() const { return {-x, -y}; }
  constexpr bool operator==(const Point2&) const = default;
};

inline constexpr double Dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline constexpr double Cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline double Norm(const Point2& a) { return std::hypot(a.x, a.y); }
inline double Distance(const Point2& a, const Point2& b) { return Norm(a - b); }
/// Counter-clockwise perpendicular.
inline constexpr Point2 Perp(const Point2& a) { return {-a.y, a.x}; }
inline Point2 Rotate(const Point2& p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Wraps an angle into (-pi, pi].
double WrapAngle(double angle);
/// Shortest signed rotation taking `from` onto `to`.
inline double AngleDifference(double to, double from) { return WrapAngle(to - from); }
/// Spherical-linear interpolation on the circle; t = 0 gives `a`, t = 1 gives `b`.
double InterpolateAngle(double a, double b, double t);
/// Circular mean of two angles (the interpolation midpoint).
inline double CircularMean(double a, double b) { return InterpolateAngle(a, b, 0.5); }

/// Planar pose. The yaw is kept in (-pi, pi].
struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;

  Pose2() = default;
  Pose2(double x_in, double y_in, double yaw_in) : x(x_in), y(y_in), yaw(WrapAngle(yaw_in)) {}

  Point2 position() const { return {x, y}; }
  /// Maps a point from this pose's frame into the parent frame.
  Point2 Apply(const Point2& local) const { return Rotate(local, yaw) + position(); }
  /// Maps a point from the parent frame into this pose's frame.
  Point2 ApplyInverse(const Point2& world) const { return Rotate(world - position(), -yaw); }
};

/// A strictly convex, counter-clockwise polygon with at least three vertices.
class ConvexPolygon2 {
 public:
  /// Normalizes winding, drops duplicate and collinear vertices, then validates.
  /// Throws GeometryError when the result is not a strictly convex polygon.
  static ConvexPolygon2 FromVertices(std::vector<Point2> vertices);
  static std::optional<ConvexPolygon2> TryFromVertices(std::vector<Point2> vertices);

  static ConvexPolygon2 Box(double min_x, double min_y, double max_x, double max_y);
  /// Rectangle centred on the origin, `length` along x and `width` along y.
  static ConvexPolygon2 Rectangle(double length, double width);

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  double Area() const;
  /// Area centroid.
  Point2 Centroid() const;
  /// Largest distance from `p` to any vertex.
  double CircumradiusAbout(const Point2& p) const;

  bool operator==(const ConvexPolygon2&) const = default;

 private:
  explicit ConvexPolygon2(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {}

  std::vector<Point2> vertices_;
};

/// Constraint normal . p <= offset with a unit normal.
struct HalfPlane {
  Point2 normal;
  double offset = 0.0;

  double Slack(const Point2& p) const { return offset - Dot(normal, p); }
};

/// Intersection of half-planes, A p <= b with unit rows.
class HalfPlaneSet {
 public:
  HalfPlaneSet() = default;
  explicit HalfPlaneSet(std::vector<HalfPlane> planes) : planes_(std::move(planes)) {}

  /// One outward-facing half-plane per polygon edge.
  static HalfPlaneSet FromPolygon(const ConvexPolygon2& poly);

  std::span<const HalfPlane> planes() const { return planes_; }
  std::size_t size() const { return planes_.size(); }

  bool Contains(const Point2& p, double slack = tol::kBoundary) const;
  /// Smallest slack over all constraints; negative when `p` is outside.
  double MinSlack(const Point2& p) const;
  /// Clips `bound` by every constraint. Empty when the feasible set is empty
  /// (or degenerate) inside `bound`.
  std::optional<ConvexPolygon2> ClipPolygon(const ConvexPolygon2& bound) const;

 private:
  std::vector<HalfPlane> planes_;
};

double PolygonArea(const ConvexPolygon2& poly);
/// Intersection of two convex polygons; empty when interiors do not overlap.
std::optional<ConvexPolygon2> ClipConvex(const ConvexPolygon2& a, const ConvexPolygon2& b);
/// Clips a polygon by a single half-plane.
std::optional<ConvexPolygon2> ClipByHalfPlane(const ConvexPolygon2& poly, const HalfPlane& plane);
/// Edge constraints of `poly` with every offset reduced by `inset` (>= 0).
HalfPlaneSet InsetHalfPlanes(const ConvexPolygon2& poly, double inset);
/// Boundary-inclusive containment with tol::kBoundary slack.
bool PointInPolygon(const Point2& p, const ConvexPolygon2& poly);
/// Rotates every vertex by pose.yaw about the origin, then translates.
ConvexPolygon2 TransformPolygon(const ConvexPolygon2& poly, const Pose2& pose);
/// Signed distance of `p` inside `poly`: min over edges of the edge slack.
double DistanceInside(const Point2& p, const ConvexPolygon2& poly);

/// Proper rigid motion in 3D.
class RigidTransform3 {
 public:
  RigidTransform3() : rotation_(Eigen::Matrix3d::Identity()), translation_(Eigen::Vector3d::Zero()) {}
  /// Throws GeometryError unless `rotation` is orthonormal with determinant +1.
  RigidTransform3(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation);

  static RigidTransform3 Identity() { return {}; }

  const Eigen::Matrix3d& rotation() const { return rotation_; }
  const Eigen::Vector3d& translation() const { return translation_; }

  Eigen::Vector3d Apply(const Eigen::Vector3d& p) const { return rotation_ * p + translation_; }
  Eigen::Vector3d ApplyInverse(const Eigen::Vector3d& p) const {
    return rotation_.transpose() * (p - translation_);
  }
  RigidTransform3 Inverse() const;
  RigidTransform3 operator*(const RigidTransform3& rhs) const;

 private:
  Eigen::Matrix3d rotation_;
  Eigen::Vector3d translation_;
};

bool IsRotationMatrix(const Eigen::Matrix3d& m, double tolerance = tol::kOrthonormal);
Eigen::Matrix3d RotationZ(double yaw);
Eigen::Matrix3d RotationY(double pitch);
Eigen::Matrix3d RotationX(double roll);

}  // namespace fsp
