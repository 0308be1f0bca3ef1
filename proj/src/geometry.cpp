#include "fsp/geometry.hpp"

#include <algorithm>
#include <sstream>

#include <Eigen/Dense>

namespace fsp {
namespace {

double SignedArea(const std::vector<Point2>& pts) {
  double twice = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % pts.size()];
    twice += Cross(a, b);
  }
  return 0.5 * twice;
}

// Distance of `p` from the infinite line through `a` and `b`.
double DistanceToLine(const Point2& p, const Point2& a, const Point2& b) {
  const Point2 ab = b - a;
  const double len = Norm(ab);
  if (len < 1e-15) {
    return Distance(p, a);
  }
  return std::abs(Cross(ab, p - a)) / len;
}

std::optional<std::vector<Point2>> Normalize(std::vector<Point2> pts, std::string* why) {
  auto fail = [why](const char* msg) -> std::optional<std::vector<Point2>> {
    if (why != nullptr) {
      *why = msg;
    }
    return std::nullopt;
  };
  for (const Point2& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      return fail("non-finite vertex");
    }
  }

  // Consecutive duplicates, including the closing pair.
  std::vector<Point2> unique;
  unique.reserve(pts.size());
  for (const Point2& p : pts) {
    if (unique.empty() || Distance(unique.back(), p) > 1e-12) {
      unique.push_back(p);
    }
  }
  while (unique.size() > 1 && Distance(unique.front(), unique.back()) <= 1e-12) {
    unique.pop_back();
  }
  if (unique.size() < 3) {
    return fail("fewer than 3 distinct vertices");
  }
  if (SignedArea(unique) < 0.0) {
    std::reverse(unique.begin(), unique.end());
  }

  bool removed = true;
  while (removed && unique.size() >= 3) {
    removed = false;
    for (std::size_t i = 0; i < unique.size(); ++i) {
      const Point2& prev = unique[(i + unique.size() - 1) % unique.size()];
      const Point2& next = unique[(i + 1) % unique.size()];
      if (DistanceToLine(unique[i], prev, next) < tol::kCollinear) {
        unique.erase(unique.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
  }
  if (unique.size() < 3) {
    return fail("fewer than 3 non-collinear vertices");
  }
  if (SignedArea(unique) <= tol::kMinArea) {
    return fail("area below tolerance");
  }

  double turning = 0.0;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    const Point2& prev = unique[(i + unique.size() - 1) % unique.size()];
    const Point2& cur = unique[i];
    const Point2& next = unique[(i + 1) % unique.size()];
    const Point2 e0 = cur - prev;
    const Point2 e1 = next - cur;
    if (Cross(e0, e1) <= 0.0) {
      return fail("polygon is not convex");
    }
    turning += std::atan2(Cross(e0, e1), Dot(e0, e1));
  }
  if (std::abs(turning - 2.0 * kPi) > 1e-6) {
    return fail("polygon is self-intersecting");
  }
  return unique;
}

std::vector<Point2> ClipLoop(const std::vector<Point2>& loop, const HalfPlane& plane) {
  std::vector<Point2> out;
  if (loop.empty()) {
    return out;
  }
  out.reserve(loop.size() + 1);
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Point2& p = loop[i];
    const Point2& q = loop[(i + 1) % loop.size()];
    const double sp = plane.Slack(p);
    const double sq = plane.Slack(q);
    if (sp >= 0.0) {
      out.push_back(p);
    }
    if ((sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0)) {
      out.push_back(p + (q - p) * (sp / (sp - sq)));
    }
  }
  return out;
}

}  // namespace

double WrapAngle(double angle) {
  double wrapped = std::remainder(angle, 2.0 * kPi);
  if (wrapped <= -kPi) {
    wrapped += 2.0 * kPi;
  }
  return wrapped;
}

double InterpolateAngle(double a, double b, double t) {
  return WrapAngle(a + t * AngleDifference(b, a));
}

ConvexPolygon2 ConvexPolygon2::FromVertices(std::vector<Point2> vertices) {
  std::string why;
  auto normalized = Normalize(std::move(vertices), &why);
  if (!normalized) {
    throw GeometryError("invalid convex polygon: " + why);
  }
  return ConvexPolygon2(std::move(*normalized));
}

std::optional<ConvexPolygon2> ConvexPolygon2::TryFromVertices(std::vector<Point2> vertices) {
  auto normalized = Normalize(std::move(vertices), nullptr);
  if (!normalized) {
    return std::nullopt;
  }
  return ConvexPolygon2(std::move(*normalized));
}

ConvexPolygon2 ConvexPolygon2::Box(double min_x, double min_y, double max_x, double max_y) {
  return FromVertices({{min_x, min_y}, {max_x, min_y}, {max_x, max_y}, {min_x, max_y}});
}

ConvexPolygon2 ConvexPolygon2::Rectangle(double length, double width) {
  return Box(-0.5 * length, -0.5 * width, 0.5 * length, 0.5 * width);
}

double ConvexPolygon2::Area() const { return SignedArea(vertices_); }

Point2 ConvexPolygon2::Centroid() const {
  // Relative to the first vertex to keep the sums well conditioned.
  const Point2 origin = vertices_.front();
  double twice_area = 0.0;
  Point2 acc;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point2 a = vertices_[i] - origin;
    const Point2 b = vertices_[(i + 1) % vertices_.size()] - origin;
    const double c = Cross(a, b);
    twice_area += c;
    acc = acc + (a + b) * c;
  }
  return origin + acc / (3.0 * twice_area);
}

double ConvexPolygon2::CircumradiusAbout(const Point2& p) const {
  double r = 0.0;
  for (const Point2& v : vertices_) {
    r = std::max(r, Distance(v, p));
  }
  return r;
}

HalfPlaneSet HalfPlaneSet::FromPolygon(const ConvexPolygon2& poly) {
  std::vector<HalfPlane> planes;
  planes.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly.vertex(i + 1);
    const Point2 edge = b - a;
    // Outward normal of a counter-clockwise polygon points to the right of the edge.
    const Point2 normal = Point2{edge.y, -edge.x} / Norm(edge);
    planes.push_back({normal, Dot(normal, a)});
  }
  return HalfPlaneSet(std::move(planes));
}

bool HalfPlaneSet::Contains(const Point2& p, double slack) const {
  return std::all_of(planes_.begin(), planes_.end(),
                     [&](const HalfPlane& h) { return h.Slack(p) >= -slack; });
}

double HalfPlaneSet::MinSlack(const Point2& p) const {
  double min_slack = std::numeric_limits<double>::infinity();
  for (const HalfPlane& h : planes_) {
    min_slack = std::min(min_slack, h.Slack(p));
  }
  return min_slack;
}

std::optional<ConvexPolygon2> HalfPlaneSet::ClipPolygon(const ConvexPolygon2& bound) const {
  std::vector<Point2> loop(bound.vertices().begin(), bound.vertices().end());
  for (const HalfPlane& h : planes_) {
    loop = ClipLoop(loop, h);
    if (loop.size() < 3) {
      return std::nullopt;
    }
  }
  return ConvexPolygon2::TryFromVertices(std::move(loop));
}

double PolygonArea(const ConvexPolygon2& poly) { return poly.Area(); }

std::optional<ConvexPolygon2> ClipByHalfPlane(const ConvexPolygon2& poly, const HalfPlane& plane) {
  std::vector<Point2> loop(poly.vertices().begin(), poly.vertices().end());
  loop = ClipLoop(loop, plane);
  if (loop.size() < 3) {
    return std::nullopt;
  }
  return ConvexPolygon2::TryFromVertices(std::move(loop));
}

std::optional<ConvexPolygon2> ClipConvex(const ConvexPolygon2& a, const ConvexPolygon2& b) {
  return HalfPlaneSet::FromPolygon(b).ClipPolygon(a);
}

HalfPlaneSet InsetHalfPlanes(const ConvexPolygon2& poly, double inset) {
  if (!(inset >= 0.0)) {
    throw GeometryError("inset distance must be non-negative");
  }
  HalfPlaneSet edges = HalfPlaneSet::FromPolygon(poly);
  std::vector<HalfPlane> planes(edges.planes().begin(), edges.planes().end());
  for (HalfPlane& h : planes) {
    h.offset -= inset;
  }
  return HalfPlaneSet(std::move(planes));
}

bool PointInPolygon(const Point2& p, const ConvexPolygon2& poly) {
  return HalfPlaneSet::FromPolygon(poly).Contains(p, tol::kBoundary);
}

ConvexPolygon2 TransformPolygon(const ConvexPolygon2& poly, const Pose2& pose) {
  std::vector<Point2> out;
  out.reserve(poly.size());
  for (const Point2& v : poly.vertices()) {
    out.push_back(pose.Apply(v));
  }
  return ConvexPolygon2::FromVertices(std::move(out));
}

double DistanceInside(const Point2& p, const ConvexPolygon2& poly) {
  return HalfPlaneSet::FromPolygon(poly).MinSlack(p);
}

bool IsRotationMatrix(const Eigen::Matrix3d& m, double tolerance) {
  if (!m.allFinite()) {
    return false;
  }
  const Eigen::Matrix3d gram = m.transpose() * m - Eigen::Matrix3d::Identity();
  return gram.cwiseAbs().maxCoeff() <= tolerance && std::abs(m.determinant() - 1.0) <= tolerance;
}

RigidTransform3::RigidTransform3(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation)
    : rotation_(rotation), translation_(translation) {
  if (!IsRotationMatrix(rotation)) {
    std::ostringstream msg;
    msg << "rotation is not orthonormal with determinant 1 (det = " << rotation.determinant() << ")";
    throw GeometryError(msg.str());
  }
  if (!translation.allFinite()) {
    throw GeometryError("translation is not finite");
  }
}

RigidTransform3 RigidTransform3::Inverse() const {
  RigidTransform3 inv;
  inv.rotation_ = rotation_.transpose();
  inv.translation_ = -(inv.rotation_ * translation_);
  return inv;
}

RigidTransform3 RigidTransform3::operator*(const RigidTransform3& rhs) const {
  RigidTransform3 out;
  out.rotation_ = rotation_ * rhs.rotation_;
  out.translation_ = rotation_ * rhs.translation_ + translation_;
  return out;
}

Eigen::Matrix3d RotationZ(double yaw) {
  return Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()).toRotationMatrix();
}

Eigen::Matrix3d RotationY(double pitch) {
  return Eigen::AngleAxisd(pitch, Eigen::Vector3d::UnitY()).toRotationMatrix();
}

Eigen::Matrix3d RotationX(double roll) {
  return Eigen::AngleAxisd(roll, Eigen::Vector3d::UnitX()).toRotationMatrix();
}

}  // namespace fsp
