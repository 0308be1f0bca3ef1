#include "fsp/collision.hpp"

#include <algorithm>
#include <limits>

#include <Eigen/Geometry>

namespace fsp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double LoopSignedArea(std::span<const Point2> loop) {
  double twice = 0.0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    twice += Cross(loop[i], loop[(i + 1) % loop.size()]);
  }
  return 0.5 * twice;
}

// Edge normals of a loop, skipping zero-length edges.
std::vector<Point2> LoopAxes(std::span<const Point2> loop) {
  std::vector<Point2> axes;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Point2 e = loop[(i + 1) % loop.size()] - loop[i];
    const double len = Norm(e);
    if (len > 1e-15) {
      axes.push_back(Perp(e) / len);
    }
  }
  return axes;
}

bool LoopsOverlap2(std::span<const Point2> a, std::span<const Point2> b) {
  auto separated_on = [&](const Point2& axis) {
    double amin = kInf, amax = -kInf, bmin = kInf, bmax = -kInf;
    for (const Point2& p : a) {
      const double d = Dot(axis, p);
      amin = std::min(amin, d);
      amax = std::max(amax, d);
    }
    for (const Point2& p : b) {
      const double d = Dot(axis, p);
      bmin = std::min(bmin, d);
      bmax = std::max(bmax, d);
    }
    return amax < bmin - 1e-12 || bmax < amin - 1e-12;
  };
  for (const Point2& axis : LoopAxes(a)) {
    if (separated_on(axis)) return false;
  }
  for (const Point2& axis : LoopAxes(b)) {
    if (separated_on(axis)) return false;
  }
  return true;
}

double LoopToLoopDistance(std::span<const Point2> a, std::span<const Point2> b) {
  if (LoopsOverlap2(a, b)) {
    return 0.0;
  }
  double best = kInf;
  auto scan = [&best](std::span<const Point2> pts, std::span<const Point2> loop) {
    for (const Point2& p : pts) {
      for (std::size_t i = 0; i < loop.size(); ++i) {
        best = std::min(best, PointToSegmentDistance(p, loop[i], loop[(i + 1) % loop.size()]));
      }
    }
  };
  scan(a, b);
  scan(b, a);
  return best;
}

struct Interval {
  double lo = kInf;
  double hi = -kInf;
};

Interval Project(const std::vector<Eigen::Vector3d>& pts, const Eigen::Vector3d& axis) {
  Interval out;
  for (const auto& p : pts) {
    const double d = axis.dot(p);
    out.lo = std::min(out.lo, d);
    out.hi = std::max(out.hi, d);
  }
  return out;
}

bool SeparatedAlong(const std::vector<Eigen::Vector3d>& a, const std::vector<Eigen::Vector3d>& b,
                    const Eigen::Vector3d& raw_axis) {
  const double len = raw_axis.norm();
  if (len < 1e-12) {
    return false;
  }
  const Eigen::Vector3d axis = raw_axis / len;
  const Interval ia = Project(a, axis);
  const Interval ib = Project(b, axis);
  // Penetration depth: the shortest push along the axis that separates them.
  const double depth = std::min(ia.hi - ib.lo, ib.hi - ia.lo);
  return depth <= tol::kContact;
}

std::vector<Eigen::Vector3d> PatchEdges(const ConvexPatch3& patch) {
  std::vector<Eigen::Vector3d> edges;
  const auto& v = patch.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    edges.push_back(v[(i + 1) % v.size()] - v[i]);
  }
  return edges;
}

}  // namespace

double PointToSegmentDistance(const Point2& p, const Point2& a, const Point2& b) {
  const Point2 ab = b - a;
  const double len2 = Dot(ab, ab);
  if (len2 <= 0.0) {
    return Distance(p, a);
  }
  const double t = std::clamp(Dot(p - a, ab) / len2, 0.0, 1.0);
  return Distance(p, a + ab * t);
}

double DistanceToLoop(const Point2& p, std::span<const Point2> loop) {
  if (loop.empty()) {
    return kInf;
  }
  const double area = LoopSignedArea(loop);
  if (std::abs(area) > tol::kMinArea) {
    const double sign = area > 0.0 ? 1.0 : -1.0;
    bool inside = true;
    for (std::size_t i = 0; i < loop.size() && inside; ++i) {
      const Point2& a = loop[i];
      const Point2& b = loop[(i + 1) % loop.size()];
      inside = sign * Cross(b - a, p - a) >= 0.0;
    }
    if (inside) {
      return 0.0;
    }
  }
  double best = kInf;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    best = std::min(best, PointToSegmentDistance(p, loop[i], loop[(i + 1) % loop.size()]));
  }
  return best;
}

double PolygonToLoopDistance(const ConvexPolygon2& poly, std::span<const Point2> loop) {
  return LoopToLoopDistance(poly.vertices(), loop);
}

double PolygonDistance(const ConvexPolygon2& a, const ConvexPolygon2& b) {
  return LoopToLoopDistance(a.vertices(), b.vertices());
}

Eigen::Vector3d ConvexPatch3::Normal() const {
  // Newell's method; robust to nearly collinear leading vertices.
  Eigen::Vector3d n = Eigen::Vector3d::Zero();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % vertices.size()];
    n.x() += (a.y() - b.y()) * (a.z() + b.z());
    n.y() += (a.z() - b.z()) * (a.x() + b.x());
    n.z() += (a.x() - b.x()) * (a.y() + b.y());
  }
  const double len = n.norm();
  return len > 0.0 ? Eigen::Vector3d(n / len) : Eigen::Vector3d::UnitZ();
}

std::vector<Eigen::Vector3d> OrientedBox3::Corners() const {
  std::vector<Eigen::Vector3d> out;
  out.reserve(8);
  for (int sx : {-1, 1}) {
    for (int sy : {-1, 1}) {
      for (int sz : {-1, 1}) {
        out.push_back(center + axes.col(0) * (sx * half_extents.x()) +
                      axes.col(1) * (sy * half_extents.y()) + axes.col(2) * (sz * half_extents.z()));
      }
    }
  }
  return out;
}

bool Intersects(const OrientedBox3& box, const ConvexPatch3& patch) {
  const std::vector<Eigen::Vector3d> corners = box.Corners();
  const Eigen::Vector3d normal = patch.Normal();
  const std::vector<Eigen::Vector3d> edges = PatchEdges(patch);

  for (int i = 0; i < 3; ++i) {
    if (SeparatedAlong(corners, patch.vertices, box.axes.col(i))) return false;
  }
  if (SeparatedAlong(corners, patch.vertices, normal)) return false;
  for (const auto& e : edges) {
    if (SeparatedAlong(corners, patch.vertices, normal.cross(e))) return false;
    for (int i = 0; i < 3; ++i) {
      if (SeparatedAlong(corners, patch.vertices, box.axes.col(i).cross(e))) return false;
    }
  }
  return true;
}

bool Intersects(const ConvexPatch3& a, const ConvexPatch3& b) {
  const Eigen::Vector3d na = a.Normal();
  const Eigen::Vector3d nb = b.Normal();
  const std::vector<Eigen::Vector3d> ea = PatchEdges(a);
  const std::vector<Eigen::Vector3d> eb = PatchEdges(b);

  if (SeparatedAlong(a.vertices, b.vertices, na)) return false;
  if (SeparatedAlong(a.vertices, b.vertices, nb)) return false;
  for (const auto& e : ea) {
    if (SeparatedAlong(a.vertices, b.vertices, na.cross(e))) return false;
  }
  for (const auto& e : eb) {
    if (SeparatedAlong(a.vertices, b.vertices, nb.cross(e))) return false;
  }
  for (const auto& e1 : ea) {
    for (const auto& e2 : eb) {
      if (SeparatedAlong(a.vertices, b.vertices, e1.cross(e2))) return false;
    }
  }
  return true;
}

}  // namespace fsp
