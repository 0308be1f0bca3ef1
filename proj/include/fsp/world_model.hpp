#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "fsp/collision.hpp"
#include "fsp/geometry.hpp"

namespace fsp {

class EnvironmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded plane in the world: a pose plus convex pieces in the plane's own
/// frame (region z = 0). The union of the pieces is the region's extent.
class PlanarRegion {
 public:
  /// Throws EnvironmentError when a piece overlaps another piece.
  PlanarRegion(int id, RigidTransform3 transform_to_world, std::vector<ConvexPolygon2> pieces);

  int id() const { return id_; }
  const RigidTransform3& transform_to_world() const { return transform_; }
  std::span<const ConvexPolygon2> pieces() const { return pieces_; }

  /// World-frame unit normal (z column of the rotation).
  Eigen::Vector3d Normal() const { return transform_.rotation().col(2); }
  /// False for near-vertical regions, which can only act as obstacles.
  bool IsSnappable() const;
  /// Height of the region's infinite plane above (x, y); empty when near-vertical.
  std::optional<double> PlaneHeightAt(double x, double y) const;

  Eigen::Vector3d ToWorld(const Point2& local) const {
    return transform_.Apply(Eigen::Vector3d(local.x, local.y, 0.0));
  }
  /// World point expressed in the region frame (z is the height above the plane).
  Eigen::Vector3d ToLocal(const Eigen::Vector3d& world) const { return transform_.ApplyInverse(world); }

 private:
  int id_;
  RigidTransform3 transform_;
  std::vector<ConvexPolygon2> pieces_;
};

struct Aabb3 {
  Eigen::Vector3d min = Eigen::Vector3d::Constant(std::numeric_limits<double>::infinity());
  Eigen::Vector3d max = Eigen::Vector3d::Constant(-std::numeric_limits<double>::infinity());

  void Extend(const Eigen::Vector3d& p) {
    min = min.cwiseMin(p);
    max = max.cwiseMax(p);
  }
  bool OverlapsXY(const Point2& lo, const Point2& hi) const {
    return min.x() <= hi.x && max.x() >= lo.x && min.y() <= hi.y && max.y() >= lo.y;
  }
  bool Overlaps(const Aabb3& o) const {
    return (min.array() <= o.max.array()).all() && (max.array() >= o.min.array()).all();
  }
};

/// Immutable set of planar regions with per-region caches for spatial queries.
class Environment {
 public:
  Environment() = default;
  /// Throws EnvironmentError on duplicate region ids.
  explicit Environment(std::vector<PlanarRegion> regions);

  std::span<const PlanarRegion> regions() const { return regions_; }
  std::size_t size() const { return regions_.size(); }
  bool empty() const { return regions_.empty(); }

  const PlanarRegion* FindRegion(int id) const;
  std::optional<std::size_t> IndexOf(int id) const;

  const Aabb3& bounds(std::size_t index) const { return cache_[index].bounds; }
  /// Pieces mapped to world coordinates.
  std::span<const ConvexPatch3> world_pieces(std::size_t index) const { return cache_[index].world_pieces; }
  /// Pieces projected vertically onto the world xy plane (degenerate for vertical regions).
  std::span<const std::vector<Point2>> projected_loops(std::size_t index) const {
    return cache_[index].projected_loops;
  }
  /// Valid convex projections; entries are empty where the projection is degenerate.
  std::span<const std::optional<ConvexPolygon2>> projected_pieces(std::size_t index) const {
    return cache_[index].projected_pieces;
  }

  /// Region indices whose world bounding box overlaps the xy rectangle.
  std::vector<std::size_t> IndicesOverlappingXY(const Point2& lo, const Point2& hi) const;
  /// Ids of every region with a projected piece within `radius` of `center`,
  /// in environment order.
  std::vector<int> RegionsOverlappingDisc(const Point2& center, double radius) const;

 private:
  struct Cache {
    Aabb3 bounds;
    std::vector<ConvexPatch3> world_pieces;
    std::vector<std::vector<Point2>> projected_loops;
    std::vector<std::optional<ConvexPolygon2>> projected_pieces;
  };

  std::vector<PlanarRegion> regions_;
  std::vector<Cache> cache_;
  std::unordered_map<int, std::size_t> index_by_id_;
};

/// Parses the JSON environment document. Throws EnvironmentError naming the
/// offending region on any schema or geometry violation.
Environment LoadEnvironment(std::string_view json_text);
Environment LoadEnvironmentFile(const std::filesystem::path& path);
/// Serializes to the same JSON schema; doubles round-trip exactly.
std::string SaveEnvironment(const Environment& env);

}  // namespace fsp
