#include "fsp/world_model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

namespace fsp {
namespace {

using nlohmann::json;

std::string RegionPrefix(int id) { return "region " + std::to_string(id) + ": "; }

double NumberAt(const json& j, const char* what, int region_id) {
  if (!j.is_number()) {
    throw EnvironmentError(RegionPrefix(region_id) + what + " must be a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw EnvironmentError(RegionPrefix(region_id) + what + " must be finite");
  }
  return v;
}

PlanarRegion ParseRegion(const json& jr, std::size_t position) {
  if (!jr.is_object()) {
    throw EnvironmentError("regions[" + std::to_string(position) + "] is not an object");
  }
  if (!jr.contains("id") || !jr["id"].is_number_integer()) {
    throw EnvironmentError("regions[" + std::to_string(position) + "]: missing integer \"id\"");
  }
  const int id = jr["id"].get<int>();
  for (const auto& [key, value] : jr.items()) {
    if (key != "id" && key != "translation" && key != "rotation" && key != "pieces") {
      throw EnvironmentError(RegionPrefix(id) + "unknown field \"" + key + "\"");
    }
  }
  for (const char* key : {"translation", "rotation", "pieces"}) {
    if (!jr.contains(key) || !jr[key].is_array()) {
      throw EnvironmentError(RegionPrefix(id) + "missing array \"" + key + "\"");
    }
  }
  const json& jt = jr["translation"];
  const json& jrot = jr["rotation"];
  if (jt.size() != 3) {
    throw EnvironmentError(RegionPrefix(id) + "translation needs 3 numbers");
  }
  if (jrot.size() != 9) {
    throw EnvironmentError(RegionPrefix(id) + "rotation needs 9 numbers (row-major)");
  }
  Eigen::Vector3d translation;
  for (int i = 0; i < 3; ++i) {
    translation[i] = NumberAt(jt[i], "translation entry", id);
  }
  Eigen::Matrix3d rotation;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      rotation(r, c) = NumberAt(jrot[r * 3 + c], "rotation entry", id);
    }
  }
  if (!IsRotationMatrix(rotation)) {
    throw EnvironmentError(RegionPrefix(id) + "rotation is not orthonormal with determinant +1");
  }

  std::vector<ConvexPolygon2> pieces;
  const json& jp = jr["pieces"];
  if (jp.empty()) {
    throw EnvironmentError(RegionPrefix(id) + "region has no pieces");
  }
  for (std::size_t k = 0; k < jp.size(); ++k) {
    if (!jp[k].is_array()) {
      throw EnvironmentError(RegionPrefix(id) + "piece " + std::to_string(k) + " is not an array");
    }
    std::vector<Point2> vertices;
    for (const json& jv : jp[k]) {
      if (!jv.is_array() || jv.size() != 2) {
        throw EnvironmentError(RegionPrefix(id) + "piece " + std::to_string(k) +
                               " has a vertex that is not [x, y]");
      }
      vertices.push_back({NumberAt(jv[0], "vertex x", id), NumberAt(jv[1], "vertex y", id)});
    }
    try {
      pieces.push_back(ConvexPolygon2::FromVertices(std::move(vertices)));
    } catch (const GeometryError& e) {
      throw EnvironmentError(RegionPrefix(id) + "piece " + std::to_string(k) + ": " + e.what());
    }
  }
  return PlanarRegion(id, RigidTransform3(rotation, translation), std::move(pieces));
}

double ProjectedOverlapArea(const Environment& env, std::size_t a, std::size_t b) {
  double area = 0.0;
  for (const auto& pa : env.projected_pieces(a)) {
    for (const auto& pb : env.projected_pieces(b)) {
      if (pa && pb) {
        if (auto clip = ClipConvex(*pa, *pb)) {
          area += clip->Area();
        }
      }
    }
  }
  return area;
}

double ProjectedArea(const Environment& env, std::size_t index) {
  double area = 0.0;
  for (const auto& p : env.projected_pieces(index)) {
    if (p) area += p->Area();
  }
  return area;
}

// Perception can hand us the same surface twice; we only report it.
void WarnOnDuplicateRegions(const Environment& env) {
  for (std::size_t a = 0; a < env.size(); ++a) {
    for (std::size_t b = a + 1; b < env.size(); ++b) {
      if (!env.bounds(a).Overlaps(env.bounds(b))) continue;
      const double smaller = std::min(ProjectedArea(env, a), ProjectedArea(env, b));
      if (smaller <= 0.0) continue;
      const double overlap = ProjectedOverlapArea(env, a, b);
      if (overlap > 0.5 * smaller) {
        spdlog::warn("regions {} and {} overlap over {:.0f}% of the smaller one", env.regions()[a].id(),
                     env.regions()[b].id(), 100.0 * overlap / smaller);
      }
    }
  }
}

}  // namespace

PlanarRegion::PlanarRegion(int id, RigidTransform3 transform_to_world, std::vector<ConvexPolygon2> pieces)
    : id_(id), transform_(std::move(transform_to_world)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) {
    throw EnvironmentError(RegionPrefix(id_) + "region has no pieces");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
      if (auto overlap = ClipConvex(pieces_[i], pieces_[j]); overlap && overlap->Area() >= tol::kPieceOverlapArea) {
        throw EnvironmentError(RegionPrefix(id_) + "pieces " + std::to_string(i) + " and " + std::to_string(j) +
                               " overlap");
      }
    }
  }
}

bool PlanarRegion::IsSnappable() const { return std::abs(Normal().z()) > tol::kVerticalNormalZ; }

std::optional<double> PlanarRegion::PlaneHeightAt(double x, double y) const {
  const Eigen::Vector3d n = Normal();
  if (std::abs(n.z()) <= tol::kVerticalNormalZ) {
    return std::nullopt;
  }
  const Eigen::Vector3d& t = transform_.translation();
  return t.z() - (n.x() * (x - t.x()) + n.y() * (y - t.y())) / n.z();
}

Environment::Environment(std::vector<PlanarRegion> regions) : regions_(std::move(regions)) {
  cache_.reserve(regions_.size());
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    const PlanarRegion& region = regions_[i];
    if (!index_by_id_.emplace(region.id(), i).second) {
      throw EnvironmentError(RegionPrefix(region.id()) + "duplicate region id");
    }
    Cache cache;
    for (const ConvexPolygon2& piece : region.pieces()) {
      ConvexPatch3 patch;
      std::vector<Point2> loop;
      for (const Point2& v : piece.vertices()) {
        const Eigen::Vector3d w = region.ToWorld(v);
        cache.bounds.Extend(w);
        patch.vertices.push_back(w);
        loop.push_back({w.x(), w.y()});
      }
      cache.projected_pieces.push_back(region.IsSnappable() ? ConvexPolygon2::TryFromVertices(loop)
                                                            : std::nullopt);
      cache.world_pieces.push_back(std::move(patch));
      cache.projected_loops.push_back(std::move(loop));
    }
    cache_.push_back(std::move(cache));
  }
}

const PlanarRegion* Environment::FindRegion(int id) const {
  auto it = index_by_id_.find(id);
  return it == index_by_id_.end() ? nullptr : &regions_[it->second];
}

std::optional<std::size_t> Environment::IndexOf(int id) const {
  auto it = index_by_id_.find(id);
  if (it == index_by_id_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Environment::IndicesOverlappingXY(const Point2& lo, const Point2& hi) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    if (cache_[i].bounds.OverlapsXY(lo, hi)) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<int> Environment::RegionsOverlappingDisc(const Point2& center, double radius) const {
  if (!(radius > 0.0)) {
    throw GeometryError("disc radius must be positive");
  }
  std::vector<int> ids;
  const Point2 r{radius, radius};
  for (std::size_t i : IndicesOverlappingXY(center - r, center + r)) {
    for (const auto& loop : cache_[i].projected_loops) {
      if (DistanceToLoop(center, loop) <= radius) {
        ids.push_back(regions_[i].id());
        break;
      }
    }
  }
  return ids;
}

Environment LoadEnvironment(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw EnvironmentError(std::string("environment is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("regions") || !doc["regions"].is_array()) {
    throw EnvironmentError("environment must be an object with a \"regions\" array");
  }
  std::vector<PlanarRegion> regions;
  const json& jr = doc["regions"];
  for (std::size_t i = 0; i < jr.size(); ++i) {
    try {
      regions.push_back(ParseRegion(jr[i], i));
    } catch (const GeometryError& e) {
      throw EnvironmentError(std::string("regions[") + std::to_string(i) + "]: " + e.what());
    }
  }
  Environment env(std::move(regions));
  WarnOnDuplicateRegions(env);
  return env;
}

Environment LoadEnvironmentFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw EnvironmentError("cannot open environment file " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadEnvironment(buffer.str());
}

std::string SaveEnvironment(const Environment& env) {
  json regions = json::array();
  for (const PlanarRegion& region : env.regions()) {
    json jr;
    jr["id"] = region.id();
    const auto& t = region.transform_to_world().translation();
    jr["translation"] = {t.x(), t.y(), t.z()};
    const auto& r = region.transform_to_world().rotation();
    json rot = json::array();
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) {
        rot.push_back(r(row, col));
      }
    }
    jr["rotation"] = std::move(rot);
    json pieces = json::array();
    for (const ConvexPolygon2& piece : region.pieces()) {
      json jp = json::array();
      for (const Point2& v : piece.vertices()) {
        jp.push_back({v.x, v.y});
      }
      pieces.push_back(std::move(jp));
    }
    jr["pieces"] = std::move(pieces);
    regions.push_back(std::move(jr));
  }
  json doc;
  doc["regions"] = std::move(regions);
  return doc.dump(1) + "\n";
}

}  // namespace fsp
