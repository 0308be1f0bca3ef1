#include "fsp/toolkit/generators.hpp"

#include <random>

#include <Eigen/Geometry>

namespace fsp::toolkit {
namespace {

// Every generator starts from the same stance: feet 0.2 m apart at the origin.
constexpr double kHalfStance = 0.1;

GeneratedScenario WithStance(std::vector<PlanarRegion> regions, const Pose2& goal) {
  return {Environment(std::move(regions)), Pose2(0.0, kHalfStance, 0.0), Pose2(0.0, -kHalfStance, 0.0), goal};
}

GeneratedScenario Flat(const GeneratorOptions& o) {
  const double h = 0.5 * o.flat_size;
  return WithStance({HorizontalBox(0, -h, -h, h, h, 0.0)}, Pose2(3.0, 0.0, 0.0));
}

GeneratedScenario Beam(const GeneratorOptions& o) {
  // The beam axis sits between two lattice rows so that feet on either row
  // are only partly supported.
  const double axis_y = 0.025;
  const double x0 = 0.5;
  const double x1 = x0 + o.beam_length;
  std::vector<PlanarRegion> regions;
  regions.push_back(HorizontalBox(0, -0.5, -0.5, x0, 0.5, 0.0));
  regions.push_back(HorizontalBox(1, x0, axis_y - 0.5 * o.beam_width, x1, axis_y + 0.5 * o.beam_width, 0.0));
  regions.push_back(HorizontalBox(2, x1, -0.5, x1 + 1.0, 0.5, 0.0));
  return WithStance(std::move(regions), Pose2(x1 + 0.5, 0.0, 0.0));
}

GeneratedScenario SteppingStones(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.03, 0.03);
  std::uniform_real_distribution<double> height(0.0, 0.1);
  std::vector<PlanarRegion> regions;
  regions.push_back(HorizontalBox(0, -0.5, -0.6, 0.6, 0.6, 0.0));
  int id = 1;
  double x = 0.85;
  for (int i = 0; i < 6; ++i, x += 0.35) {
    for (double lane : {-0.15, 0.15}) {
      const double cx = x + jitter(rng);
      const double cy = lane + jitter(rng);
      regions.push_back(HorizontalBox(id++, cx - 0.13, cy - 0.13, cx + 0.13, cy + 0.13, height(rng)));
    }
  }
  regions.push_back(HorizontalBox(id, x - 0.1, -0.6, x + 1.0, 0.6, 0.0));
  return WithStance(std::move(regions), Pose2(x + 0.4, 0.0, 0.0));
}

GeneratedScenario CinderField(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> height(0.05, 0.2);
  std::uniform_real_distribution<double> yaw(DegToRad(-10.0), DegToRad(10.0));
  std::uniform_real_distribution<double> tilt(DegToRad(-8.0), DegToRad(8.0));
  constexpr double kCell = 0.4;
  std::vector<PlanarRegion> regions;
  regions.push_back(HorizontalBox(0, -0.5, -1.0, 0.5, 1.0, 0.0));
  int id = 1;
  for (int col = 0; col < 5; ++col) {
    for (int row = 0; row < 4; ++row) {
      const Eigen::Vector3d center(0.5 + kCell * (col + 0.5), -0.8 + kCell * (row + 0.5), height(rng));
      const double y = yaw(rng);
      const double p = tilt(rng);
      const double r = tilt(rng);
      regions.push_back(TiltedSquare(id++, center, 0.38, y, p, r));
    }
  }
  regions.push_back(HorizontalBox(id, 2.5, -1.0, 3.5, 1.0, 0.0));
  return WithStance(std::move(regions), Pose2(3.0, 0.0, 0.0));
}

GeneratedScenario NarrowGap(const GeneratorOptions& o) {
  const double half = 0.5 * o.bollard_spacing;
  std::vector<PlanarRegion> regions;
  regions.push_back(HorizontalBox(0, -1.0, -1.5, 3.0, 1.5, 0.0));
  for (auto& r : SolidBlock(1, 0.85, half, 1.15, 1.7, 1.8)) regions.push_back(std::move(r));
  for (auto& r : SolidBlock(6, 0.85, -1.7, 1.15, -half, 1.8)) regions.push_back(std::move(r));
  return WithStance(std::move(regions), Pose2(2.0, 0.0, 0.0));
}

GeneratedScenario PlatformGap(const GeneratorOptions& o) {
  const double x1 = 0.5 + o.platform_gap;
  std::vector<PlanarRegion> regions;
  regions.push_back(HorizontalBox(0, -0.5, -0.5, 0.5, 0.5, 0.0));
  regions.push_back(HorizontalBox(1, x1, -0.5, x1 + 1.0, 0.5, 0.0));
  return WithStance(std::move(regions), Pose2(x1 + 0.5, 0.0, 0.0));
}

}  // namespace

std::string_view ToString(EnvironmentKind kind) {
  switch (kind) {
    case EnvironmentKind::kFlat: return "flat";
    case EnvironmentKind::kBeam: return "beam";
    case EnvironmentKind::kSteppingStones: return "stepping-stones";
    case EnvironmentKind::kCinderField: return "cinder-field";
    case EnvironmentKind::kNarrowGap: return "narrow-gap";
    case EnvironmentKind::kPlatformGap: return "platform-gap";
  }
  return "unknown";
}

std::vector<EnvironmentKind> AllEnvironmentKinds() {
  return {EnvironmentKind::kFlat,        EnvironmentKind::kBeam,      EnvironmentKind::kSteppingStones,
          EnvironmentKind::kCinderField, EnvironmentKind::kNarrowGap, EnvironmentKind::kPlatformGap};
}

std::optional<EnvironmentKind> ParseEnvironmentKind(std::string_view name) {
  for (EnvironmentKind k : AllEnvironmentKinds()) {
    if (ToString(k) == name) return k;
  }
  return std::nullopt;
}

GeneratedScenario GenerateEnvironment(EnvironmentKind kind, std::uint64_t seed, const GeneratorOptions& options) {
  switch (kind) {
    case EnvironmentKind::kFlat: return Flat(options);
    case EnvironmentKind::kBeam: return Beam(options);
    case EnvironmentKind::kSteppingStones: return SteppingStones(seed);
    case EnvironmentKind::kCinderField: return CinderField(seed);
    case EnvironmentKind::kNarrowGap: return NarrowGap(options);
    case EnvironmentKind::kPlatformGap: return PlatformGap(options);
  }
  throw std::invalid_argument("unknown environment kind");
}

PlanarRegion HorizontalBox(int id, double min_x, double min_y, double max_x, double max_y, double z) {
  const double cx = 0.5 * (min_x + max_x);
  const double cy = 0.5 * (min_y + max_y);
  return PlanarRegion(id, RigidTransform3(Eigen::Matrix3d::Identity(), Eigen::Vector3d(cx, cy, z)),
                      {ConvexPolygon2::Box(min_x - cx, min_y - cy, max_x - cx, max_y - cy)});
}

PlanarRegion VerticalFace(int id, const Point2& a, const Point2& b, double z0, double z1) {
  const Point2 d = b - a;
  const double len = Norm(d);
  const Eigen::Vector3d u(d.x / len, d.y / len, 0.0);
  const Eigen::Vector3d up = Eigen::Vector3d::UnitZ();
  Eigen::Matrix3d rotation;
  rotation.col(0) = u;
  rotation.col(1) = up;
  rotation.col(2) = u.cross(up);
  return PlanarRegion(id, RigidTransform3(rotation, Eigen::Vector3d(a.x, a.y, z0)),
                      {ConvexPolygon2::Box(0.0, 0.0, len, z1 - z0)});
}

std::vector<PlanarRegion> SolidBlock(int first_id, double min_x, double min_y, double max_x, double max_y,
                                     double height, double base_z) {
  const double top = base_z + height;
  // Walls wound counter-clockwise seen from above, so normals face outward.
  const Point2 c[4] = {{min_x, min_y}, {max_x, min_y}, {max_x, max_y}, {min_x, max_y}};
  std::vector<PlanarRegion> out;
  out.push_back(HorizontalBox(first_id, min_x, min_y, max_x, max_y, top));
  for (int i = 0; i < 4; ++i) {
    out.push_back(VerticalFace(first_id + 1 + i, c[i], c[(i + 1) % 4], base_z, top));
  }
  return out;
}

PlanarRegion TiltedSquare(int id, const Eigen::Vector3d& center, double size, double yaw, double pitch, double roll) {
  const Eigen::Matrix3d rotation = RotationZ(yaw) * RotationY(pitch) * RotationX(roll);
  const double h = 0.5 * size;
  return PlanarRegion(id, RigidTransform3(rotation, center), {ConvexPolygon2::Box(-h, -h, h, h)});
}

}  // namespace fsp::toolkit
