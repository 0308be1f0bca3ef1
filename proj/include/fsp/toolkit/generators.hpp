#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsp/geometry.hpp"
#include "fsp/world_model.hpp"

namespace fsp::toolkit {

enum class EnvironmentKind { kFlat, kBeam, kSteppingStones, kCinderField, kNarrowGap, kPlatformGap };

std::string_view ToString(EnvironmentKind kind);
/// Accepts the CLI spelling (flat, beam, stepping-stones, cinder-field,
/// narrow-gap, platform-gap).
std::optional<EnvironmentKind> ParseEnvironmentKind(std::string_view name);
std::vector<EnvironmentKind> AllEnvironmentKinds();

struct GeneratorOptions {
  double flat_size = 10.0;
  double beam_width = 0.1016;  // 4 inches
  double beam_length = 2.0;
  double bollard_spacing = 0.5;
  double platform_gap = 0.8;
};

/// A generated world with the start stance and goal it was designed for.
struct GeneratedScenario {
  Environment env;
  Pose2 start_left;
  Pose2 start_right;
  Pose2 goal;
};

/// Deterministic per (kind, seed, options).
GeneratedScenario GenerateEnvironment(EnvironmentKind kind, std::uint64_t seed, const GeneratorOptions& options = {});

/// Building blocks shared with tests and scenarios.
PlanarRegion HorizontalBox(int id, double min_x, double min_y, double max_x, double max_y, double z);
/// Vertical rectangle above the segment a-b, from z0 to z1. The normal points
/// to the right of a->b.
PlanarRegion VerticalFace(int id, const Point2& a, const Point2& b, double z0, double z1);
/// Axis-aligned solid block: a top face and four walls, ids first_id .. first_id + 4.
std::vector<PlanarRegion> SolidBlock(int first_id, double min_x, double min_y, double max_x, double max_y,
                                     double height, double base_z = 0.0);
/// Square region of side `size` centred at `center`, rotated by yaw then tilted.
PlanarRegion TiltedSquare(int id, const Eigen::Vector3d& center, double size, double yaw, double pitch, double roll);

}  // namespace fsp::toolkit
