#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "fsp/geometry.hpp"

namespace fsp {

enum class Side : std::uint8_t { kLeft, kRight };

inline constexpr Side Opposite(Side s) { return s == Side::kLeft ? Side::kRight : Side::kLeft; }
std::string_view ToString(Side s);
/// +1 for the left foot, -1 for the right: the direction of that foot's side in
/// a body-aligned frame.
inline constexpr double SideSign(Side s) { return s == Side::kLeft ? 1.0 : -1.0; }

struct LatticeParams {
  double xy_resolution = 0.05;
  double yaw_resolution = DegToRad(10.0);

  int YawCount() const;
  /// Throws std::invalid_argument on non-positive resolutions or a yaw step
  /// that does not divide the circle.
  void Validate() const;
};

/// Graph vertex: lattice indices plus the foot it belongs to.
struct FootstepNode {
  int x_index = 0;
  int y_index = 0;
  int yaw_index = 0;  // in [0, YawCount)
  Side side = Side::kLeft;

  auto operator<=>(const FootstepNode&) const = default;
};

struct FootstepNodeHash {
  std::size_t operator()(const FootstepNode& n) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(n.x_index);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(n.y_index);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(n.yaw_index);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(n.side);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Reachability box in the stance foot's side-mirrored frame: `length` is
/// forward (negative is backward), `width` is lateral toward the swing foot's
/// side and `yaw` is positive when the swing foot turns its toe outward.
struct ExpansionParams {
  double min_length = -0.20;
  double max_length = 0.45;
  double min_width = 0.10;
  double max_width = 0.40;
  double min_yaw_delta = DegToRad(-20.0);
  double max_yaw_delta = DegToRad(40.0);
  double max_reach = 0.50;

  void Validate() const;
};

/// Child placement relative to the stance foot, in the side-mirrored frame.
struct StanceOffset {
  double forward = 0.0;
  double width = 0.0;
  double yaw = 0.0;
};

StanceOffset ToStanceFrame(const Pose2& stance, Side stance_side, const Pose2& swing);

Pose2 NodeToPose(const FootstepNode& node, const LatticeParams& lattice);
/// Nearest lattice vertex, rounding half away from zero on each axis.
FootstepNode PoseToNode(const Pose2& pose, Side side, const LatticeParams& lattice);

/// Every lattice vertex of the opposite side inside the parent's reachability
/// box, at every allowed yaw, within the reach cap. Sorted by stance-frame
/// (forward, width, yaw).
std::vector<FootstepNode> ExpandNode(const FootstepNode& parent, const LatticeParams& lattice,
                                     const ExpansionParams& expansion);

}  // namespace fsp
