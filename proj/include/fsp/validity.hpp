#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "fsp/lattice.hpp"
#include "fsp/snapper.hpp"
#include "fsp/world_model.hpp"

namespace fsp {

enum class RejectionReason : std::uint8_t {
  kUnsnappable,
  kTooSteep,
  kInsufficientArea,
  kBadStanceGeometry,
  kStepTooHighOrLow,
  kTallStepTooLong,
  kCliffTooClose,
  kStepOverObstacle,
  kBodyBoxCollision,
  kSelfOverlap,
};
inline constexpr std::size_t kRejectionReasonCount = 10;
std::string_view ToString(RejectionReason reason);

using CheckResult = std::optional<RejectionReason>;  // empty means pass

struct CheckerParams {
  double max_incline = DegToRad(40.0);
  double min_area_fraction = 0.75;
  /// Keep-out zone around the stance foot, in the stance foot frame.
  ConvexPolygon2 stance_clearance = ConvexPolygon2::Box(-0.13, -0.075, 0.13, 0.075);
  double max_forward = 0.40;
  double max_backward = 0.15;
  double min_width = 0.10;
  double max_width = 0.40;
  double max_reach = 0.48;
  double max_step_up = 0.30;
  double max_step_down = 0.30;
  double tall_step_height = 0.15;
  double tall_step_max_length = 0.30;
  double tall_step_max_width = 0.35;
  double cliff_height = 0.10;
  double cliff_clearance = 0.05;
  double step_over_height = 0.35;
  double body_box_width = 0.6;
  double body_box_depth = 0.4;
  double body_box_bottom = 0.3;
  double body_box_top = 1.5;

  /// Throws std::invalid_argument on out-of-range values.
  void Validate() const;
};

/// A snapped foot and which side it belongs to.
struct SnappedFoot {
  const SnapResult* snap = nullptr;
  Side side = Side::kLeft;
};

CheckResult CheckIncline(const SnapResult& snap, const CheckerParams& p);
CheckResult CheckArea(const SnapResult& snap, const CheckerParams& p);
CheckResult CheckStepGeometry(const SnappedFoot& stance, const SnappedFoot& swing, const FootPolygon& foot,
                              const CheckerParams& p);
CheckResult CheckCliffClearance(const SnapResult& swing, const Environment& env, const FootPolygon& foot,
                                const CheckerParams& p);
CheckResult CheckStepOverObstacle(const SnapResult& stance, const SnapResult& swing, const Environment& env,
                                  const FootPolygon& foot, const CheckerParams& p);
CheckResult CheckBodyBox(const SnapResult& stance, const SnapResult& swing, const Environment& env,
                         const CheckerParams& p);

/// The rectangle swept above the feet that obstacles must not pierce.
ConvexPatch3 StepOverPatch(const SnapResult& stance, const SnapResult& swing, const FootPolygon& foot,
                           const CheckerParams& p);
OrientedBox3 BodyBox(const SnapResult& stance, const SnapResult& swing, const CheckerParams& p);

/// Runs every check in order and returns the first failure. `swing` is a
/// snap outcome so that an unsnappable child reports kUnsnappable.
CheckResult ValidateEdge(const SnappedFoot& stance, const SnapOutcome& swing, Side swing_side,
                         const Environment& env, const FootPolygon& foot, const CheckerParams& p);

struct RejectionCounts {
  std::array<std::uint64_t, kRejectionReasonCount> by_reason{};

  void Add(RejectionReason r) { ++by_reason[static_cast<std::size_t>(r)]; }
  std::uint64_t Total() const;
  std::uint64_t operator[](RejectionReason r) const { return by_reason[static_cast<std::size_t>(r)]; }
};

}  // namespace fsp
