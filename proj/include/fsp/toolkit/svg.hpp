#pragma once

#include <optional>
#include <string>

#include "fsp/planner.hpp"
#include "fsp/world_model.hpp"

namespace fsp::toolkit {

struct SvgAnnotations {
  std::optional<Pose2> start;  // midstance
  std::optional<Pose2> goal;
  double pixels_per_meter = 100.0;
};

/// Top-down view: one path per region (fill shaded by height), one polygon per
/// planned foot (class "foot left" or "foot right"), cropped footholds
/// (class "foothold") and start/goal circles.
std::string RenderSvg(const Environment& env, const PlannerResult* plan, const FootPolygon& foot,
                      const SvgAnnotations& annotations = {});

}  // namespace fsp::toolkit
