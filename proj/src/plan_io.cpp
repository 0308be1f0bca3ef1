#include "fsp/plan_io.hpp"

#include <nlohmann/json.hpp>

namespace fsp {

std::string SavePlan(const PlannerResult& result, const PlanWriteOptions& options) {
  using nlohmann::ordered_json;
  ordered_json doc = ordered_json::object();
  doc["status"] = std::string(ToString(result.status));
  ordered_json steps = ordered_json::array();
  for (const PlannedStep& step : result.steps) {
    ordered_json js = ordered_json::object();
    js["side"] = std::string(ToString(step.side));
    const auto& t = step.snap.foothold_pose.translation();
    js["translation"] = {t.x(), t.y(), t.z()};
    ordered_json rot = ordered_json::array();
    const auto& r = step.snap.foothold_pose.rotation();
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) rot.push_back(r(row, col));
    }
    js["rotation"] = std::move(rot);
    js["area_fraction"] = step.snap.area_fraction;
    ordered_json foothold = ordered_json::array();
    if (step.snap.cropped_foothold) {
      for (const Point2& v : step.snap.cropped_foothold->vertices()) foothold.push_back({v.x, v.y});
    }
    js["foothold"] = std::move(foothold);
    steps.push_back(std::move(js));
  }
  doc["steps"] = std::move(steps);
  const PlannerStats& s = result.stats;
  doc["stats"] = {{"nodes_expanded", s.nodes_expanded},
                  {"children_considered", s.children_considered},
                  {"percent_rejected", s.PercentRejected()},
                  {"duration_s", options.omit_timing ? 0.0 : s.duration_s},
                  {"path_cost", s.path_cost},
                  {"path_distance_m", s.path_distance_m}};
  return doc.dump(2) + "\n";
}

}  // namespace fsp
