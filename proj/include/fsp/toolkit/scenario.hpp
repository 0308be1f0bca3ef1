#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsp/planner.hpp"
#include "fsp/world_model.hpp"

namespace fsp::toolkit {

struct ScenarioEvent {
  enum class Action { kAddRegion, kRemoveRegion };

  double time_s = 0.0;
  Action action = Action::kAddRegion;
  std::optional<PlanarRegion> region;  // for kAddRegion
  int region_id = 0;                   // for kRemoveRegion
};

struct ScenarioScript {
  std::vector<PlanarRegion> base;
  std::vector<ScenarioEvent> events;  // non-decreasing times
  double replan_period_s = 1.0;
  int max_ticks = 40;
  Pose2 start_left;
  Pose2 start_right;
  Pose2 goal;
  double timeout_s = 5.0;
  std::uint64_t max_expansions = 2000;
  PlannerParams params;

  /// Throws std::invalid_argument on unordered events or bad region ids.
  void Validate() const;
};

struct ScenarioTick {
  double time_s = 0.0;
  std::vector<int> region_ids;  // environment the plan was made in
  PlannerResult plan;
};

struct ScenarioTrace {
  std::vector<ScenarioTick> ticks;
  bool reached_goal = false;
};

/// Regions present at time `t` (events at exactly t included).
std::vector<PlanarRegion> RegionsAt(const ScenarioScript& script, double t);

/// Replans once per tick from the current stance and executes one step of
/// each plan. Stops when a plan needs no more steps or after max_ticks.
ScenarioTrace RunAnytimeScenario(const ScenarioScript& script);

/// Script document: base (environment object), events, replan_period,
/// max_ticks, start_left, start_right, goal ([x, y, yaw]), timeout,
/// max_expansions and optional params (inline object).
ScenarioScript LoadScenario(std::string_view json_text);
ScenarioScript LoadScenarioFile(const std::filesystem::path& path);
std::string SaveScenario(const ScenarioScript& script);
std::string SaveTrace(const ScenarioTrace& trace, bool omit_timing);

/// The moving-obstacle demonstration: open ground, a block dropped onto the
/// route after two ticks and removed later.
ScenarioScript DynamicObstacleScenario();

}  // namespace fsp::toolkit
