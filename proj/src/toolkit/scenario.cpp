#include "fsp/toolkit/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fsp/params.hpp"
#include "fsp/plan_io.hpp"
#include "fsp/toolkit/generators.hpp"

namespace fsp::toolkit {
namespace {

using nlohmann::ordered_json;

ordered_json RegionToJson(const PlanarRegion& region) {
  return ordered_json::parse(SaveEnvironment(Environment({region})))["regions"][0];
}

PlanarRegion RegionFromJson(const ordered_json& j) {
  ordered_json doc = {{"regions", ordered_json::array({j})}};
  return LoadEnvironment(doc.dump()).regions()[0];
}

Pose2 PoseFromJson(const ordered_json& j, const char* what) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number()) {
    throw std::invalid_argument(std::string(what) + " must be [x, y, yaw]");
  }
  return Pose2(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

ordered_json PoseToJson(const Pose2& p) { return {p.x, p.y, p.yaw}; }

}  // namespace

void ScenarioScript::Validate() const {
  if (!(replan_period_s > 0.0)) throw std::invalid_argument("scenario: replan_period must be positive");
  if (max_ticks < 1) throw std::invalid_argument("scenario: max_ticks must be at least 1");
  std::set<int> ids;
  for (const PlanarRegion& r : base) ids.insert(r.id());
  double last = -std::numeric_limits<double>::infinity();
  for (const ScenarioEvent& e : events) {
    if (e.time_s < last) throw std::invalid_argument("scenario: event times must be non-decreasing");
    last = e.time_s;
    if (e.action == ScenarioEvent::Action::kAddRegion) {
      if (!e.region) throw std::invalid_argument("scenario: add event without a region");
      if (!ids.insert(e.region->id()).second) {
        throw std::invalid_argument("scenario: region " + std::to_string(e.region->id()) + " added twice");
      }
    } else if (ids.erase(e.region_id) == 0) {
      throw std::invalid_argument("scenario: region " + std::to_string(e.region_id) + " removed but not present");
    }
  }
}

std::vector<PlanarRegion> RegionsAt(const ScenarioScript& script, double t) {
  std::vector<PlanarRegion> regions = script.base;
  for (const ScenarioEvent& e : script.events) {
    if (e.time_s > t) break;
    if (e.action == ScenarioEvent::Action::kAddRegion) {
      regions.push_back(*e.region);
    } else {
      std::erase_if(regions, [&](const PlanarRegion& r) { return r.id() == e.region_id; });
    }
  }
  return regions;
}

ScenarioTrace RunAnytimeScenario(const ScenarioScript& script) {
  script.Validate();
  ScenarioTrace trace;
  Pose2 left = script.start_left;
  Pose2 right = script.start_right;
  for (int k = 0; k < script.max_ticks; ++k) {
    ScenarioTick tick;
    tick.time_s = k * script.replan_period_s;
    const Environment env(RegionsAt(script, tick.time_s));
    for (const PlanarRegion& r : env.regions()) tick.region_ids.push_back(r.id());

    PlannerRequest request;
    request.env = &env;
    request.start_left = left;
    request.start_right = right;
    request.goal_midstance = script.goal;
    request.timeout_s = script.timeout_s;
    request.max_expansions = script.max_expansions;
    request.params = script.params;
    tick.plan = Plan(request);

    const PlannerResult& plan = tick.plan;
    const bool done = plan.status == PlanStatus::kFoundSolution && plan.steps.empty();
    if (!plan.steps.empty()) {
      const PlannedStep& next = plan.steps.front();
      (next.side == Side::kLeft ? left : right) = next.snap.planar_pose;
    }
    trace.ticks.push_back(std::move(tick));
    if (done) {
      trace.reached_goal = true;
      break;
    }
  }
  return trace;
}

ScenarioScript LoadScenario(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("scenario must be a JSON object");
  static const std::set<std::string> kKnown = {"base",  "events",  "replan_period", "max_ticks",     "start_left",
                                               "start_right", "goal", "timeout", "max_expansions", "params"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKnown.contains(key)) throw std::invalid_argument("scenario: unknown field \"" + key + "\"");
  }
  for (const char* key : {"base", "start_left", "start_right", "goal"}) {
    if (!doc.contains(key)) throw std::invalid_argument(std::string("scenario: missing \"") + key + "\"");
  }
  ScenarioScript s;
  const Environment base = LoadEnvironment(doc["base"].dump());
  s.base.assign(base.regions().begin(), base.regions().end());
  s.start_left = PoseFromJson(doc["start_left"], "start_left");
  s.start_right = PoseFromJson(doc["start_right"], "start_right");
  s.goal = PoseFromJson(doc["goal"], "goal");
  s.replan_period_s = doc.value("replan_period", s.replan_period_s);
  s.max_ticks = doc.value("max_ticks", s.max_ticks);
  s.timeout_s = doc.value("timeout", s.timeout_s);
  s.max_expansions = doc.value("max_expansions", s.max_expansions);
  if (doc.contains("params")) s.params = LoadParams(doc["params"].dump());
  if (doc.contains("events")) {
    for (const auto& je : doc["events"]) {
      ScenarioEvent e;
      e.time_s = je.at("time").get<double>();
      const std::string action = je.at("action").get<std::string>();
      if (action == "add") {
        e.action = ScenarioEvent::Action::kAddRegion;
        e.region = RegionFromJson(je.at("region"));
      } else if (action == "remove") {
        e.action = ScenarioEvent::Action::kRemoveRegion;
        e.region_id = je.at("region_id").get<int>();
      } else {
        throw std::invalid_argument("scenario: unknown event action \"" + action + "\"");
      }
      s.events.push_back(std::move(e));
    }
  }
  s.Validate();
  return s;
}

ScenarioScript LoadScenarioFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scenario file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadScenario(buffer.str());
}

std::string SaveScenario(const ScenarioScript& script) {
  ordered_json doc = ordered_json::object();
  doc["base"] = ordered_json::parse(SaveEnvironment(Environment(script.base)));
  ordered_json events = ordered_json::array();
  for (const ScenarioEvent& e : script.events) {
    ordered_json je = ordered_json::object();
    je["time"] = e.time_s;
    if (e.action == ScenarioEvent::Action::kAddRegion) {
      je["action"] = "add";
      je["region"] = RegionToJson(*e.region);
    } else {
      je["action"] = "remove";
      je["region_id"] = e.region_id;
    }
    events.push_back(std::move(je));
  }
  doc["events"] = std::move(events);
  doc["replan_period"] = script.replan_period_s;
  doc["max_ticks"] = script.max_ticks;
  doc["start_left"] = PoseToJson(script.start_left);
  doc["start_right"] = PoseToJson(script.start_right);
  doc["goal"] = PoseToJson(script.goal);
  doc["timeout"] = script.timeout_s;
  doc["max_expansions"] = script.max_expansions;
  doc["params"] = ordered_json::parse(SaveParams(script.params));
  return doc.dump(1) + "\n";
}

std::string SaveTrace(const ScenarioTrace& trace, bool omit_timing) {
  ordered_json doc = ordered_json::object();
  doc["reached_goal"] = trace.reached_goal;
  ordered_json ticks = ordered_json::array();
  for (const ScenarioTick& t : trace.ticks) {
    ordered_json jt = ordered_json::object();
    jt["time"] = t.time_s;
    jt["region_ids"] = t.region_ids;
    jt["plan"] = ordered_json::parse(SavePlan(t.plan, {.omit_timing = omit_timing}));
    jt["best_effort_trace"] = t.plan.stats.best_effort_trace;
    ticks.push_back(std::move(jt));
  }
  doc["ticks"] = std::move(ticks);
  return doc.dump(1) + "\n";
}

ScenarioScript DynamicObstacleScenario() {
  ScenarioScript s;
  s.base.push_back(HorizontalBox(0, -1.0, -2.0, 5.0, 2.0, 0.0));
  s.start_left = Pose2(0.0, 0.1, 0.0);
  s.start_right = Pose2(0.0, -0.1, 0.0);
  s.goal = Pose2(4.0, 0.0, 0.0);
  s.replan_period_s = 1.0;
  s.max_ticks = 40;
  int id = 1;
  for (PlanarRegion& r : SolidBlock(1, 1.6, -0.4, 2.2, 0.4, 0.6)) {
    s.events.push_back({2.0, ScenarioEvent::Action::kAddRegion, std::move(r), 0});
  }
  for (; id <= 5; ++id) {
    s.events.push_back({6.0, ScenarioEvent::Action::kRemoveRegion, std::nullopt, id});
  }
  return s;
}

}  // namespace fsp::toolkit
