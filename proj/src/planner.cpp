#include "fsp/planner.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "log.hpp"

namespace fsp {
namespace {

struct FrontierEntry {
  double f;
  double h;
  std::uint64_t seq;
  FootstepNode node;
};

// Orders the priority queue so the smallest (f, h, seq) is on top.
struct FrontierAfter {
  bool operator()(const FrontierEntry& a, const FrontierEntry& b) const {
    return std::tie(a.f, a.h, a.seq) > std::tie(b.f, b.h, b.seq);
  }
};

const SnapResult& MustSnap(SnapCache& cache, const FootstepNode& node) {
  return std::get<SnapResult>(cache.Get(node));
}

}  // namespace

void PlannerParams::Validate() const {
  lattice.Validate();
  expansion.Validate();
  checker.Validate();
  cost.Validate();
  wiggle.Validate(lattice.xy_resolution);
  if (!PointInPolygon({0.0, 0.0}, foot.sole)) {
    throw std::invalid_argument("foot: sole must contain the foot origin");
  }
  if (!(goal_tolerance.xy >= 0.0) || !(goal_tolerance.yaw >= 0.0)) {
    throw std::invalid_argument("goal_tolerance: values must be >= 0");
  }
}

std::string_view ToString(PlanStatus status) {
  switch (status) {
    case PlanStatus::kFoundSolution: return "FOUND_SOLUTION";
    case PlanStatus::kTimedOutBestEffort: return "TIMED_OUT_BEST_EFFORT";
    case PlanStatus::kNoPathExists: return "NO_PATH_EXISTS";
    case PlanStatus::kInvalidStart: return "INVALID_START";
  }
  return "UNKNOWN";
}

double PlannerStats::PercentRejected() const {
  if (children_considered == 0) return 0.0;
  return 100.0 * static_cast<double>(rejected.Total()) / static_cast<double>(children_considered);
}

void SearchGraph::Seed(const FootstepNode& node) {
  g_[node] = 0.0;
  parent_.erase(node);
}

bool SearchGraph::Relax(const FootstepNode& node, const FootstepNode& parent, double edge_cost) {
  const double g = g_.at(parent) + edge_cost;
  auto it = g_.find(node);
  if (it != g_.end() && it->second <= g) {
    return false;
  }
  g_[node] = g;
  parent_[node] = {parent, edge_cost};
  return true;
}

std::optional<SearchGraph::Parent> SearchGraph::BestParent(const FootstepNode& node) const {
  auto it = parent_.find(node);
  if (it == parent_.end()) return std::nullopt;
  return it->second;
}

std::vector<FootstepNode> SearchGraph::ExtractPath(const FootstepNode& end) const {
  if (!Contains(end)) {
    throw std::invalid_argument("node is not in the search graph");
  }
  std::vector<FootstepNode> path{end};
  for (auto p = BestParent(end); p; p = BestParent(p->node)) {
    path.push_back(p->node);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool BestEffortTracker::Offer(const FootstepNode& node, double heuristic, double g) {
  if (best_ && (heuristic > best_h_ || (heuristic == best_h_ && g >= best_g_))) {
    return false;
  }
  best_ = node;
  best_h_ = heuristic;
  best_g_ = g;
  return true;
}

void BestEffortTracker::Publish(const SearchGraph& graph) {
  if (!best_) return;
  auto snap = std::make_shared<Snapshot>();
  snap->node = *best_;
  snap->heuristic = best_h_;
  snap->g = best_g_;
  snap->path = graph.ExtractPath(*best_);
  std::lock_guard lock(mutex_);
  published_ = std::move(snap);
}

std::shared_ptr<const BestEffortTracker::Snapshot> BestEffortTracker::Latest() const {
  std::lock_guard lock(mutex_);
  return published_;
}

Pose2 NodeMidstance(const FootstepNode& node, const PlannerParams& params) {
  return NominalMidstance(NodeToPose(node, params.lattice), node.side, params.cost.nominal_stance_width);
}

bool WithinGoal(const Pose2& midstance, const Pose2& goal, const GoalTolerance& tol) {
  return Distance(midstance.position(), goal.position()) <= tol.xy + tol::kBoundary &&
         std::abs(AngleDifference(midstance.yaw, goal.yaw)) <= tol.yaw + tol::kBoundary;
}

double PathDistance(const PlannerResult& result, double nominal_stance_width) {
  if (!result.origin) return 0.0;
  double total = 0.0;
  const PlannedStep* prev = &*result.origin;
  for (const PlannedStep& step : result.steps) {
    const Pose2 a = NominalMidstance(prev->snap.planar_pose, prev->side, nominal_stance_width);
    const Pose2 b = NominalMidstance(step.snap.planar_pose, step.side, nominal_stance_width);
    total += Distance(a.position(), b.position());
    prev = &step;
  }
  return total;
}

FootstepPlanner::FootstepPlanner(PlannerRequest request) : request_(std::move(request)) {
  if (!request_.env) throw std::invalid_argument("planner request has no environment");
  if (!(request_.timeout_s > 0.0)) throw std::invalid_argument("timeout must be positive");
  request_.params.Validate();
}

PlannerResult FootstepPlanner::Plan() {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  const Environment& env = *request_.env;
  const PlannerParams& params = request_.params;
  const Pose2& goal = request_.goal_midstance;
  const Pose2 start_mid = Midstance(request_.start_left, request_.start_right);

  PlannerResult result;
  SnapCache cache(env, params.lattice, params.foot);
  SearchGraph graph;
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - t0).count(); };
  auto finish = [&](PlanStatus status, std::optional<FootstepNode> end) {
    result.status = status;
    if (end) {
      const std::vector<FootstepNode> path = graph.ExtractPath(*end);
      result.origin = PlannedStep{path.front(), path.front().side, MustSnap(cache, path.front())};
      for (std::size_t i = 1; i < path.size(); ++i) {
        result.steps.push_back({path[i], path[i].side, MustSnap(cache, path[i])});
      }
      result.stats.path_cost = graph.G(*end);
    }
    result.stats.path_distance_m = PathDistance(result, params.cost.nominal_stance_width);
    result.stats.duration_s = elapsed();
    log::Info("plan {}: {} steps, {} expanded, {:.1f}% rejected, {:.3f} s", ToString(status), result.steps.size(),
              result.stats.nodes_expanded, result.stats.PercentRejected(), result.stats.duration_s);
    return result;
  };

  const FootstepNode start_nodes[2] = {PoseToNode(request_.start_left, Side::kLeft, params.lattice),
                                       PoseToNode(request_.start_right, Side::kRight, params.lattice)};
  for (const FootstepNode& n : start_nodes) {
    if (!std::holds_alternative<SnapResult>(cache.Get(n))) {
      log::Info("start foot {} does not snap", ToString(n.side));
      return finish(PlanStatus::kInvalidStart, std::nullopt);
    }
  }
  for (const FootstepNode& n : start_nodes) graph.Seed(n);
  if (WithinGoal(start_mid, goal, params.goal_tolerance)) {
    return finish(PlanStatus::kFoundSolution, start_nodes[0]);
  }

  std::priority_queue<FrontierEntry, std::vector<FrontierEntry>, FrontierAfter> frontier;
  std::uint64_t seq = 0;
  for (const FootstepNode& n : start_nodes) {
    const double h = HeuristicCost(NodeMidstance(n, params), goal, start_mid, params.cost);
    frontier.push({h, h, seq++, n});
    if (tracker_.Offer(n, h, 0.0)) result.stats.best_effort_trace.push_back(h);
  }
  tracker_.Publish(graph);

  while (true) {
    if (frontier.empty()) {
      return finish(PlanStatus::kNoPathExists, tracker_.best());
    }
    if (elapsed() > request_.timeout_s ||
        (request_.max_expansions > 0 && result.stats.nodes_expanded >= request_.max_expansions)) {
      return finish(PlanStatus::kTimedOutBestEffort, tracker_.best());
    }
    const FrontierEntry top = frontier.top();
    frontier.pop();
    const FootstepNode& node = top.node;
    if (graph.IsExpanded(node)) continue;
    if (WithinGoal(NodeMidstance(node, params), goal, params.goal_tolerance)) {
      return finish(PlanStatus::kFoundSolution, node);
    }
    graph.MarkExpanded(node);
    ++result.stats.nodes_expanded;

    const SnapResult& stance = MustSnap(cache, node);
    const double g_node = graph.G(node);
    bool improved = false;
    for (const FootstepNode& child : ExpandNode(node, params.lattice, params.expansion)) {
      if (graph.IsExpanded(child)) continue;
      ++result.stats.children_considered;
      const SnapOutcome& outcome = cache.Get(child);
      if (auto reason = ValidateEdge({&stance, node.side}, outcome, child.side, env, params.foot, params.checker)) {
        result.stats.rejected.Add(*reason);
        continue;
      }
      const SnapResult& child_snap = std::get<SnapResult>(outcome);
      const double cost = EdgeCost(stance, node.side, child_snap, child.side, params.cost);
      if (!graph.Relax(child, node, cost)) continue;
      const double g = g_node + cost;
      const double h = HeuristicCost(NodeMidstance(child, params), goal, start_mid, params.cost);
      frontier.push({g + h, h, seq++, child});
      if (tracker_.Offer(child, h, g)) {
        result.stats.best_effort_trace.push_back(h);
        improved = true;
      }
    }
    if (improved) tracker_.Publish(graph);
  }
}

PlannerResult Plan(const PlannerRequest& request) { return FootstepPlanner(request).Plan(); }

std::vector<WiggleOutcome> WigglePlan(PlannerResult& result, const Environment& env, const PlannerParams& params) {
  std::vector<WiggleOutcome> outcomes;
  outcomes.reserve(result.steps.size());
  for (PlannedStep& step : result.steps) {
    outcomes.push_back(WiggleStep(step.snap, env, params.foot, params.wiggle));
    step.snap = outcomes.back().snap;
  }
  return outcomes;
}

std::optional<std::pair<std::size_t, RejectionReason>> VerifyPlan(const PlannerResult& result, const Environment& env,
                                                                  const PlannerParams& params) {
  if (!result.origin) return std::nullopt;
  const PlannedStep* prev = &*result.origin;
  for (std::size_t i = 0; i < result.steps.size(); ++i) {
    const PlannedStep& step = result.steps[i];
    // Re-snap from scratch so the check does not trust the stored snap.
    const SnapOutcome fresh = SnapPose(step.snap.planar_pose, env, params.foot);
    if (step.side == prev->side) return std::pair{i, RejectionReason::kBadStanceGeometry};
    if (auto r = ValidateEdge({&prev->snap, prev->side}, fresh, step.side, env, params.foot, params.checker)) {
      return std::pair{i, *r};
    }
    prev = &step;
  }
  return std::nullopt;
}

}  // namespace fsp
