#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fsp/costing.hpp"
#include "fsp/lattice.hpp"
#include "fsp/snapper.hpp"
#include "fsp/validity.hpp"
#include "fsp/wiggler.hpp"
#include "fsp/world_model.hpp"

namespace fsp {

struct GoalTolerance {
  double xy = 0.05;
  double yaw = DegToRad(10.0);
};

/// Every tunable record, as read from a parameters file.
struct PlannerParams {
  LatticeParams lattice;
  ExpansionParams expansion;
  CheckerParams checker;
  CostParams cost;
  WiggleParams wiggle;
  FootPolygon foot;
  GoalTolerance goal_tolerance;

  void Validate() const;
};

struct PlannerRequest {
  const Environment* env = nullptr;
  Pose2 start_left;
  Pose2 start_right;
  Pose2 goal_midstance;
  double timeout_s = 5.0;
  /// Deterministic budget; 0 means unlimited.
  std::uint64_t max_expansions = 0;
  PlannerParams params;
};

enum class PlanStatus { kFoundSolution, kTimedOutBestEffort, kNoPathExists, kInvalidStart };
std::string_view ToString(PlanStatus status);

struct PlannedStep {
  FootstepNode node;
  Side side = Side::kLeft;
  SnapResult snap;
};

struct PlannerStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t children_considered = 0;
  RejectionCounts rejected;
  double duration_s = 0.0;
  double path_cost = 0.0;
  double path_distance_m = 0.0;
  /// Heuristic of the best-effort node each time it improved.
  std::vector<double> best_effort_trace;

  double PercentRejected() const;
};

struct PlannerResult {
  PlanStatus status = PlanStatus::kNoPathExists;
  /// The start foot the path leaves from (not a step).
  std::optional<PlannedStep> origin;
  std::vector<PlannedStep> steps;
  PlannerStats stats;
};

/// Mutable state of one search.
class SearchGraph {
 public:
  struct Parent {
    FootstepNode node;
    double edge_cost = 0.0;
  };

  void Seed(const FootstepNode& node);
  /// Records `node` reached through `parent`; keeps whichever parent is cheaper.
  /// Returns true when the node's cost improved.
  bool Relax(const FootstepNode& node, const FootstepNode& parent, double edge_cost);

  bool Contains(const FootstepNode& node) const { return g_.contains(node); }
  double G(const FootstepNode& node) const { return g_.at(node); }
  std::optional<Parent> BestParent(const FootstepNode& node) const;
  bool IsExpanded(const FootstepNode& node) const { return expanded_.contains(node); }
  void MarkExpanded(const FootstepNode& node) { expanded_.emplace(node, true); }
  std::size_t size() const { return g_.size(); }

  /// Chain of nodes from a seed to `end`, inclusive.
  std::vector<FootstepNode> ExtractPath(const FootstepNode& end) const;

  const std::unordered_map<FootstepNode, double, FootstepNodeHash>& g_costs() const { return g_; }

 private:
  std::unordered_map<FootstepNode, double, FootstepNodeHash> g_;
  std::unordered_map<FootstepNode, Parent, FootstepNodeHash> parent_;
  std::unordered_map<FootstepNode, bool, FootstepNodeHash> expanded_;
};

/// Published view of the best-effort node, readable from other threads.
class BestEffortTracker {
 public:
  struct Snapshot {
    FootstepNode node;
    double heuristic = 0.0;
    double g = 0.0;
    std::vector<FootstepNode> path;
  };

  /// Keeps the candidate when its heuristic is lower (ties: lower g).
  bool Offer(const FootstepNode& node, double heuristic, double g);
  std::optional<FootstepNode> best() const { return best_; }
  double best_heuristic() const { return best_h_; }
  double best_g() const { return best_g_; }

  void Publish(const SearchGraph& graph);
  std::shared_ptr<const Snapshot> Latest() const;

 private:
  std::optional<FootstepNode> best_;
  double best_h_ = 0.0;
  double best_g_ = 0.0;
  mutable std::mutex mutex_;
  std::shared_ptr<const Snapshot> published_;
};

class FootstepPlanner {
 public:
  /// Throws std::invalid_argument on an invalid request.
  explicit FootstepPlanner(PlannerRequest request);

  PlannerResult Plan();
  /// Thread-safe; the path to the best node published so far.
  std::shared_ptr<const BestEffortTracker::Snapshot> BestEffortSnapshot() const { return tracker_.Latest(); }

 private:
  PlannerRequest request_;
  BestEffortTracker tracker_;
};

/// Convenience wrapper around FootstepPlanner.
PlannerResult Plan(const PlannerRequest& request);

/// Node whose nominal midstance pose the goal test and heuristic use.
Pose2 NodeMidstance(const FootstepNode& node, const PlannerParams& params);
bool WithinGoal(const Pose2& midstance, const Pose2& goal, const GoalTolerance& tol);

/// Sum of nominal-midstance displacements along origin + steps.
double PathDistance(const PlannerResult& result, double nominal_stance_width);

/// Applies WiggleStep to every step; returns per-step shifts.
std::vector<WiggleOutcome> WigglePlan(PlannerResult& result, const Environment& env, const PlannerParams& params);

/// Re-checks every consecutive pair with ValidateEdge. Returns the index of
/// the first failing step and its reason, or empty when the plan is valid.
std::optional<std::pair<std::size_t, RejectionReason>> VerifyPlan(const PlannerResult& result, const Environment& env,
                                                                  const PlannerParams& params);

}  // namespace fsp
