#pragma once

#include "fsp/geometry.hpp"
#include "fsp/lattice.hpp"
#include "fsp/snapper.hpp"

namespace fsp {

struct CostParams {
  double w_distance = 1.0;
  double w_height = 1.0;
  double w_yaw = 0.2;
  double w_area = 0.5;
  double w_roll_pitch = 0.2;
  double cost_per_step = 0.15;
  double inflation = 1.5;
  double final_turn_radius = 1.0;
  double max_step_length_for_heuristic = 0.5;
  /// Lateral distance between the feet in the nominal stance.
  double nominal_stance_width = 0.2;

  /// Throws std::invalid_argument on out-of-range values.
  void Validate() const;
};

/// Midstance implied by one foot standing at its nominal offset from the other.
Pose2 NominalMidstance(const Pose2& foot, Side side, double stance_width);
/// Inverse of NominalMidstance: where a foot stands for a given midstance.
Pose2 FootFromMidstance(const Pose2& midstance, Side side, double stance_width);

/// Midstance of two actual feet: mean position, circular-mean yaw.
Pose2 Midstance(const Pose2& a, const Pose2& b);

double EdgeCost(const SnapResult& parent, Side parent_side, const SnapResult& child, Side child_side,
                const CostParams& p);

double ReferenceYaw(const Point2& position, const Pose2& goal, const Pose2& start, const CostParams& p);

/// Inflated cost-to-go estimate for a midstance pose.
double HeuristicCost(const Pose2& midstance, const Pose2& goal, const Pose2& start, const CostParams& p);

}  // namespace fsp
