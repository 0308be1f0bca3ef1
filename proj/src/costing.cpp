#include "fsp/costing.hpp"

#include <stdexcept>

namespace fsp {

void CostParams::Validate() const {
  for (double w : {w_distance, w_height, w_yaw, w_area, w_roll_pitch, cost_per_step}) {
    if (!(w >= 0.0)) throw std::invalid_argument("cost: weights must be >= 0");
  }
  if (!(inflation >= 1.0)) throw std::invalid_argument("cost: inflation must be >= 1");
  if (!(final_turn_radius > 0.0)) throw std::invalid_argument("cost: final_turn_radius must be positive");
  if (!(max_step_length_for_heuristic > 0.0)) {
    throw std::invalid_argument("cost: max_step_length_for_heuristic must be positive");
  }
  if (!(nominal_stance_width >= 0.0)) throw std::invalid_argument("cost: nominal_stance_width must be >= 0");
}

Pose2 NominalMidstance(const Pose2& foot, Side side, double stance_width) {
  // The other foot is on the opposite side, so the midstance is half a width that way.
  const Point2 p = foot.Apply({0.0, -SideSign(side) * 0.5 * stance_width});
  return {p.x, p.y, foot.yaw};
}

Pose2 FootFromMidstance(const Pose2& midstance, Side side, double stance_width) {
  const Point2 p = midstance.Apply({0.0, SideSign(side) * 0.5 * stance_width});
  return {p.x, p.y, midstance.yaw};
}

Pose2 Midstance(const Pose2& a, const Pose2& b) {
  const Point2 m = (a.position() + b.position()) * 0.5;
  return {m.x, m.y, CircularMean(a.yaw, b.yaw)};
}

double EdgeCost(const SnapResult& parent, Side parent_side, const SnapResult& child, Side child_side,
                const CostParams& p) {
  const Pose2 mp = NominalMidstance(parent.planar_pose, parent_side, p.nominal_stance_width);
  const Pose2 mc = NominalMidstance(child.planar_pose, child_side, p.nominal_stance_width);
  return p.w_distance * Distance(mp.position(), mc.position()) +
         p.w_height * std::abs(child.Height() - parent.Height()) +
         p.w_yaw * std::abs(AngleDifference(mc.yaw, mp.yaw)) + p.w_area * (1.0 - child.area_fraction) +
         p.w_roll_pitch * (std::abs(child.surface_roll) + std::abs(child.surface_pitch)) + p.cost_per_step;
}

double ReferenceYaw(const Point2& position, const Pose2& goal, const Pose2& start, const CostParams& p) {
  const Point2 d = goal.position() - start.position();
  const double heading = Norm(d) > 1e-12 ? std::atan2(d.y, d.x) : goal.yaw;
  const double dist = Distance(position, goal.position());
  if (dist >= p.final_turn_radius) {
    return heading;
  }
  return InterpolateAngle(heading, goal.yaw, 1.0 - dist / p.final_turn_radius);
}

double HeuristicCost(const Pose2& midstance, const Pose2& goal, const Pose2& start, const CostParams& p) {
  const double dist = Distance(midstance.position(), goal.position());
  const double yaw_err = std::abs(AngleDifference(midstance.yaw, ReferenceYaw(midstance.position(), goal, start, p)));
  // Guard against 3.0000000001 / 0.5 rounding up a whole extra step.
  const double steps = std::ceil(dist / p.max_step_length_for_heuristic - 1e-9);
  return p.inflation * (p.w_distance * dist + p.w_yaw * yaw_err + std::max(0.0, steps) * p.cost_per_step);
}

}  // namespace fsp
