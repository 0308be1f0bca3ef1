#include "fsp/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace fsp {
namespace {

constexpr double kBoxSlack = 1e-9;

int PositiveModulo(int value, int modulus) {
  const int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace

std::string_view ToString(Side s) { return s == Side::kLeft ? "LEFT" : "RIGHT"; }

int LatticeParams::YawCount() const { return static_cast<int>(std::lround(2.0 * kPi / yaw_resolution)); }

void LatticeParams::Validate() const {
  if (!(xy_resolution > 0.0)) {
    throw std::invalid_argument("xy_resolution must be positive");
  }
  if (!(yaw_resolution > 0.0)) {
    throw std::invalid_argument("yaw_resolution must be positive");
  }
  if (std::abs(YawCount() * yaw_resolution - 2.0 * kPi) > 1e-9) {
    throw std::invalid_argument("yaw_resolution must divide 2*pi");
  }
}

void ExpansionParams::Validate() const {
  if (min_length > max_length || min_width > max_width || min_yaw_delta > max_yaw_delta) {
    throw std::invalid_argument("expansion bounds must satisfy min <= max");
  }
  if (max_yaw_delta - min_yaw_delta >= 2.0 * kPi) {
    throw std::invalid_argument("expansion yaw range must be narrower than a full turn");
  }
  if (!(max_reach > 0.0)) {
    throw std::invalid_argument("max_reach must be positive");
  }
}

StanceOffset ToStanceFrame(const Pose2& stance, Side stance_side, const Pose2& swing) {
  // The swing foot sits on the opposite side of the stance foot.
  const double s = SideSign(Opposite(stance_side));
  const Point2 local = stance.ApplyInverse(swing.position());
  return {local.x, s * local.y, s * AngleDifference(swing.yaw, stance.yaw)};
}

Pose2 NodeToPose(const FootstepNode& node, const LatticeParams& lattice) {
  return {node.x_index * lattice.xy_resolution, node.y_index * lattice.xy_resolution,
          node.yaw_index * lattice.yaw_resolution};
}

FootstepNode PoseToNode(const Pose2& pose, Side side, const LatticeParams& lattice) {
  FootstepNode node;
  node.x_index = static_cast<int>(std::round(pose.x / lattice.xy_resolution));
  node.y_index = static_cast<int>(std::round(pose.y / lattice.xy_resolution));
  node.yaw_index = PositiveModulo(static_cast<int>(std::round(pose.yaw / lattice.yaw_resolution)),
                                  lattice.YawCount());
  node.side = side;
  return node;
}

std::vector<FootstepNode> ExpandNode(const FootstepNode& parent, const LatticeParams& lattice,
                                     const ExpansionParams& expansion) {
  const Pose2 stance = NodeToPose(parent, lattice);
  const Side child_side = Opposite(parent.side);
  const double s = SideSign(child_side);
  const double res = lattice.xy_resolution;
  const int yaw_count = lattice.YawCount();

  // World-frame bounding box of the reachability rectangle.
  Point2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point2 hi = -lo;
  for (double l : {expansion.min_length, expansion.max_length}) {
    for (double w : {expansion.min_width, expansion.max_width}) {
      const Point2 corner = stance.Apply({l, s * w});
      lo = {std::min(lo.x, corner.x), std::min(lo.y, corner.y)};
      hi = {std::max(hi.x, corner.x), std::max(hi.y, corner.y)};
    }
  }
  const int ix_lo = static_cast<int>(std::floor(lo.x / res - 1e-6));
  const int ix_hi = static_cast<int>(std::ceil(hi.x / res + 1e-6));
  const int iy_lo = static_cast<int>(std::floor(lo.y / res - 1e-6));
  const int iy_hi = static_cast<int>(std::ceil(hi.y / res + 1e-6));

  const int k_lo = static_cast<int>(std::ceil(expansion.min_yaw_delta / lattice.yaw_resolution - 1e-9));
  const int k_hi = static_cast<int>(std::floor(expansion.max_yaw_delta / lattice.yaw_resolution + 1e-9));

  struct Candidate {
    double forward;
    double width;
    int k;
    FootstepNode node;
  };
  std::vector<Candidate> candidates;
  for (int ix = ix_lo; ix <= ix_hi; ++ix) {
    for (int iy = iy_lo; iy <= iy_hi; ++iy) {
      const Point2 local = stance.ApplyInverse({ix * res, iy * res});
      const double forward = local.x;
      const double width = s * local.y;
      if (forward < expansion.min_length - kBoxSlack || forward > expansion.max_length + kBoxSlack) continue;
      if (width < expansion.min_width - kBoxSlack || width > expansion.max_width + kBoxSlack) continue;
      if (std::hypot(forward, width) > expansion.max_reach + kBoxSlack) continue;
      for (int k = k_lo; k <= k_hi; ++k) {
        FootstepNode child;
        child.x_index = ix;
        child.y_index = iy;
        child.yaw_index = PositiveModulo(parent.yaw_index + static_cast<int>(s) * k, yaw_count);
        child.side = child_side;
        candidates.push_back({forward, width, k, child});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.forward, a.width, a.k) < std::tie(b.forward, b.width, b.k);
  });
  std::vector<FootstepNode> children;
  children.reserve(candidates.size());
  for (const Candidate& c : candidates) {
    children.push_back(c.node);
  }
  return children;
}

}  // namespace fsp
