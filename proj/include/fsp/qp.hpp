#pragma once

#include <optional>

#include <Eigen/Core>

namespace fsp {

/// min q^T Q q  s.t.  A q <= b,  lower <= q <= upper, with Q diagonal.
struct WiggleQP {
  Eigen::Matrix3d Q = Eigen::Matrix3d::Identity();
  Eigen::Matrix<double, Eigen::Dynamic, 3> A;
  Eigen::VectorXd b;
  Eigen::Vector3d lower = Eigen::Vector3d::Constant(-1.0);
  Eigen::Vector3d upper = Eigen::Vector3d::Constant(1.0);
};

struct QPSolution {
  Eigen::Vector3d q = Eigen::Vector3d::Zero();
  double objective = 0.0;
  /// Multipliers for A rows, then upper bounds, then lower bounds.
  Eigen::VectorXd multipliers;
  double stationarity_residual = 0.0;
  double complementarity_residual = 0.0;
  double max_violation = 0.0;
};

/// Exact solve by enumerating active sets of up to three constraints. Empty
/// when no point satisfies every constraint within `feasibility_tol`.
/// Throws std::invalid_argument unless Q is diagonal with positive entries.
std::optional<QPSolution> SolveQP3(const WiggleQP& qp, double feasibility_tol = 1e-9);

}  // namespace fsp
