#include "fsp/qp.hpp"

#include <stdexcept>
#include <vector>

#include <Eigen/LU>

namespace fsp {
namespace {

// Stacks [A; I; -I] and [b; upper; -lower].
void StackConstraints(const WiggleQP& qp, Eigen::MatrixXd* g, Eigen::VectorXd* h) {
  const Eigen::Index m = qp.A.rows();
  g->resize(m + 6, 3);
  h->resize(m + 6);
  g->topRows(m) = qp.A;
  h->head(m) = qp.b;
  g->middleRows(m, 3) = Eigen::Matrix3d::Identity();
  h->segment(m, 3) = qp.upper;
  g->bottomRows(3) = -Eigen::Matrix3d::Identity();
  h->tail(3) = -qp.lower;
}

}  // namespace

std::optional<QPSolution> SolveQP3(const WiggleQP& qp, double feasibility_tol) {
  const Eigen::Vector3d d = qp.Q.diagonal();
  if ((d.array() <= 0.0).any() || !qp.Q.isDiagonal(0.0)) {
    throw std::invalid_argument("QP weight matrix must be diagonal positive definite");
  }
  if (qp.A.rows() != qp.b.size()) {
    throw std::invalid_argument("QP constraint rows and right-hand side differ in size");
  }
  Eigen::MatrixXd g;
  Eigen::VectorXd h;
  StackConstraints(qp, &g, &h);
  const Eigen::Index n = g.rows();

  // With z = Q^(1/2) q the objective is |z|^2: a Euclidean projection of the
  // origin onto the feasible polytope.
  const Eigen::Vector3d sqrt_d = d.cwiseSqrt();
  Eigen::MatrixXd gs = g;
  for (int c = 0; c < 3; ++c) gs.col(c) /= sqrt_d[c];

  auto feasible = [&](const Eigen::Vector3d& z) { return ((gs * z - h).array() <= feasibility_tol).all(); };

  std::vector<Eigen::Index> active;
  std::optional<QPSolution> best;
  auto try_set = [&]() {
    const auto k = static_cast<Eigen::Index>(active.size());
    Eigen::Vector3d z = Eigen::Vector3d::Zero();
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(k);
    if (k > 0) {
      Eigen::MatrixXd gk(k, 3);
      Eigen::VectorXd hk(k);
      for (Eigen::Index i = 0; i < k; ++i) {
        gk.row(i) = gs.row(active[i]);
        hk[i] = h[active[i]];
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(gk * gk.transpose());
      if (!lu.isInvertible()) return false;
      mu = lu.solve(hk);
      // Multipliers lambda = -2 mu must be non-negative.
      if ((mu.array() > 1e-12).any()) return false;
      z = gk.transpose() * mu;
    }
    if (!feasible(z)) return false;
    QPSolution sol;
    sol.q = z.cwiseQuotient(sqrt_d);
    sol.objective = z.squaredNorm();
    sol.multipliers = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < k; ++i) sol.multipliers[active[i]] = std::max(0.0, -2.0 * mu[i]);
    best = sol;
    return true;
  };

  // Increasing active-set size; the first KKT point is the unique optimum.
  bool done = try_set();
  for (Eigen::Index i = 0; i < n && !done; ++i) {
    active = {i};
    done = try_set();
  }
  for (Eigen::Index i = 0; i < n && !done; ++i) {
    for (Eigen::Index j = i + 1; j < n && !done; ++j) {
      active = {i, j};
      done = try_set();
    }
  }
  for (Eigen::Index i = 0; i < n && !done; ++i) {
    for (Eigen::Index j = i + 1; j < n && !done; ++j) {
      for (Eigen::Index l = j + 1; l < n && !done; ++l) {
        active = {i, j, l};
        done = try_set();
      }
    }
  }
  if (!best) return std::nullopt;

  QPSolution& sol = *best;
  const Eigen::VectorXd slack = g * sol.q - h;
  sol.max_violation = std::max(0.0, slack.maxCoeff());
  sol.stationarity_residual = (2.0 * qp.Q * sol.q + g.transpose() * sol.multipliers).cwiseAbs().maxCoeff();
  sol.complementarity_residual = (sol.multipliers.array() * slack.array()).abs().maxCoeff();
  return best;
}

}  // namespace fsp
