#include "pidfair/pid.hpp"

#include <cmath>

#include "pidfair/lp.hpp"

namespace pidfair {

namespace {

void source_vars(Var target, Var& a, Var& b) {
  switch (target) {
    case Var::Z: a = Var::Pred; b = Var::Label; break;
    case Var::Pred: a = Var::Z; b = Var::Label; break;
    default: a = Var::Z; b = Var::Pred; break;
  }
}

}  // namespace

PidDecomposition decompose(const JointDist& dist, Var target, const SolverConfig& cfg) {
  Var a, b;
  source_vars(target, a, b);

  const SolverResult res_a =
      unique_information(MarginalPolytope::from_joint(dist, target, a, b), cfg);
  const SolverResult res_b =
      unique_information(MarginalPolytope::from_joint(dist, target, b, a), cfg);

  const double total = joint_mutual_information(dist, target);
  const double i_ta = mutual_information(dist, target, a);

  PidDecomposition pid;
  pid.raw_uni_a = res_a.objective;
  pid.raw_uni_b = res_b.objective;
  pid.raw_red = i_ta - res_a.objective;
  pid.raw_syn = total - res_a.objective - res_b.objective - pid.raw_red;
  pid.total = total;
  pid.residual = pid.raw_uni_a + pid.raw_uni_b + pid.raw_red + pid.raw_syn - total;

  auto snap = [&](double v) { return std::abs(v) <= cfg.tol ? 0.0 : v; };
  pid.uni_a = snap(pid.raw_uni_a);
  pid.uni_b = snap(pid.raw_uni_b);
  pid.red = snap(pid.raw_red);
  pid.syn = snap(pid.raw_syn);

  pid.gap_a = res_a.certified_gap;
  pid.gap_b = res_b.certified_gap;
  pid.iterations_a = res_a.iterations;
  pid.iterations_b = res_b.iterations;
  pid.converged = res_a.converged && res_b.converged;
  return pid;
}

BlackwellResult blackwell_check(const JointDist& dist, Var target,
                                Var candidate_sufficient, double tol) {
  if (candidate_sufficient == target)
    throw ValidationError("candidate channel must differ from the target");
  Var a, b;
  source_vars(target, a, b);
  const Var other = candidate_sufficient == a ? b : a;

  const Eigen::VectorXd pt = marginal(dist, target);
  const Eigen::MatrixXd joint_cand = marginal(dist, target, candidate_sufficient);
  const Eigen::MatrixXd joint_other = marginal(dist, target, other);
  const int nc = static_cast<int>(joint_cand.cols());
  const int no = static_cast<int>(joint_other.cols());

  std::vector<int> live_rows;
  for (int t = 0; t < pt.size(); ++t)
    if (pt[t] > 0.0) live_rows.push_back(t);

  // variables: T(c, o) flattened c-major; constraints: channel match
  // for every live target row, then row-stochasticity of T
  const int nvars = nc * no;
  const int ncons = static_cast<int>(live_rows.size()) * no + nc;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(ncons, nvars);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ncons);
  int row = 0;
  for (int t : live_rows) {
    for (int o = 0; o < no; ++o) {
      for (int c = 0; c < nc; ++c)
        A(row, c * no + o) = joint_cand(t, c) / pt[t];
      rhs[row] = joint_other(t, o) / pt[t];
      ++row;
    }
  }
  for (int c = 0; c < nc; ++c) {
    for (int o = 0; o < no; ++o) A(row, c * no + o) = 1.0;
    rhs[row] = 1.0;
    ++row;
  }

  const LpFeasibility lp = solve_equality_feasibility(A, rhs, tol);
  BlackwellResult out;
  out.feasible = lp.feasible;
  out.infeasibility = lp.residual;
  if (lp.feasible) {
    Eigen::MatrixXd T(nc, no);
    for (int c = 0; c < nc; ++c)
      for (int o = 0; o < no; ++o) T(c, o) = lp.x[c * no + o];
    out.witness = std::move(T);
  }
  return out;
}

}  // namespace pidfair
