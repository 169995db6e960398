#ifndef PIDFAIR_PID_HPP
#define PIDFAIR_PID_HPP

#include <optional>

#include "pidfair/solver.hpp"

namespace pidfair {

// Four-way split of I(target; A, B). A is the prediction axis and B
// the label axis when target is Z. Terms within cfg.tol of zero are
// reported as exactly 0; raw_* keep the unclamped values.
struct PidDecomposition {
  double uni_a = 0.0;
  double uni_b = 0.0;
  double red = 0.0;
  double syn = 0.0;
  double total = 0.0;
  double residual = 0.0;  // raw four-term sum minus total
  double raw_uni_a = 0.0, raw_uni_b = 0.0, raw_red = 0.0, raw_syn = 0.0;
  double gap_a = 0.0, gap_b = 0.0;  // certified solver gaps
  int iterations_a = 0, iterations_b = 0;
  bool converged = false;
};

PidDecomposition decompose(const JointDist& dist, Var target = Var::Z,
                           const SolverConfig& cfg = SolverConfig{});

// Blackwell sufficiency of the candidate channel: is there a
// row-stochastic T with P(candidate|target) . T = P(other|target)?
// Rows of targets with zero mass are dropped from the constraints.
struct BlackwellResult {
  bool feasible = false;
  double infeasibility = 0.0;
  std::optional<Eigen::MatrixXd> witness;  // |candidate| x |other|, row-stochastic
};

BlackwellResult blackwell_check(const JointDist& dist, Var target,
                                Var candidate_sufficient, double tol = 1e-8);

}  // namespace pidfair

#endif
