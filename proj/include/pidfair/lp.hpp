#ifndef PIDFAIR_LP_HPP
#define PIDFAIR_LP_HPP

#include <Eigen/Dense>

namespace pidfair {

struct LpFeasibility {
  bool feasible = false;
  Eigen::VectorXd x;      // a feasible point when feasible
  double residual = 0.0;  // phase-1 optimum (sum of artificial variables)
};

// Decides whether {x >= 0 : A x = b} is nonempty via a phase-1 simplex
// (Bland's rule). Feasible means the phase-1 optimum is <= tol.
LpFeasibility solve_equality_feasibility(const Eigen::MatrixXd& A,
                                         const Eigen::VectorXd& b,
                                         double tol = 1e-8);

}  // namespace pidfair

#endif
