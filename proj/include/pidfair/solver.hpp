#ifndef PIDFAIR_SOLVER_HPP
#define PIDFAIR_SOLVER_HPP

#include <Eigen/Dense>

#include <vector>

#include "pidfair/dist.hpp"

namespace pidfair {

struct UnsupportedShape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Feasible set of the unique-information program: all joints on
// (target, A, B) whose (target, A) and (target, B) marginals match the
// fixed ones. Both marginals must agree on the target marginal.
class MarginalPolytope {
 public:
  MarginalPolytope(Alphabet target, Alphabet a, Alphabet b,
                   Eigen::MatrixXd target_a, Eigen::MatrixXd target_b);

  // Polytope of dist with first source `a` (the variable whose unique
  // information is being minimized) and second source `b`.
  static MarginalPolytope from_joint(const JointDist& dist, Var target, Var a, Var b);

  const Alphabet& target_alphabet() const { return target_; }
  const Alphabet& a_alphabet() const { return a_; }
  const Alphabet& b_alphabet() const { return b_; }
  const Eigen::MatrixXd& target_a() const { return ta_; }
  const Eigen::MatrixXd& target_b() const { return tb_; }
  Eigen::VectorXd target_marginal() const { return ta_.rowwise().sum(); }

  int nt() const { return target_.size(); }
  int na() const { return a_.size(); }
  int nb() const { return b_.size(); }

  // max deviation of q's pairwise marginals from the fixed ones;
  // q is flat in (t, a, b) order
  double membership_defect(const Eigen::ArrayXd& q) const;

 private:
  Alphabet target_, a_, b_;
  Eigen::MatrixXd ta_, tb_;
};

struct SolverConfig {
  double tol = 1e-9;           // certified-gap threshold, bits
  int max_iters = 10000;       // cap on total Newton steps
  double boundary_eps = 1e-12; // barrier slack floor; tightening stops here
};

struct SolverResult {
  JointDist optimal_q;         // axes: (target, A, B)
  double objective = 0.0;      // I_Q(target; A | B) at optimal_q, bits
  double certified_gap = 0.0;  // linearization duality gap, bits
  int iterations = 0;          // Newton steps taken
  bool converged = false;
  std::vector<double> objective_trace;  // objective after each barrier stage
};

// The conditionally independent point Q0(t,a,b) = P(t,a) P(t,b) / P(t),
// a member of the polytope with A and B conditionally independent given
// the target. Cells with P(t) = 0 map to 0. Axis order matches dist.
JointDist construct_q0(const JointDist& dist, Var target = Var::Z);

// Minimizes I_Q(target; A | B) over the polytope with a log-barrier
// Newton method. The returned gap is a rigorous suboptimality
// certificate: the objective is convex on the nonnegative orthant, so
// the gradient linearization minimized over the polytope (a per-slice
// transportation LP) lower-bounds the optimum.
SolverResult unique_information(const MarginalPolytope& poly,
                                const SolverConfig& cfg = SolverConfig{});

// Independent grid oracle for all-binary alphabets. Per target slice a
// 2x2 table with fixed margins has one free parameter over its Frechet
// interval; the minimum over a grid_steps x grid_steps grid upper
// bounds the true minimum.
double brute_force_unique(const MarginalPolytope& poly, int grid_steps);

}  // namespace pidfair

#endif
