#ifndef PIDFAIR_TRANSPORT_HPP
#define PIDFAIR_TRANSPORT_HPP

#include <Eigen/Dense>

namespace pidfair {

// Exact minimizer of sum_ij cost(i,j) * x(i,j) subject to
//   x >= 0, row sums = supply, column sums = demand.
// supply and demand must be nonnegative with equal totals (up to fp
// noise). Solved as min-cost flow by successive shortest paths, so the
// result is a vertex of the transportation polytope.
Eigen::MatrixXd transport_min_cost(const Eigen::MatrixXd& cost,
                                   const Eigen::VectorXd& supply,
                                   const Eigen::VectorXd& demand);

}  // namespace pidfair

#endif
