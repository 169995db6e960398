#include "pidfair/lp.hpp"

#include <stdexcept>
#include <vector>

namespace pidfair {

LpFeasibility solve_equality_feasibility(const Eigen::MatrixXd& A_in,
                                         const Eigen::VectorXd& b_in,
                                         double tol) {
  const int m = static_cast<int>(A_in.rows());
  const int n = static_cast<int>(A_in.cols());
  if (b_in.size() != m) throw std::invalid_argument("lp: b size mismatch");

  Eigen::MatrixXd A = A_in;
  Eigen::VectorXd b = b_in;
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0.0) {
      A.row(i) *= -1.0;
      b[i] *= -1.0;
    }
  }

  // tableau over [x | artificials], artificial basis, minimize sum of
  // artificials
  const int total = n + m;
  Eigen::MatrixXd T(m, total + 1);
  T.leftCols(n) = A;
  T.block(0, n, m, m) = Eigen::MatrixXd::Identity(m, m);
  T.col(total) = b;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // reduced cost row for c = (0,...,0,1,...,1): z_j - c_j
  Eigen::VectorXd obj = Eigen::VectorXd::Zero(total + 1);
  for (int i = 0; i < m; ++i) obj -= T.row(i);
  for (int i = 0; i < m; ++i) obj[n + i] += 1.0;

  const double piv_eps = 1e-11;
  const int max_pivots = 200 * (m + n) + 200;
  for (int it = 0; it < max_pivots; ++it) {
    int enter = -1;
    for (int j = 0; j < total; ++j) {  // Bland: lowest index first
      if (obj[j] < -piv_eps) { enter = j; break; }
    }
    if (enter < 0) break;
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (T(i, enter) > piv_eps) {
        const double ratio = T(i, total) / T(i, enter);
        if (leave < 0 || ratio < best_ratio - piv_eps ||
            (ratio < best_ratio + piv_eps && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) break;  // unbounded cannot happen in phase 1
    const double piv = T(leave, enter);
    T.row(leave) /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = T(i, enter);
      if (f != 0.0) T.row(i) -= f * T.row(leave);
    }
    obj -= obj[enter] * T.row(leave).transpose();
    basis[leave] = enter;
  }

  double artificial_sum = 0.0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n) artificial_sum += T(i, total);

  LpFeasibility out;
  out.residual = artificial_sum;
  out.feasible = artificial_sum <= tol;
  out.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) out.x[basis[i]] = T(i, total);
  return out;
}

}  // namespace pidfair
