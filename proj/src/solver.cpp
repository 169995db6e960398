#include "pidfair/solver.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "pidfair/transport.hpp"

namespace pidfair {

namespace {

double plog2p(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

double clamp_nonneg(double v) { return (v < 0.0 && v > -1e-12) ? 0.0 : v; }

// H(T,B) - H(B) from the fixed (target, B) marginal; the part of
// I_Q(T;A|B) that is constant over the polytope.
double fixed_entropy_part(const Eigen::MatrixXd& tb) {
  double h_tb = 0.0;
  for (long i = 0; i < tb.size(); ++i) h_tb -= plog2p(tb.reshaped()[i]);
  double h_b = 0.0;
  const Eigen::VectorXd pb = tb.colwise().sum();
  for (long j = 0; j < pb.size(); ++j) h_b -= plog2p(pb[j]);
  return h_tb - h_b;
}

}  // namespace

MarginalPolytope::MarginalPolytope(Alphabet target, Alphabet a, Alphabet b,
                                   Eigen::MatrixXd target_a, Eigen::MatrixXd target_b)
    : target_(std::move(target)), a_(std::move(a)), b_(std::move(b)),
      ta_(std::move(target_a)), tb_(std::move(target_b)) {
  if (ta_.rows() != target_.size() || ta_.cols() != a_.size() ||
      tb_.rows() != target_.size() || tb_.cols() != b_.size())
    throw ValidationError("marginal polytope: shape mismatch");
  if (ta_.minCoeff() < 0.0 || tb_.minCoeff() < 0.0)
    throw ValidationError("marginal polytope: negative marginal entry");
  if (std::abs(ta_.sum() - 1.0) > 1e-9 || std::abs(tb_.sum() - 1.0) > 1e-9)
    throw ValidationError("marginal polytope: marginals must sum to 1");
  const Eigen::VectorXd pt_a = ta_.rowwise().sum();
  const Eigen::VectorXd pt_b = tb_.rowwise().sum();
  if ((pt_a - pt_b).lpNorm<Eigen::Infinity>() > 1e-9)
    throw ValidationError("marginal polytope: inconsistent target marginals");
}

MarginalPolytope MarginalPolytope::from_joint(const JointDist& dist, Var target,
                                              Var a, Var b) {
  if (target == a || target == b || a == b)
    throw ValidationError("marginal polytope needs three distinct variables");
  return MarginalPolytope(dist.alphabet(target), dist.alphabet(a), dist.alphabet(b),
                          marginal(dist, target, a), marginal(dist, target, b));
}

double MarginalPolytope::membership_defect(const Eigen::ArrayXd& q) const {
  double worst = 0.0;
  for (int t = 0; t < nt(); ++t) {
    for (int i = 0; i < na(); ++i) {
      double s = 0.0;
      for (int j = 0; j < nb(); ++j) s += q[(t * na() + i) * nb() + j];
      worst = std::max(worst, std::abs(s - ta_(t, i)));
    }
    for (int j = 0; j < nb(); ++j) {
      double s = 0.0;
      for (int i = 0; i < na(); ++i) s += q[(t * na() + i) * nb() + j];
      worst = std::max(worst, std::abs(s - tb_(t, j)));
    }
  }
  return worst;
}

JointDist construct_q0(const JointDist& dist, Var target) {
  Var a, b;
  switch (target) {
    case Var::Z: a = Var::Pred; b = Var::Label; break;
    case Var::Pred: a = Var::Z; b = Var::Label; break;
    default: a = Var::Z; b = Var::Pred; break;
  }
  const Eigen::MatrixXd pta = marginal(dist, target, a);
  const Eigen::MatrixXd ptb = marginal(dist, target, b);
  const Eigen::VectorXd pt = marginal(dist, target);
  Eigen::ArrayXd q(dist.probs().size());
  for (int iz = 0; iz < dist.size(Var::Z); ++iz)
    for (int ia = 0; ia < dist.size(Var::Pred); ++ia)
      for (int ib = 0; ib < dist.size(Var::Label); ++ib) {
        const int idx[3] = {iz, ia, ib};
        const int t = idx[static_cast<int>(target)];
        const int ca = idx[static_cast<int>(a)];
        const int cb = idx[static_cast<int>(b)];
        q[dist.flat_index(iz, ia, ib)] =
            pt[t] > 0.0 ? pta(t, ca) * ptb(t, cb) / pt[t] : 0.0;
      }
  q /= q.sum();
  return JointDist(dist.alphabet(Var::Z), dist.alphabet(Var::Pred),
                   dist.alphabet(Var::Label), std::move(q));
}
namespace {

// Interior-point working state for minimizing f(q) = const + sum q ln q
// - sum m ln m (nats) over the marginal polytope, where m is the (a, b)
// marginal of q. The key convexity fact: f(q) equals the relative
// entropy D(q || M q) up to the constant, with M the linear map
// collapsing the target axis, so f is jointly convex on the whole
// nonnegative orthant by the log-sum inequality. A gradient
// linearization minimized over the polytope therefore lower-bounds the
// optimum from any interior point, which is what certifies the gap.
//
// Only cells whose row and column marginals are both positive can ever
// carry mass; everything below works on that active subset.
struct BarrierProblem {
  const MarginalPolytope& poly;
  std::vector<int> flat;  // active cell -> index into the full tensor
  std::vector<int> col;   // active cell -> (a, b) column id a * nb + b
  Eigen::MatrixXd A;      // equality constraints A q = rhs, full row rank
  Eigen::VectorXd rhs;
  double const_nat;       // H(T,B) - H(B) in nats

  int n() const { return static_cast<int>(flat.size()); }

  Eigen::VectorXd column_marginal(const Eigen::VectorXd& q) const {
    Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<long>(poly.na()) * poly.nb());
    for (int i = 0; i < n(); ++i) m[col[i]] += q[i];
    return m;
  }

  double objective_nat(const Eigen::VectorXd& q) const {
    const Eigen::VectorXd m = column_marginal(q);
    double f = const_nat;
    for (int i = 0; i < n(); ++i)
      if (q[i] > 0.0) f += q[i] * std::log(q[i]);
    for (long j = 0; j < m.size(); ++j)
      if (m[j] > 0.0) f -= m[j] * std::log(m[j]);
    return f;
  }

  // valid at interior points (q > 0 on active cells)
  Eigen::VectorXd gradient_nat(const Eigen::VectorXd& q) const {
    const Eigen::VectorXd m = column_marginal(q);
    Eigen::VectorXd g(n());
    for (int i = 0; i < n(); ++i) g[i] = std::log(q[i]) - std::log(m[col[i]]);
    return g;
  }

  Eigen::MatrixXd hessian_nat(const Eigen::VectorXd& q) const {
    const Eigen::VectorXd m = column_marginal(q);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n(), n());
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        if (col[i] == col[j]) h(i, j) -= 1.0 / m[col[i]];
    for (int i = 0; i < n(); ++i) h(i, i) += 1.0 / q[i];
    return h;
  }

  // vertex of the polytope minimizing <cost, v>, restricted to the
  // active cells; one transportation LP per target slice
  Eigen::VectorXd oracle(const Eigen::VectorXd& cost) const {
    const int na = poly.na(), nb = poly.nb();
    Eigen::ArrayXd full = Eigen::ArrayXd::Zero(static_cast<long>(poly.nt()) * na * nb);
    for (int i = 0; i < n(); ++i) full[flat[i]] = cost[i];
    Eigen::VectorXd v(n());
    for (int t = 0; t < poly.nt(); ++t) {
      Eigen::MatrixXd slice_cost(na, nb);
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
          slice_cost(i, j) = full[(static_cast<long>(t) * na + i) * nb + j];
      const Eigen::MatrixXd x = transport_min_cost(
          slice_cost, poly.target_a().row(t), poly.target_b().row(t));
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
          full[(static_cast<long>(t) * na + i) * nb + j] = x(i, j);
    }
    for (int i = 0; i < n(); ++i) v[i] = full[flat[i]];
    return v;
  }
};

BarrierProblem make_barrier_problem(const MarginalPolytope& poly) {
  BarrierProblem prob{poly, {}, {}, {}, {}, 0.0};
  prob.const_nat = fixed_entropy_part(poly.target_b()) * std::numbers::ln2;

  const int na = poly.na(), nb = poly.nb();
  for (int t = 0; t < poly.nt(); ++t)
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j)
        if (poly.target_a()(t, i) > 0.0 && poly.target_b()(t, j) > 0.0) {
          prob.flat.push_back((t * na + i) * nb + j);
          prob.col.push_back(i * nb + j);
        }

  // per slice: every positive row sum plus all but the last positive
  // column sum; the dropped column is implied, keeping A full row rank
  struct Constraint {
    int t, idx;
    bool is_row;
    double value;
  };
  std::vector<Constraint> cons;
  for (int t = 0; t < poly.nt(); ++t) {
    for (int i = 0; i < na; ++i)
      if (poly.target_a()(t, i) > 0.0) cons.push_back({t, i, true, poly.target_a()(t, i)});
    int last_col = -1;
    for (int j = 0; j < nb; ++j)
      if (poly.target_b()(t, j) > 0.0) last_col = j;
    for (int j = 0; j < nb; ++j)
      if (poly.target_b()(t, j) > 0.0 && j != last_col)
        cons.push_back({t, j, false, poly.target_b()(t, j)});
  }

  prob.A = Eigen::MatrixXd::Zero(static_cast<long>(cons.size()), prob.n());
  prob.rhs = Eigen::VectorXd(cons.size());
  for (size_t c = 0; c < cons.size(); ++c) {
    prob.rhs[c] = cons[c].value;
    for (int k = 0; k < prob.n(); ++k) {
      const int cell = prob.flat[k];
      const int t = cell / (na * nb);
      const int i = (cell / nb) % na;
      const int j = cell % nb;
      if (t != cons[c].t) continue;
      if (cons[c].is_row ? (i == cons[c].idx) : (j == cons[c].idx))
        prob.A(c, k) = 1.0;
    }
  }
  return prob;
}

}  // namespace

SolverResult unique_information(const MarginalPolytope& poly, const SolverConfig& cfg) {
  if (cfg.tol <= 0.0) throw ValidationError("solver tol must be positive");
  if (cfg.max_iters <= 0) throw ValidationError("solver max_iters must be positive");
  if (cfg.boundary_eps <= 0.0 || cfg.boundary_eps >= 1e-6)
    throw ValidationError("solver boundary_eps out of range");

  const double ln2 = std::numbers::ln2;
  BarrierProblem prob = make_barrier_problem(poly);

  // strictly interior start: the conditionally independent point
  // Q0(t,a,b) = P(t,a) P(t,b) / P(t), positive on every active cell
  const Eigen::VectorXd pt = poly.target_marginal();
  Eigen::VectorXd q(prob.n());
  for (int k = 0; k < prob.n(); ++k) {
    const int cell = prob.flat[k];
    const int t = cell / (poly.na() * poly.nb());
    const int i = (cell / poly.nb()) % poly.na();
    const int j = cell % poly.nb();
    q[k] = poly.target_a()(t, i) * poly.target_b()(t, j) / pt[t];
  }

  SolverResult res{JointDist(poly.target_alphabet(), poly.a_alphabet(),
                             poly.b_alphabet(),
                             [&] {
                               Eigen::ArrayXd full = Eigen::ArrayXd::Zero(
                                   static_cast<long>(poly.nt()) * poly.na() * poly.nb());
                               for (int k = 0; k < prob.n(); ++k) full[prob.flat[k]] = q[k];
                               return full;
                             }())};
  res.objective_trace.reserve(32);

  // barrier weight written as f - mu sum(ln q) rather than t f -
  // sum(ln q): values stay O(1) as mu -> 0, so line-search comparisons
  // keep their floating-point resolution at tight centering
  auto barrier_value = [&](double mu, const Eigen::VectorXd& x) {
    double phi = prob.objective_nat(x);
    for (int i = 0; i < prob.n(); ++i) phi -= mu * std::log(x[i]);
    return phi;
  };

  auto certified_gap_bits = [&](const Eigen::VectorXd& x) {
    const Eigen::VectorXd g = prob.gradient_nat(x) / ln2;
    const Eigen::VectorXd v = prob.oracle(g);
    return std::max(g.dot(x - v), 0.0);
  };

  // every iterate is q0 + N y with N a kernel basis of A, so the
  // marginal constraints hold to machine precision by construction
  Eigen::MatrixXd nullsp;
  {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(prob.A);
    nullsp = prob.A.rows() > 0 ? Eigen::MatrixXd(lu.kernel())
                               : Eigen::MatrixXd::Identity(prob.n(), prob.n());
    if (prob.A.rows() > 0 && lu.dimensionOfKernel() == 0)
      nullsp = Eigen::MatrixXd::Zero(prob.n(), 0);  // polytope is a point
  }
  const long nfree = nullsp.cols();

  int newton = 0;
  double mu = 1.0;
  Eigen::VectorXd q_best = q;
  double gap_best = certified_gap_bits(q);
  for (int stage = 0; stage < 48 && nfree > 0; ++stage) {
    // center at the current barrier weight
    for (int inner = 0; inner < 64 && newton < cfg.max_iters; ++inner) {
      Eigen::VectorXd g_phi =
          prob.gradient_nat(q) - mu * q.cwiseInverse();
      Eigen::MatrixXd h_phi = prob.hessian_nat(q);
      h_phi.diagonal() += mu * q.array().square().inverse().matrix();

      // reduced Newton system in the null space, Jacobi-scaled for
      // stability at large barrier weights
      const Eigen::VectorXd g_y = nullsp.transpose() * g_phi;
      const Eigen::MatrixXd h_y = nullsp.transpose() * h_phi * nullsp;
      const Eigen::VectorXd scale =
          h_y.diagonal().array().max(1e-300).sqrt().inverse();
      const Eigen::MatrixXd h_s =
          scale.asDiagonal() * h_y * scale.asDiagonal();
      const Eigen::VectorXd dy =
          scale.asDiagonal() *
          Eigen::VectorXd(h_s.ldlt().solve(-(scale.asDiagonal() * g_y)));
      const Eigen::VectorXd dx = nullsp * dy;

      const double decrement2 = -g_phi.dot(dx);
      if (!(decrement2 > 1e-18)) break;

      double alpha = 1.0;
      for (int i = 0; i < prob.n(); ++i)
        if (dx[i] < 0.0) alpha = std::min(alpha, -0.99 * q[i] / dx[i]);
      // backtrack only while the predicted decrease is measurable in
      // double precision; below that, accept the damped Newton step
      // unverified -- the caller keeps the best-certified iterate, so
      // a bad unverified step cannot degrade the result
      if (decrement2 > 1e-12) {
        const double phi0 = barrier_value(mu, q);
        while (alpha > 1e-13 &&
               barrier_value(mu, q + alpha * dx) > phi0 - 0.25 * alpha * decrement2)
          alpha *= 0.5;
        if (alpha <= 1e-13) break;
      }
      q += alpha * dx;
      ++newton;
    }

    res.objective_trace.push_back(
        clamp_nonneg(prob.objective_nat(q) / ln2));
    const double gap = certified_gap_bits(q);
    if (gap < gap_best) {
      gap_best = gap;
      q_best = q;
    }
    if (gap_best <= cfg.tol) break;
    if (newton >= cfg.max_iters) break;
    if (mu * prob.n() < cfg.boundary_eps) break;  // slack floor reached
    mu *= 0.1;
  }

  res.iterations = newton;
  res.certified_gap = gap_best;
  res.converged = gap_best <= cfg.tol;
  res.objective = clamp_nonneg(prob.objective_nat(q_best) / ln2);
  Eigen::ArrayXd full = Eigen::ArrayXd::Zero(
      static_cast<long>(poly.nt()) * poly.na() * poly.nb());
  for (int k = 0; k < prob.n(); ++k) full[prob.flat[k]] = std::max(q_best[k], 0.0);
  full /= full.sum();
  res.optimal_q = JointDist(poly.target_alphabet(), poly.a_alphabet(),
                            poly.b_alphabet(), std::move(full));
  return res;
}

double brute_force_unique(const MarginalPolytope& poly, int grid_steps) {
  if (poly.nt() != 2 || poly.na() != 2 || poly.nb() != 2)
    throw UnsupportedShape("brute_force_unique supports only all-binary alphabets");
  if (grid_steps < 2) throw ValidationError("grid_steps must be at least 2");

  const double const_part = fixed_entropy_part(poly.target_b());

  // per slice: cells as a function of the free parameter t = q(z,0,0)
  struct SliceGrid {
    std::vector<std::array<double, 4>> cells;  // (00, 01, 10, 11)
    std::vector<double> self_term;             // sum q log2 q over the slice
  };
  SliceGrid grids[2];
  for (int z = 0; z < 2; ++z) {
    const double r0 = poly.target_a()(z, 0);
    const double c0 = poly.target_b()(z, 0);
    const double pz = r0 + poly.target_a()(z, 1);
    const double lo = std::max(0.0, r0 + c0 - pz);
    const double hi = std::min(r0, c0);
    grids[z].cells.resize(grid_steps);
    grids[z].self_term.resize(grid_steps);
    for (int k = 0; k < grid_steps; ++k) {
      const double t = lo + (hi - lo) * k / (grid_steps - 1);
      const std::array<double, 4> c = {t, r0 - t, c0 - t, pz - r0 - c0 + t};
      double s = 0.0;
      for (double v : c) s += plog2p(std::max(v, 0.0));
      grids[z].cells[k] = c;
      grids[z].self_term[k] = s;
    }
  }

  double best = std::numeric_limits<double>::infinity();
  for (int k0 = 0; k0 < grid_steps; ++k0) {
    const auto& c0 = grids[0].cells[k0];
    const double s0 = grids[0].self_term[k0];
    for (int k1 = 0; k1 < grid_steps; ++k1) {
      const auto& c1 = grids[1].cells[k1];
      double f = const_part + s0 + grids[1].self_term[k1];
      for (int ab = 0; ab < 4; ++ab)
        f -= plog2p(std::max(c0[ab] + c1[ab], 0.0));
      best = std::min(best, f);
    }
  }
  return std::max(best, 0.0);
}

}  // namespace pidfair
