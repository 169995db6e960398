#include "pidfair/fairness.hpp"

#include <algorithm>
#include <cmath>

namespace pidfair {

FairnessGaps compute_gaps(const JointDist& dist) {
  FairnessGaps g;
  g.sp_gap = mutual_information(dist, Var::Z, Var::Pred);
  g.eo_gap = conditional_mutual_information(dist, Var::Z, Var::Pred, Var::Label);
  g.pp_gap = conditional_mutual_information(dist, Var::Z, Var::Label, Var::Pred);
  g.dataset_mi = mutual_information(dist, Var::Z, Var::Label);
  // chain rule on I(Z; Yhat, Y) in both orders
  if (std::abs(g.sp_gap + g.pp_gap - g.eo_gap - g.dataset_mi) > 1e-9)
    throw ValidationError("fairness gaps violate the chain-rule identity");
  return g;
}

TheoremVerdict check_impossibility(const FairnessAudit& a, double total_mi) {
  TheoremVerdict v;
  v.premise = total_mi > kPositivityTol;
  const double worst =
      std::max({a.gaps.sp_gap, a.gaps.eo_gap, a.gaps.pp_gap});
  if (v.premise) {
    v.holds = worst > kPositivityTol;
    v.margin = worst - kPositivityTol;
    v.note.clear();
    if (a.gaps.sp_gap > kPositivityTol) v.note += "sp ";
    if (a.gaps.eo_gap > kPositivityTol) v.note += "eo ";
    if (a.gaps.pp_gap > kPositivityTol) v.note += "pp ";
    if (!v.note.empty()) v.note.pop_back();
    v.note = "positive gaps: {" + v.note + "}";
  } else {
    // converse direction: zero joint information forces all gaps to 0
    v.holds = worst <= kPositivityTol;
    v.margin = kPositivityTol - worst;
    v.note = "converse: all gaps zero";
  }
  return v;
}

TheoremVerdict check_dataset_relation(const FairnessAudit& a) {
  TheoremVerdict v;
  const double identity_defect =
      std::abs(a.gaps.dataset_mi - (a.pid.uni_b + a.pid.red));
  v.premise = a.gaps.dataset_mi > kPositivityTol;
  v.holds = identity_defect <= kPositivityTol;
  v.margin = kPositivityTol - identity_defect;
  if (v.premise) {
    const bool disjunction =
        a.gaps.sp_gap > kPositivityTol || a.gaps.pp_gap > kPositivityTol;
    v.holds = v.holds && disjunction;
    v.margin = std::min(v.margin, std::max(a.gaps.sp_gap, a.gaps.pp_gap) - kPositivityTol);
  }
  return v;
}

TheoremVerdict check_sp_zero_regime(const FairnessAudit& a) {
  TheoremVerdict v;
  v.premise = a.gaps.sp_gap <= kPositivityTol;
  if (!v.premise) {
    v.note = "vacuous: sp_gap positive";
    return v;
  }
  v.holds = a.gaps.pp_gap >= a.gaps.eo_gap - kPositivityTol;
  v.margin = a.gaps.pp_gap - a.gaps.eo_gap + kPositivityTol;
  if (a.gaps.dataset_mi <= kPositivityTol) {
    const double defect = std::abs(a.gaps.pp_gap - a.gaps.eo_gap);
    v.holds = v.holds && defect <= kPositivityTol;
    v.margin = std::min(v.margin, kPositivityTol - defect);
    v.note = "equality clause active (I(Z;Y)=0)";
  }
  return v;
}

TheoremVerdict check_pp_zero_regime(const FairnessAudit& a) {
  TheoremVerdict v;
  v.premise = a.gaps.pp_gap <= kPositivityTol;
  if (!v.premise) {
    v.note = "vacuous: pp_gap positive";
    return v;
  }
  v.holds = a.gaps.sp_gap >= a.gaps.eo_gap - kPositivityTol;
  v.margin = a.gaps.sp_gap - a.gaps.eo_gap + kPositivityTol;
  if (a.gaps.dataset_mi <= kPositivityTol) {
    // equality between sp and eo, following the proof
    const double defect = std::abs(a.gaps.sp_gap - a.gaps.eo_gap);
    v.holds = v.holds && defect <= kPositivityTol;
    v.margin = std::min(v.margin, kPositivityTol - defect);
    v.note = "equality clause active (I(Z;Y)=0)";
  }
  return v;
}

TheoremVerdict check_eo_zero_tradeoff(const FairnessAudit& a) {
  TheoremVerdict v;
  v.premise = a.gaps.eo_gap <= kPositivityTol && a.gaps.dataset_mi > kPositivityTol;
  if (!v.premise) {
    v.note = "vacuous: eo_gap positive or I(Z;Y)=0";
    return v;
  }
  const double defect = std::abs(a.gaps.sp_gap + a.gaps.pp_gap - a.gaps.dataset_mi);
  v.holds = defect <= kPositivityTol;
  v.margin = kPositivityTol - defect;
  return v;
}

FairnessAudit audit(const JointDist& dist, const SolverConfig& cfg) {
  FairnessAudit a;
  a.gaps = compute_gaps(dist);
  a.pid = decompose(dist, Var::Z, cfg);
  a.t1 = check_impossibility(a, a.pid.total);
  a.t2 = check_dataset_relation(a);
  a.t3 = check_sp_zero_regime(a);
  a.t4 = check_pp_zero_regime(a);
  a.t5 = check_eo_zero_tradeoff(a);
  return a;
}

}  // namespace pidfair
