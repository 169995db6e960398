#ifndef PIDFAIR_FAIRNESS_HPP
#define PIDFAIR_FAIRNESS_HPP

#include <string>

#include "pidfair/pid.hpp"

namespace pidfair {

// Positivity threshold for theorem premises and conclusions, in bits.
// One order above solver tolerance and far below any effect of
// interest (the smallest reported real-data value is 0.037).
inline constexpr double kPositivityTol = 1e-6;

struct FairnessGaps {
  double sp_gap = 0.0;      // I(Z; Yhat)
  double eo_gap = 0.0;      // I(Z; Yhat | Y)
  double pp_gap = 0.0;      // I(Z; Y | Yhat)
  double dataset_mi = 0.0;  // I(Z; Y), a property of the data alone
};

struct TheoremVerdict {
  bool premise = false;  // did the theorem's hypothesis hold?
  bool holds = true;     // conclusion (vacuously true when premise fails)
  double margin = 0.0;   // slack of the tightest asserted inequality
  std::string note;
};

struct FairnessAudit {
  FairnessGaps gaps;
  PidDecomposition pid;  // A = Yhat, B = Y
  TheoremVerdict t1, t2, t3, t4, t5;
  bool breach() const {
    return !(t1.holds && t2.holds && t3.holds && t4.holds && t5.holds);
  }
};

// The three unfairness gaps plus I(Z;Y); solver-free.
FairnessGaps compute_gaps(const JointDist& dist);

// Full audit: gaps, PID decomposition, and all theorem verdicts.
FairnessAudit audit(const JointDist& dist, const SolverConfig& cfg = SolverConfig{});

// Individual theorem checkers. A failing verdict with a held premise
// signals a solver or estimation fault, never a property of the data.
TheoremVerdict check_impossibility(const FairnessAudit& a, double total_mi);
TheoremVerdict check_dataset_relation(const FairnessAudit& a);
TheoremVerdict check_sp_zero_regime(const FairnessAudit& a);
TheoremVerdict check_pp_zero_regime(const FairnessAudit& a);
TheoremVerdict check_eo_zero_tradeoff(const FairnessAudit& a);

}  // namespace pidfair

#endif
