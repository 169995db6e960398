#ifndef PIDFAIR_REPORT_HPP
#define PIDFAIR_REPORT_HPP

#include <string>
#include <vector>

#include "pidfair/fairness.hpp"

namespace pidfair {

inline constexpr const char* kToolVersion = "0.1.0";

// One audited distribution plus the metadata needed to reproduce it.
// All numeric fields render with 6 decimal places so identical inputs
// give byte-identical reports.
struct AuditReport {
  std::string source;      // input path or scenario descriptor
  long n_records = 0;      // 0 for analytic distributions
  double smoothing = 0.0;
  SolverConfig cfg;
  bool dataset_only = false;
  std::string units = "bits";  // "bits" or "nats"
  FairnessAudit audit;
};

std::string render_json(const AuditReport& report);
std::string render_text(const AuditReport& report);

struct SweepRow {
  double param;
  FairnessGaps gaps;
  PidDecomposition pid;
};

// Plot-ready CSV, one row per sweep point, ordered by parameter.
std::string render_sweep_csv(const std::string& param_name,
                             const std::vector<SweepRow>& rows,
                             const std::string& units = "bits");

}  // namespace pidfair

#endif
