#include "pidfair/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pidfair {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double convert(double bits, const std::string& units) {
  return units == "nats" ? bits * kLn2 : bits;
}

std::string num6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  // avoid the "-0.000000" artifact
  if (std::string(buf) == "-0.000000") return "0.000000";
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

void theorem_json(std::ostringstream& os, const char* name, const TheoremVerdict& v,
                  const std::string& units, bool last = false) {
  os << "\"" << name << "\":{\"premise\":" << (v.premise ? "true" : "false")
     << ",\"holds\":" << (v.holds ? "true" : "false")
     << ",\"margin\":" << num6(convert(v.margin, units)) << "}";
  if (!last) os << ",";
}

}  // namespace

std::string render_json(const AuditReport& r) {
  const auto& g = r.audit.gaps;
  const auto& p = r.audit.pid;
  const std::string& u = r.units;
  std::ostringstream os;
  os << "{";
  os << "\"meta\":{"
     << "\"tool_version\":\"" << kToolVersion << "\","
     << "\"source\":\"" << json_escape(r.source) << "\","
     << "\"n_records\":" << r.n_records << ","
     << "\"smoothing\":" << num6(r.smoothing) << ","
     << "\"solver_tol\":" << r.cfg.tol << ","
     << "\"solver_max_iters\":" << r.cfg.max_iters << ","
     << "\"dataset_only\":" << (r.dataset_only ? "true" : "false") << ","
     << "\"units\":\"" << u << "\","
     << "\"note\":\"information quantities in " << u
     << "; log base 2 assumed for reference values\"},";
  os << "\"gaps\":{"
     << "\"sp\":" << num6(convert(g.sp_gap, u)) << ","
     << "\"eo\":" << num6(convert(g.eo_gap, u)) << ","
     << "\"pp\":" << num6(convert(g.pp_gap, u)) << ","
     << "\"dataset_mi\":" << num6(convert(g.dataset_mi, u)) << "},";
  os << "\"pid\":{"
     << "\"uni_pred\":" << num6(convert(p.uni_a, u)) << ","
     << "\"uni_label\":" << num6(convert(p.uni_b, u)) << ","
     << "\"red\":" << num6(convert(p.red, u)) << ","
     << "\"syn\":" << num6(convert(p.syn, u)) << ","
     << "\"total\":" << num6(convert(p.total, u)) << "},";
  os << "\"theorems\":{";
  theorem_json(os, "t1", r.audit.t1, u);
  theorem_json(os, "t2", r.audit.t2, u);
  theorem_json(os, "t3", r.audit.t3, u);
  theorem_json(os, "t4", r.audit.t4, u);
  theorem_json(os, "t5", r.audit.t5, u, true);
  os << "},";
  os << "\"solver\":{"
     << "\"iters\":" << (p.iterations_a + p.iterations_b) << ","
     << "\"gap\":" << num6(convert(std::max(p.gap_a, p.gap_b), u)) << ","
     << "\"converged\":" << (p.converged ? "true" : "false") << "}";
  os << "}\n";
  return os.str();
}

std::string render_text(const AuditReport& r) {
  const auto& g = r.audit.gaps;
  const auto& p = r.audit.pid;
  const std::string& u = r.units;
  std::ostringstream os;
  auto line = [&](const std::string& k, const std::string& v) {
    os << k;
    os << std::string(k.size() < 26 ? 26 - k.size() : 1, ' ');
    os << v << "\n";
  };
  line("source", r.source);
  line("records", std::to_string(r.n_records));
  line("units", u);
  if (r.dataset_only) line("mode", "dataset-only (no prediction column)");
  os << "\n";
  line("statistical parity gap", num6(convert(g.sp_gap, u)));
  line("equalized odds gap", num6(convert(g.eo_gap, u)));
  line("predictive parity gap", num6(convert(g.pp_gap, u)));
  line("dataset I(Z;Y)", num6(convert(g.dataset_mi, u)));
  os << "\n";
  line("unique (prediction)", num6(convert(p.uni_a, u)));
  line("unique (label)", num6(convert(p.uni_b, u)));
  line("redundant", num6(convert(p.red, u)));
  line("synergistic", num6(convert(p.syn, u)));
  line("total I(Z;Yhat,Y)", num6(convert(p.total, u)));
  os << "\n";
  auto tline = [&](const char* name, const TheoremVerdict& v) {
    std::string s = v.premise ? "premise held, " : "premise not held, ";
    s += v.holds ? "conclusion held" : "CONCLUSION VIOLATED";
    if (!v.note.empty()) s += " (" + v.note + ")";
    line(name, s);
  };
  tline("theorem 1 impossibility", r.audit.t1);
  tline("theorem 2 dataset", r.audit.t2);
  tline("theorem 3 sp-zero", r.audit.t3);
  tline("theorem 4 pp-zero", r.audit.t4);
  tline("theorem 5 eo-zero", r.audit.t5);
  os << "\n";
  line("solver iterations", std::to_string(p.iterations_a + p.iterations_b));
  line("solver certified gap", num6(convert(std::max(p.gap_a, p.gap_b), u)));
  line("solver converged", p.converged ? "yes" : "no");
  return os.str();
}

std::string render_sweep_csv(const std::string& param_name,
                             const std::vector<SweepRow>& rows,
                             const std::string& units) {
  std::ostringstream os;
  os << param_name
     << ",sp_gap,eo_gap,pp_gap,dataset_mi,uni_pred,uni_label,red,syn\n";
  for (const auto& r : rows) {
    os << num6(r.param) << "," << num6(convert(r.gaps.sp_gap, units)) << ","
       << num6(convert(r.gaps.eo_gap, units)) << ","
       << num6(convert(r.gaps.pp_gap, units)) << ","
       << num6(convert(r.gaps.dataset_mi, units)) << ","
       << num6(convert(r.pid.uni_a, units)) << ","
       << num6(convert(r.pid.uni_b, units)) << ","
       << num6(convert(r.pid.red, units)) << ","
       << num6(convert(r.pid.syn, units)) << "\n";
  }
  return os.str();
}

}  // namespace pidfair
