#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pidfair/csv.hpp"
#include "pidfair/report.hpp"
#include "pidfair/scenarios.hpp"

namespace {

enum ExitCode {
  kOk = 0,
  kIngestError = 2,
  kNoConvergence = 3,
  kTheoremBreach = 4,
  kSpecError = 5,
};

struct OutputOptions {
  std::string format = "json";
  std::string units = "bits";
  std::string out_path;  // empty = stdout
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--units", opts.units, "Information units")
      ->check(CLI::IsMember({"bits", "nats"}));
  cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
}

void add_solver_flags(CLI::App* cmd, pidfair::SolverConfig& cfg) {
  cmd->add_option("--tol", cfg.tol, "Certified-gap convergence threshold, bits");
  cmd->add_option("--max-iters", cfg.max_iters, "Solver iteration cap");
}

int emit(const OutputOptions& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    return kOk;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out || !(out << payload)) {
    std::cerr << "error: cannot write output file: " << opts.out_path << "\n";
    return kSpecError;
  }
  return kOk;
}

int finish_audit(const pidfair::AuditReport& report, const OutputOptions& opts) {
  const std::string payload = opts.format == "text" ? pidfair::render_text(report)
                                                    : pidfair::render_json(report);
  const int io = emit(opts, payload);
  if (io != kOk) return io;
  if (!report.audit.pid.converged) {
    std::cerr << "error: solver did not certify convergence (gap "
              << std::max(report.audit.pid.gap_a, report.audit.pid.gap_b) << " bits)\n";
    return kNoConvergence;
  }
  if (report.audit.breach()) {
    std::cerr << "error: a theorem invariant failed; see the report\n";
    return kTheoremBreach;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-information-decomposition audit of group fairness gaps"};
  app.require_subcommand(1);

  // audit: ingest a prediction CSV and audit it
  std::string input, z_col, y_col, yhat_col;
  double smoothing = 0.0;
  pidfair::SolverConfig audit_cfg;
  OutputOptions audit_out;
  auto* audit_cmd = app.add_subcommand("audit", "Audit a CSV of (z, y, yhat) records");
  audit_cmd->add_option("--input", input, "Input CSV path")->required();
  audit_cmd->add_option("--z-col", z_col, "Sensitive-attribute column")->required();
  audit_cmd->add_option("--y-col", y_col, "True-label column")->required();
  audit_cmd->add_option("--yhat-col", yhat_col,
                        "Prediction column (omit for dataset-only mode)");
  audit_cmd->add_option("--smoothing", smoothing, "Additive smoothing prior");
  add_solver_flags(audit_cmd, audit_cfg);
  add_output_flags(audit_cmd, audit_out);

  // scenario: audit one of the built-in analytic distributions
  std::string kind_name = "example1";
  pidfair::ScenarioSpec spec;
  pidfair::SolverConfig scen_cfg;
  OutputOptions scen_out;
  auto* scen_cmd = app.add_subcommand("scenario", "Audit a canonical scenario");
  scen_cmd->add_option("--kind", kind_name,
                       "example1|example2|example3|example4|motivational");
  scen_cmd->add_option("--rho", spec.rho, "Label correlation P(Y=Z)");
  add_solver_flags(scen_cmd, scen_cfg);
  add_output_flags(scen_cmd, scen_out);

  // sweep: trajectory CSV over a parameterized family
  std::string sweep_kind = "markov_sweep";
  pidfair::ScenarioSpec sweep_spec;
  pidfair::SolverConfig sweep_cfg;
  OutputOptions sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Audit a parameterized family");
  sweep_cmd->add_option("--kind", sweep_kind, "markov_sweep|sp_zero_family");
  sweep_cmd->add_option("--rho", sweep_spec.rho, "Label correlation P(Y=Z)");
  sweep_cmd->add_option("--q-lo", sweep_spec.q_lo, "Sweep start of P(Yhat=Y)");
  sweep_cmd->add_option("--q-hi", sweep_spec.q_hi, "Sweep end of P(Yhat=Y)");
  sweep_cmd->add_option("--steps", sweep_spec.steps, "Sweep point count");
  sweep_cmd->add_option("--count", sweep_spec.count, "Family sample count");
  sweep_cmd->add_option("--seed", sweep_spec.seed, "RNG seed for sampled families");
  add_solver_flags(sweep_cmd, sweep_cfg);
  add_output_flags(sweep_cmd, sweep_out);

  // blackwell: channel-degradation feasibility check
  std::string bw_input, bw_z, bw_y, bw_yhat, bw_kind, bw_candidate = "y";
  double bw_smoothing = 0.0;
  OutputOptions bw_out;
  auto* bw_cmd = app.add_subcommand(
      "blackwell", "Check Blackwell sufficiency of one channel for the other");
  bw_cmd->add_option("--input", bw_input, "Input CSV path");
  bw_cmd->add_option("--z-col", bw_z, "Sensitive-attribute column");
  bw_cmd->add_option("--y-col", bw_y, "True-label column");
  bw_cmd->add_option("--yhat-col", bw_yhat, "Prediction column");
  bw_cmd->add_option("--smoothing", bw_smoothing, "Additive smoothing prior");
  bw_cmd->add_option("--kind", bw_kind, "Scenario kind instead of --input");
  bw_cmd->add_option("--candidate", bw_candidate,
                     "Which channel is checked as sufficient")
      ->check(CLI::IsMember({"y", "yhat"}));
  add_output_flags(bw_cmd, bw_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kSpecError;
  }

  try {
    if (audit_cmd->parsed()) {
      pidfair::AuditReport report;
      report.source = input;
      report.smoothing = smoothing;
      report.cfg = audit_cfg;
      report.dataset_only = yhat_col.empty();
      report.units = audit_out.units;
      report.n_records =
          static_cast<long>(pidfair::read_csv(input).rows.size());
      const pidfair::JointDist dist =
          pidfair::ingest_csv(input, z_col, y_col, yhat_col, smoothing);
      for (pidfair::Var v : {pidfair::Var::Z, pidfair::Var::Pred, pidfair::Var::Label})
        if (dist.size(v) == 1 && !(v == pidfair::Var::Pred && report.dataset_only))
          std::cerr << "warning: column for " << pidfair::var_name(v)
                    << " has a single distinct value\n";
      report.audit = pidfair::audit(dist, audit_cfg);
      return finish_audit(report, audit_out);
    }

    if (scen_cmd->parsed()) {
      spec.kind = pidfair::parse_scenario_kind(kind_name);
      const pidfair::JointDist dist = pidfair::generate_scenario(spec);
      pidfair::AuditReport report;
      report.source = "scenario:" + kind_name;
      report.cfg = scen_cfg;
      report.units = scen_out.units;
      report.audit = pidfair::audit(dist, scen_cfg);
      return finish_audit(report, scen_out);
    }

    if (sweep_cmd->parsed()) {
      sweep_spec.kind = pidfair::parse_scenario_kind(sweep_kind);
      const auto points = pidfair::generate_sweep(sweep_spec);
      std::vector<pidfair::SweepRow> rows;
      bool converged = true;
      for (const auto& pt : points) {
        pidfair::SweepRow row;
        row.param = pt.param;
        row.gaps = pidfair::compute_gaps(pt.dist);
        row.pid = pidfair::decompose(pt.dist, pidfair::Var::Z, sweep_cfg);
        converged = converged && row.pid.converged;
        rows.push_back(std::move(row));
      }
      const std::string param_name =
          sweep_spec.kind == pidfair::ScenarioKind::MarkovSweep ? "q" : "sample";
      const int io =
          emit(sweep_out, pidfair::render_sweep_csv(param_name, rows, sweep_out.units));
      if (io != kOk) return io;
      if (!converged) {
        std::cerr << "error: solver did not certify convergence on every point\n";
        return kNoConvergence;
      }
      return kOk;
    }

    if (bw_cmd->parsed()) {
      if (bw_input.empty() == bw_kind.empty())
        throw pidfair::SpecError("blackwell needs exactly one of --input or --kind");
      pidfair::ScenarioSpec bw_spec;
      std::string source;
      if (!bw_kind.empty()) {
        bw_spec.kind = pidfair::parse_scenario_kind(bw_kind);
        source = "scenario:" + bw_kind;
      } else {
        if (bw_z.empty() || bw_y.empty() || bw_yhat.empty())
          throw pidfair::SpecError(
              "blackwell --input needs --z-col, --y-col and --yhat-col");
        source = bw_input;
      }
      const pidfair::JointDist dist =
          bw_kind.empty()
              ? pidfair::ingest_csv(bw_input, bw_z, bw_y, bw_yhat, bw_smoothing)
              : pidfair::generate_scenario(bw_spec);
      const pidfair::Var candidate =
          bw_candidate == "y" ? pidfair::Var::Label : pidfair::Var::Pred;
      const auto res = pidfair::blackwell_check(dist, pidfair::Var::Z, candidate);
      std::ostringstream os;
      if (bw_out.format == "json") {
        os << "{\"source\":\"" << source << "\",\"candidate\":\"" << bw_candidate
           << "\",\"feasible\":" << (res.feasible ? "true" : "false")
           << ",\"infeasibility\":" << res.infeasibility << "}\n";
      } else {
        os << "channel P(" << bw_candidate << "|z) is "
           << (res.feasible ? "" : "NOT ")
           << "Blackwell sufficient for the other channel\n";
        if (res.witness) os << "witness transformation:\n" << *res.witness << "\n";
      }
      return emit(bw_out, os.str());
    }
  } catch (const pidfair::IngestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIngestError;
  } catch (const pidfair::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSpecError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSpecError;
  }
  return kOk;
}
