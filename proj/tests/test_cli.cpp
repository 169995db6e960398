#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PIDFAIR_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream(path, std::ios::binary) << contents;
}

}  // namespace

TEST_CASE("scenario audit succeeds with exit code 0") {
  const RunResult r = run_cli("scenario --kind example2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"red\":0.531004") != std::string::npos);
  CHECK(r.output.find("\"converged\":true") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  const RunResult a = run_cli("scenario --kind example3 --format json");
  const RunResult b = run_cli("scenario --kind example3 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("csv audit and ingestion errors") {
  write_file("cli_ok.csv", "z,yhat,y\n0,0,0\n0,1,1\n1,0,1\n1,1,0\n");
  const RunResult ok =
      run_cli("audit --input cli_ok.csv --z-col z --y-col y --yhat-col yhat");
  CHECK(ok.exit_code == 0);

  const RunResult missing =
      run_cli("audit --input cli_absent.csv --z-col z --y-col y --yhat-col yhat");
  CHECK(missing.exit_code == 2);
  CHECK(missing.output.empty());  // no partial report on ingestion failure

  write_file("cli_bad.csv", "z,yhat,y\n0,0,0\n0,,1\n");
  const RunResult bad =
      run_cli("audit --input cli_bad.csv --z-col z --y-col y --yhat-col yhat");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.empty());
  std::remove("cli_ok.csv");
  std::remove("cli_bad.csv");
}

TEST_CASE("dataset-only audit") {
  write_file("cli_ds.csv", "sex,income\nF,0\nF,0\nF,1\nM,0\nM,1\nM,1\n");
  const RunResult r = run_cli("audit --input cli_ds.csv --z-col sex --y-col income");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"dataset_only\":true") != std::string::npos);
  std::remove("cli_ds.csv");
}

TEST_CASE("flag errors exit with code 5") {
  CHECK(run_cli("scenario --kind not_a_kind").exit_code == 5);
  CHECK(run_cli("audit --z-col z --y-col y").exit_code == 5);  // --input missing
  CHECK(run_cli("scenario --kind example2 --format yaml").exit_code == 5);
  CHECK(run_cli("sweep --kind markov_sweep --out /nonexistent_dir/x.csv").exit_code == 5);
}

TEST_CASE("sweep trajectory") {
  const RunResult r = run_cli("sweep --kind markov_sweep --steps 5 --q-lo 0.5 --q-hi 1.0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("q,", 0) == 0);
  CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 6);

  // single-point sweep row matches a scenario audit of the same dist
  const RunResult one =
      run_cli("sweep --kind markov_sweep --steps 1 --q-lo 1.0 --q-hi 1.0 --rho 0.9");
  CHECK(one.exit_code == 0);
  CHECK(one.output.find("\n1.000000,0.531004,0.000000,0.000000,0.531004,") !=
        std::string::npos);
}

TEST_CASE("blackwell subcommand") {
  const RunResult feas = run_cli("blackwell --kind example2 --candidate y");
  CHECK(feas.exit_code == 0);
  CHECK(feas.output.find("\"feasible\":true") != std::string::npos);

  const RunResult infeas = run_cli("blackwell --kind example1 --candidate y");
  CHECK(infeas.exit_code == 0);
  CHECK(infeas.output.find("\"feasible\":false") != std::string::npos);

  CHECK(run_cli("blackwell --candidate y").exit_code == 5);
}
