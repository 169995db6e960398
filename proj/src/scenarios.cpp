#include "pidfair/scenarios.hpp"

#include <cmath>
#include <map>

namespace pidfair {

namespace {

Alphabet binary() { return Alphabet({"0", "1"}); }

JointDist binary_joint(const std::vector<double>& cells) {
  Eigen::ArrayXd p(8);
  for (int i = 0; i < 8; ++i) p[i] = cells[i];
  return JointDist(binary(), binary(), binary(), std::move(p));
}

void require_prob(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw SpecError(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

ScenarioKind parse_scenario_kind(const std::string& name) {
  static const std::map<std::string, ScenarioKind> kinds = {
      {"example1", ScenarioKind::Example1},   {"example2", ScenarioKind::Example2},
      {"example3", ScenarioKind::Example3},   {"example4", ScenarioKind::Example4},
      {"motivational", ScenarioKind::Motivational},
      {"markov_sweep", ScenarioKind::MarkovSweep},
      {"sp_zero_family", ScenarioKind::SpZeroFamily},
  };
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw SpecError("unknown scenario kind: " + name);
  return it->second;
}

std::string scenario_kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Example1: return "example1";
    case ScenarioKind::Example2: return "example2";
    case ScenarioKind::Example3: return "example3";
    case ScenarioKind::Example4: return "example4";
    case ScenarioKind::Motivational: return "motivational";
    case ScenarioKind::MarkovSweep: return "markov_sweep";
    default: return "sp_zero_family";
  }
}

JointDist generate_scenario(const ScenarioSpec& spec) {
  require_prob(spec.rho, "rho");
  switch (spec.kind) {
    case ScenarioKind::Example1: {
      // Yhat = Z, Y uniform independent of Z
      std::vector<double> p(8, 0.0);
      for (int z = 0; z < 2; ++z)
        for (int y = 0; y < 2; ++y) p[(z * 2 + z) * 2 + y] = 0.25;
      return binary_joint(p);
    }
    case ScenarioKind::Example2: {
      // Yhat = Y, P(Y = Z) = rho
      std::vector<double> p(8, 0.0);
      for (int z = 0; z < 2; ++z)
        for (int y = 0; y < 2; ++y)
          p[(z * 2 + y) * 2 + y] = 0.5 * (y == z ? spec.rho : 1.0 - spec.rho);
      return binary_joint(p);
    }
    case ScenarioKind::Example3: {
      // Yhat = Z XNOR Y, Z and Y independent uniform
      std::vector<double> p(8, 0.0);
      for (int z = 0; z < 2; ++z)
        for (int y = 0; y < 2; ++y) {
          const int yhat = (z == y) ? 1 : 0;
          p[(z * 2 + yhat) * 2 + y] = 0.25;
        }
      return binary_joint(p);
    }
    case ScenarioKind::Example4: {
      // P(Y = Z) = rho, Yhat uniform independent of (Z, Y)
      std::vector<double> p(8, 0.0);
      for (int z = 0; z < 2; ++z)
        for (int yhat = 0; yhat < 2; ++yhat)
          for (int y = 0; y < 2; ++y)
            p[(z * 2 + yhat) * 2 + y] = 0.25 * (y == z ? spec.rho : 1.0 - spec.rho);
      return binary_joint(p);
    }
    case ScenarioKind::Motivational: {
      // Z = (Z1,Z2,Z3) uniform on 8 values, N uniform independent,
      // A = (Z1, Z2, Z3 xor N), B = (Z2, N)
      std::vector<std::string> bits3, bits2;
      for (int i = 0; i < 8; ++i)
        bits3.push_back({char('0' + ((i >> 2) & 1)), char('0' + ((i >> 1) & 1)),
                         char('0' + (i & 1))});
      for (int i = 0; i < 4; ++i)
        bits2.push_back({char('0' + ((i >> 1) & 1)), char('0' + (i & 1))});
      Eigen::ArrayXd p = Eigen::ArrayXd::Zero(8 * 8 * 4);
      for (int z = 0; z < 8; ++z) {
        const int z1 = (z >> 2) & 1, z2 = (z >> 1) & 1, z3 = z & 1;
        for (int n = 0; n < 2; ++n) {
          const int a = (z1 << 2) | (z2 << 1) | (z3 ^ n);
          const int b = (z2 << 1) | n;
          p[(z * 8 + a) * 4 + b] += 1.0 / 16.0;
        }
      }
      return JointDist(Alphabet(bits3), Alphabet(bits3), Alphabet(bits2), std::move(p));
    }
    default:
      throw SpecError("scenario kind '" + scenario_kind_name(spec.kind) +
                      "' is a sweep; use generate_sweep");
  }
}

JointDist markov_chain_dist(double rho, double q) {
  require_prob(rho, "rho");
  require_prob(q, "q");
  std::vector<double> p(8, 0.0);
  for (int z = 0; z < 2; ++z)
    for (int y = 0; y < 2; ++y)
      for (int yhat = 0; yhat < 2; ++yhat)
        p[(z * 2 + yhat) * 2 + y] = 0.5 * (y == z ? rho : 1.0 - rho) *
                                    (yhat == y ? q : 1.0 - q);
  return binary_joint(p);
}

std::vector<SweepPoint> generate_sweep(const ScenarioSpec& spec) {
  std::vector<SweepPoint> out;
  switch (spec.kind) {
    case ScenarioKind::MarkovSweep: {
      require_prob(spec.rho, "rho");
      require_prob(spec.q_lo, "q_lo");
      require_prob(spec.q_hi, "q_hi");
      if (spec.steps < 1) throw SpecError("sweep needs at least one step");
      for (int k = 0; k < spec.steps; ++k) {
        const double q = spec.steps == 1
                             ? spec.q_lo
                             : spec.q_lo + (spec.q_hi - spec.q_lo) * k / (spec.steps - 1);
        out.push_back({q, markov_chain_dist(spec.rho, q)});
      }
      return out;
    }
    case ScenarioKind::SpZeroFamily: {
      if (spec.count < 1) throw SpecError("family needs at least one sample");
      std::mt19937_64 rng(spec.seed);
      for (int k = 0; k < spec.count; ++k)
        out.push_back({static_cast<double>(k), random_sp_zero_joint(rng)});
      return out;
    }
    default:
      throw SpecError("scenario kind '" + scenario_kind_name(spec.kind) +
                      "' is not a sweep; use generate_scenario");
  }
}

JointDist random_joint(std::mt19937_64& rng, int nz, int na, int nb) {
  std::exponential_distribution<double> exp1(1.0);
  auto label = [](int i) { return std::to_string(i); };
  std::vector<std::string> zl, al, bl;
  for (int i = 0; i < nz; ++i) zl.push_back(label(i));
  for (int i = 0; i < na; ++i) al.push_back(label(i));
  for (int i = 0; i < nb; ++i) bl.push_back(label(i));
  Eigen::ArrayXd p(static_cast<long>(nz) * na * nb);
  for (long i = 0; i < p.size(); ++i) p[i] = exp1(rng);
  p /= p.sum();
  return JointDist(Alphabet(zl), Alphabet(al), Alphabet(bl), std::move(p));
}

JointDist random_sp_zero_joint(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  const double pz = unif(rng), pyhat = unif(rng);
  Eigen::ArrayXd p(8);
  for (int z = 0; z < 2; ++z)
    for (int yhat = 0; yhat < 2; ++yhat) {
      const double cond = unif(rng);  // P(Y=0 | z, yhat)
      const double mass = (z == 0 ? pz : 1.0 - pz) * (yhat == 0 ? pyhat : 1.0 - pyhat);
      p[(z * 2 + yhat) * 2 + 0] = mass * cond;
      p[(z * 2 + yhat) * 2 + 1] = mass * (1.0 - cond);
    }
  p /= p.sum();
  JointDist dist(binary(), binary(), binary(), std::move(p));
  // the product form makes Z and Yhat independent; keep the filter as
  // the contract
  if (mutual_information(dist, Var::Z, Var::Pred) >= 1e-8)
    throw SpecError("sp-zero sample failed its independence filter");
  return dist;
}

}  // namespace pidfair
