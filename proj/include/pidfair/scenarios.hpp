#ifndef PIDFAIR_SCENARIOS_HPP
#define PIDFAIR_SCENARIOS_HPP

#include <random>
#include <vector>

#include "pidfair/dist.hpp"

namespace pidfair {

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ScenarioKind {
  Example1,      // Yhat = Z, Y independent of Z, everything uniform
  Example2,      // Yhat = Y, P(Y = Z) = rho
  Example3,      // Yhat = Z XNOR Y, Z and Y independent uniform
  Example4,      // P(Y = Z) = rho, Yhat independent uniform
  Motivational,  // the 8x8x4 three-bit construction
  MarkovSweep,   // Z -> Y -> Yhat, P(Y=Z) = rho, channel agreement q swept
  SpZeroFamily,  // random joints with I(Z;Yhat) = 0
};

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::Example1;
  double rho = 0.9;    // label correlation P(Y = Z)
  double q_lo = 0.5;   // sweep range of the Y -> Yhat agreement probability
  double q_hi = 1.0;
  int steps = 11;      // sweep point count
  int count = 50;      // family sample count
  std::uint64_t seed = 1;
};

ScenarioKind parse_scenario_kind(const std::string& name);
std::string scenario_kind_name(ScenarioKind kind);

// Exact analytic joint for the non-sweep kinds.
JointDist generate_scenario(const ScenarioSpec& spec);

// Z -> Y -> Yhat with P(Y = Z) = rho and P(Yhat = Y) = q.
JointDist markov_chain_dist(double rho, double q);

struct SweepPoint {
  double param;  // q for MarkovSweep, sample index for SpZeroFamily
  JointDist dist;
};

std::vector<SweepPoint> generate_sweep(const ScenarioSpec& spec);

// Random dense joint with exponential cell weights, for property tests.
JointDist random_joint(std::mt19937_64& rng, int nz, int na, int nb);

// Random joint of the form P(z) P(yhat) P(y | z, yhat), which has
// I(Z; Yhat) = 0 by construction; the caller-visible contract is the
// rejection filter |I(Z;Yhat)| < 1e-8.
JointDist random_sp_zero_joint(std::mt19937_64& rng);

}  // namespace pidfair

#endif
