#include <doctest.h>

#include <cmath>

#include "pidfair/fairness.hpp"
#include "pidfair/scenarios.hpp"

using namespace pidfair;

TEST_CASE("scenario kind parsing") {
  CHECK(parse_scenario_kind("example3") == ScenarioKind::Example3);
  CHECK(parse_scenario_kind("markov_sweep") == ScenarioKind::MarkovSweep);
  CHECK_THROWS_AS(parse_scenario_kind("nope"), SpecError);
  CHECK(scenario_kind_name(ScenarioKind::Motivational) == "motivational");
}

TEST_CASE("example 3 support") {
  const JointDist d = generate_scenario({ScenarioKind::Example3});
  int support = 0;
  for (int z = 0; z < 2; ++z)
    for (int a = 0; a < 2; ++a)
      for (int y = 0; y < 2; ++y) {
        if (d(z, a, y) > 0.0) {
          ++support;
          CHECK(d(z, a, y) == doctest::Approx(0.25));
          CHECK(a == ((z == y) ? 1 : 0));  // yhat = z xnor y
        }
      }
  CHECK(support == 4);
}

TEST_CASE("scenario parameter validation") {
  ScenarioSpec bad;
  bad.kind = ScenarioKind::Example2;
  bad.rho = 1.5;
  CHECK_THROWS_AS(generate_scenario(bad), SpecError);
  CHECK_THROWS_AS(generate_scenario({ScenarioKind::MarkovSweep}), SpecError);
  CHECK_THROWS_AS(generate_sweep({ScenarioKind::Example1}), SpecError);
}

TEST_CASE("motivational construction") {
  const JointDist d = generate_scenario({ScenarioKind::Motivational});
  CHECK(d.size(Var::Z) == 8);
  CHECK(d.size(Var::Pred) == 8);
  CHECK(d.size(Var::Label) == 4);
  CHECK(joint_mutual_information(d) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(mutual_information(d, Var::Z, Var::Pred) ==
        doctest::Approx(2.0).epsilon(1e-10));  // Z1, Z2 visible in A
  CHECK(mutual_information(d, Var::Z, Var::Label) ==
        doctest::Approx(1.0).epsilon(1e-10));  // Z2 visible in B
}

TEST_CASE("markov sweep endpoints") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::MarkovSweep;
  spec.steps = 3;
  const auto pts = generate_sweep(spec);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].param == doctest::Approx(0.5));
  CHECK(pts[1].param == doctest::Approx(0.75));
  CHECK(pts[2].param == doctest::Approx(1.0));

  // q = 0.5 decouples the prediction entirely; q = 1 copies the label
  const FairnessGaps g_lo = compute_gaps(pts[0].dist);
  const FairnessGaps g_hi = compute_gaps(pts[2].dist);
  CHECK(g_lo.sp_gap == doctest::Approx(0.0));
  CHECK(g_hi.sp_gap == doctest::Approx(g_hi.dataset_mi).epsilon(1e-12));

  double prev = -1.0;
  for (const auto& pt : pts) {
    const FairnessGaps g = compute_gaps(pt.dist);
    CHECK(g.sp_gap >= prev - 1e-12);  // monotone in the agreement q
    prev = g.sp_gap;
    CHECK(std::abs(g.sp_gap + g.pp_gap - g.dataset_mi) < 1e-9);
  }
}

TEST_CASE("sp zero family is seeded and reproducible") {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::SpZeroFamily;
  spec.count = 5;
  spec.seed = 123;
  const auto a = generate_sweep(spec);
  const auto b = generate_sweep(spec);
  REQUIRE(a.size() == 5);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK((a[i].dist.probs() - b[i].dist.probs()).abs().maxCoeff() == 0.0);
    CHECK(mutual_information(a[i].dist, Var::Z, Var::Pred) < 1e-8);
  }
}
