#include <doctest.h>

#include <cmath>
#include <random>

#include "pidfair/dist.hpp"
#include "pidfair/scenarios.hpp"

using namespace pidfair;

namespace {

Eigen::ArrayXd vec(std::initializer_list<double> v) {
  Eigen::ArrayXd out(static_cast<long>(v.size()));
  long i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

JointDist independent_uniform_triple() {
  return JointDist(Alphabet({"0", "1"}), Alphabet({"0", "1"}), Alphabet({"0", "1"}),
                   Eigen::ArrayXd::Constant(8, 0.125));
}

}  // namespace

TEST_CASE("alphabet ordering and validation") {
  Alphabet a({"b", "a", "c"});
  CHECK(a.label(0) == "a");
  CHECK(a.index("c") == 2);
  CHECK_THROWS_AS(Alphabet({"x", "x"}), ValidationError);
  CHECK_THROWS_AS(Alphabet({}), ValidationError);
  CHECK_THROWS_AS(a.index("missing"), ValidationError);
}

TEST_CASE("joint dist validation") {
  Alphabet b({"0", "1"});
  CHECK_THROWS_AS(JointDist(b, b, b, Eigen::ArrayXd::Constant(7, 0.125)), ValidationError);
  CHECK_THROWS_AS(JointDist(b, b, b, Eigen::ArrayXd::Constant(8, 0.2)), ValidationError);
  Eigen::ArrayXd neg = Eigen::ArrayXd::Constant(8, 0.125);
  neg[0] = -0.125;
  neg[1] = 0.375;
  CHECK_THROWS_AS(JointDist(b, b, b, neg), ValidationError);
}

TEST_CASE("entropy closed forms") {
  CHECK(entropy_bits(vec({0.5, 0.5})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entropy_bits(vec({1.0, 0.0})) == 0.0);
  // closed form -0.9 log2 0.9 - 0.1 log2 0.1
  const double expected = -0.9 * std::log2(0.9) - 0.1 * std::log2(0.1);
  CHECK(expected == doctest::Approx(0.4690).epsilon(1e-4));
  CHECK(entropy_bits(vec({0.9, 0.1})) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("from_samples exact counts") {
  // one record per cell of a 2x2x1 space
  std::vector<SampleRecord> recs = {
      {"0", "0", "y"}, {"0", "1", "y"}, {"1", "0", "y"}, {"1", "1", "y"}};
  const JointDist d = from_samples(recs, 0.0);
  CHECK(d.size(Var::Label) == 1);
  for (int z = 0; z < 2; ++z)
    for (int a = 0; a < 2; ++a) CHECK(d(z, a, 0) == doctest::Approx(0.25));
}

TEST_CASE("from_samples pure prior") {
  Alphabet b({"0", "1"});
  const JointDist d = from_samples({}, 1.0, b, b, b);
  for (int i = 0; i < 8; ++i) CHECK(d.probs()[i] == doctest::Approx(0.125));
}

TEST_CASE("from_samples errors") {
  CHECK_THROWS_AS(from_samples({}, 0.0), EstimationError);
  CHECK_THROWS_AS(from_samples({{"", "1", "1"}}, 0.0), EstimationError);
}

TEST_CASE("from_samples integer multiplicities reproduce exact rationals") {
  std::vector<SampleRecord> recs;
  // multiplicities 1..8 over the 2x2x2 cells, n = 36
  int mult = 0;
  for (const char* z : {"0", "1"})
    for (const char* a : {"0", "1"})
      for (const char* y : {"0", "1"}) {
        ++mult;
        for (int k = 0; k < mult; ++k) recs.push_back({z, a, y});
      }
  const JointDist d = from_samples(recs, 0.0);
  mult = 0;
  for (int z = 0; z < 2; ++z)
    for (int a = 0; a < 2; ++a)
      for (int y = 0; y < 2; ++y) {
        ++mult;
        CHECK(d(z, a, y) == doctest::Approx(mult / 36.0).epsilon(1e-15));
      }
}

TEST_CASE("from_samples monte carlo matches the generating joint") {
  const JointDist truth = generate_scenario({ScenarioKind::Example2});
  std::mt19937_64 rng(20240613);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<SampleRecord> recs;
  for (int n = 0; n < 1000; ++n) {
    double u = unif(rng);
    for (int z = 0; z < 2 && u >= 0.0; ++z)
      for (int a = 0; a < 2 && u >= 0.0; ++a)
        for (int y = 0; y < 2 && u >= 0.0; ++y) {
          u -= truth(z, a, y);
          if (u < 0.0)
            recs.push_back({std::to_string(z), std::to_string(a), std::to_string(y)});
        }
  }
  REQUIRE(recs.size() == 1000);
  const JointDist est = from_samples(recs, 0.0);
  // the support of Example 2 has four cells, sample labels cover both
  // symbols per axis with rho = 0.9
  REQUIRE(est.probs().size() == 8);
  for (int z = 0; z < 2; ++z)
    for (int a = 0; a < 2; ++a)
      for (int y = 0; y < 2; ++y)
        CHECK(std::abs(est(z, a, y) - truth(z, a, y)) < 0.05);
}

TEST_CASE("marginals") {
  const JointDist u = independent_uniform_triple();
  const Eigen::VectorXd mz = marginal(u, Var::Z);
  CHECK(mz[0] == doctest::Approx(0.5));
  CHECK(mz[1] == doctest::Approx(0.5));

  const JointDist e1 = generate_scenario({ScenarioKind::Example1});
  const Eigen::MatrixXd za = marginal(e1, Var::Z, Var::Pred);
  CHECK(za(0, 0) == doctest::Approx(0.5));
  CHECK(za(1, 1) == doctest::Approx(0.5));
  CHECK(za(0, 1) == doctest::Approx(0.0));
  CHECK(za(1, 0) == doctest::Approx(0.0));

  // random joint against a direct summation oracle
  std::mt19937_64 rng(7);
  const JointDist r = random_joint(rng, 3, 2, 4);
  const Eigen::MatrixXd zy = marginal(r, Var::Z, Var::Label);
  for (int z = 0; z < 3; ++z)
    for (int y = 0; y < 4; ++y) {
      double s = 0.0;
      for (int a = 0; a < 2; ++a) s += r(z, a, y);
      CHECK(zy(z, y) == doctest::Approx(s).epsilon(1e-14));
    }
  CHECK(zy.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mutual information on the canonical examples") {
  CHECK(mutual_information(generate_scenario({ScenarioKind::Example1}), Var::Z,
                           Var::Pred) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mutual_information(generate_scenario({ScenarioKind::Example3}), Var::Z,
                           Var::Pred) == doctest::Approx(0.0));
  const double hb9 = -0.9 * std::log2(0.9) - 0.1 * std::log2(0.1);
  CHECK(mutual_information(generate_scenario({ScenarioKind::Example2}), Var::Z,
                           Var::Pred) == doctest::Approx(1.0 - hb9).epsilon(1e-3));
}

TEST_CASE("conditional mutual information") {
  CHECK(conditional_mutual_information(generate_scenario({ScenarioKind::Example3}),
                                       Var::Z, Var::Pred, Var::Label) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(conditional_mutual_information(independent_uniform_triple(), Var::Z,
                                       Var::Pred, Var::Label) == 0.0);
  CHECK(conditional_mutual_information(generate_scenario({ScenarioKind::Example4}),
                                       Var::Z, Var::Label, Var::Pred) ==
        doctest::Approx(0.5310).epsilon(1e-3));
  CHECK_THROWS_AS(
      conditional_mutual_information(independent_uniform_triple(), Var::Z, Var::Z, Var::Label),
      ValidationError);
}

TEST_CASE("joint mutual information") {
  CHECK(joint_mutual_information(generate_scenario({ScenarioKind::Example1})) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(joint_mutual_information(independent_uniform_triple()) == 0.0);
  CHECK(joint_mutual_information(generate_scenario({ScenarioKind::Motivational})) ==
        doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("chain rule holds in both orders on random joints") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int nz = 2 + static_cast<int>(rng() % 3);
    const int na = 2 + static_cast<int>(rng() % 3);
    const int nb = 2 + static_cast<int>(rng() % 3);
    const JointDist d = random_joint(rng, nz, na, nb);
    const double total = joint_mutual_information(d);
    const double via_pred = mutual_information(d, Var::Z, Var::Pred) +
                            conditional_mutual_information(d, Var::Z, Var::Label, Var::Pred);
    const double via_label = mutual_information(d, Var::Z, Var::Label) +
                             conditional_mutual_information(d, Var::Z, Var::Pred, Var::Label);
    CHECK(std::abs(total - via_pred) < 1e-10);
    CHECK(std::abs(total - via_label) < 1e-10);
    CHECK(total >= 0.0);
  }
}

TEST_CASE("data processing: prediction from label alone cannot add information") {
  std::mt19937_64 rng(99);
  std::exponential_distribution<double> exp1(1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int nz = 2, nb = 3, na = 2;
    // random P(z, y), then yhat = f(y) deterministic
    Eigen::MatrixXd zy(nz, nb);
    for (int z = 0; z < nz; ++z)
      for (int y = 0; y < nb; ++y) zy(z, y) = exp1(rng);
    zy /= zy.sum();
    std::vector<int> f(nb);
    for (int y = 0; y < nb; ++y) f[y] = static_cast<int>(rng() % na);
    Eigen::ArrayXd p = Eigen::ArrayXd::Zero(nz * na * nb);
    for (int z = 0; z < nz; ++z)
      for (int y = 0; y < nb; ++y) p[(z * na + f[y]) * nb + y] = zy(z, y);
    const JointDist d(Alphabet({"0", "1"}), Alphabet({"0", "1"}),
                      Alphabet({"0", "1", "2"}), p);
    CHECK(mutual_information(d, Var::Z, Var::Pred) <=
          mutual_information(d, Var::Z, Var::Label) + 1e-10);
  }
}

TEST_CASE("information quantities stay nonnegative on random joints") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 1000; ++trial) {
    const JointDist d = random_joint(rng, 2, 2, 2);
    CHECK(entropy_bits(d.probs()) >= 0.0);
    CHECK(mutual_information(d, Var::Z, Var::Pred) >= 0.0);
    CHECK(conditional_mutual_information(d, Var::Z, Var::Pred, Var::Label) >= 0.0);
  }
}
