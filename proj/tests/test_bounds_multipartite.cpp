#include <doctest.h>

#include <random>

#include "concbound/bounds_multipartite.hpp"
#include "concbound/generators.hpp"
#include "concbound/optimizer.hpp"
#include "oracles.hpp"

using namespace concbound;

namespace {

DensityMatrix ghz_p(double p) { return white_noise_mix(DensityMatrix(ghz_state()), p); }
DensityMatrix w_p(double p) { return white_noise_mix(DensityMatrix(w_state()), p); }

TripleAssignments unit_triple() {
  TripleAssignments a;
  a.emplace(SubsetSelector({0}, 1), TripleCoefficients::ones(1));
  return a;
}

double example_obs2(ExampleFamily family, const DensityMatrix& rho) {
  return observation2_bound(rho, example_generator_triple(family), 1, unit_triple()).bound_on_c_squared;
}

OptimizerConfig light_config() {
  OptimizerConfig cfg;
  cfg.restarts = 3;
  cfg.iterations = 40;
  return cfg;
}

std::vector<Complex> random_coefficients(int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0, 1);
  std::vector<Complex> u;
  for (int s = 0; s < k; ++s) u.push_back(std::polar(unit(rng), 2 * M_PI * unit(rng)));
  return u;
}

}  // namespace

TEST_CASE("TripleCoefficients") {
  CHECK_THROWS_AS(TripleCoefficients({Complex(1)}, {Complex(1)}, {Complex(1), Complex(0)}), Error);
  CHECK_THROWS_AS(TripleCoefficients({Complex(1)}, {Complex(1.5)}, {Complex(1)}), Error);
  const TripleCoefficients x({Complex(0.1), Complex(0.2)}, {Complex(0.3), Complex(0.4)}, {Complex(0.5), Complex(0.6)});
  CHECK(TripleCoefficients::from_flat(x.flat()).w() == x.w());
  CHECK(x.flat().size() == 6);
}

TEST_CASE("ctau_pure") {
  CHECK(ctau_pure(ghz_state()) == doctest::Approx(std::sqrt(1.5)));
  CHECK(ctau_pure(product_state({0, 0, 0}, {2, 2, 2})) == doctest::Approx(0));
  CHECK(ctau_pure(w_state()) == doctest::Approx(2 / std::sqrt(3.0)));
  try {
    ctau_pure(bell_state());
    FAIL("expected WrongArity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongArity);
  }
}

TEST_CASE("pure-state identity for C_tau^2, 300 states") {
  double worst_oracle = 0, worst_splits = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const PureState psi = random_pure({2, 2, 2}, seed);
    const double c2 = std::pow(ctau_pure(psi), 2);
    worst_oracle = std::max(worst_oracle, std::abs(c2 - (3 - oracle::qubit_purity_sum(psi.amplitudes()))));
    double half_sum = 0;
    for (const auto& split : tripartite_splits()) half_sum += 0.5 * std::pow(concurrence_pure(psi, split), 2);
    worst_splits = std::max(worst_splits, std::abs(c2 - half_sum));
  }
  CHECK(worst_oracle < 1e-9);
  CHECK(worst_splits < 1e-9);
}

TEST_CASE("delta_tot_k") {
  const auto ghz_ops = example_generator_triple(ExampleFamily::Ghz);
  const auto w_ops = example_generator_triple(ExampleFamily::W);
  const SubsetSelector t0({0}, 1);
  CHECK(delta_tot_k(maximally_mixed({2, 2, 2}), ghz_ops, t0, TripleCoefficients::ones(1)) == 0.0);
  CHECK(delta_tot_k(ghz_p(1), ghz_ops, t0, TripleCoefficients::ones(1)) == doctest::Approx(3));
  CHECK(delta_tot_k(w_p(1), w_ops, t0, TripleCoefficients::ones(1)) == doctest::Approx(2));
  SUBCASE("I/8 vanishes for canonical triples and any coefficients") {
    const auto canon = tripartite_generator_triple(2);
    std::mt19937_64 rng(1);
    for (const auto& t : all_subsets(6, 2)) {
      const auto x = TripleCoefficients::from_flat(random_coefficients(6, rng));
      CHECK(delta_tot_k(maximally_mixed({2, 2, 2}), canon, t, x) == 0.0);
    }
  }
  CHECK_THROWS_AS(delta_tot_k(ghz_p(1), ghz_ops, t0, TripleCoefficients::ones(2)), Error);
}

TEST_CASE("observation2_bound, example operators") {
  SUBCASE("GHZ closed form") {
    for (double p : {0.25, 0.3, 0.5, 0.75, 0.8, 1.0}) {
      CHECK(std::abs(example_obs2(ExampleFamily::Ghz, ghz_p(p)) - oracle::ghz_curve(p)) <= 1e-9);
    }
    CHECK(example_obs2(ExampleFamily::Ghz, ghz_p(0.2)) <= 1e-12);
    CHECK(example_obs2(ExampleFamily::Ghz, ghz_p(0.5)) == doctest::Approx(0.2109375));
    CHECK(std::abs(example_obs2(ExampleFamily::Ghz, ghz_p(1)) - std::pow(ctau_pure(ghz_state()), 2)) <= 1e-12);
  }
  SUBCASE("W closed form") {
    for (double p : {0.18, 0.2, 0.3, 0.5, 0.75, 1.0}) {
      CHECK(std::abs(example_obs2(ExampleFamily::W, w_p(p)) - oracle::w_curve(p)) <= 1e-9);
    }
    CHECK(example_obs2(ExampleFamily::W, w_p(0.1)) == 0.0);
  }
  SUBCASE("prefactor is 1/6 for the one-member example family") {
    const auto r = observation2_bound(ghz_p(1), example_generator_triple(ExampleFamily::Ghz), 1, unit_triple());
    CHECK(r.prefactor == doctest::Approx(1.0 / 6));
    CHECK(r.n_generators == 1);
  }
  SUBCASE("BadK") {
    try {
      observation2_bound(ghz_p(1), example_generator_triple(ExampleFamily::Ghz), 2, {});
      FAIL("expected BadK");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadK);
    }
  }
}

TEST_CASE("observation3_bound is half the sum of three Observation 1 aggregates") {
  const auto gens = tripartite_generator_triple(2);
  const DensityMatrix rho = random_density({2, 2, 2}, 2, 31);
  std::mt19937_64 rng(4);
  for (int k : {1, 2}) {
    SplitAssignments a;
    for (auto& per_split : a)
      for (const auto& t : all_subsets(6, k)) per_split.emplace(t, CoefficientVector(random_coefficients(k, rng)));
    const BoundReport r = observation3_bound(rho, gens, k, a);
    double expect = 0;
    for (std::size_t s = 0; s < 3; ++s) expect += observation1_bound(rho, gens[s], k, a[s]).bound_on_c_squared;
    CHECK(r.bound_on_c_squared == doctest::Approx(0.5 * expect).epsilon(1e-12));
    CHECK(std::abs(r.recompute() - r.bound_on_c_squared) <= 1e-12);
    CHECK(r.per_subset.size() == 3 * all_subsets(6, k).size());
  }
  CHECK(observation3_bound(maximally_mixed({2, 2, 2}), gens, 1, {}).bound_on_c_squared == 0.0);
}

TEST_CASE("optimized Observation 2 and 3 are sound on pure states") {
  const OptimizerConfig cfg = light_config();
  double worst2 = -1, worst3 = -1, worst_ex = -1;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PureState psi = random_pure({2, 2, 2}, 200 + seed);
    const DensityMatrix rho(psi);
    const double c2 = std::pow(ctau_pure(psi), 2);
    worst2 = std::max(worst2, optimize_bound_multipartite(rho, 1, cfg, TripartiteOperators::Canonical).bound_on_c_squared - c2);
    worst3 = std::max(worst3, optimize_observation3(rho, 1, cfg).bound_on_c_squared - c2);
    for (auto family : {ExampleFamily::Ghz, ExampleFamily::W}) worst_ex = std::max(worst_ex, example_obs2(family, rho) - c2);
  }
  CHECK(worst2 <= 1e-6);
  CHECK(worst3 <= 1e-6);
  CHECK(worst_ex <= 1e-6);
  CHECK(optimize_observation3(ghz_p(1), 1, OptimizerConfig{}).bound_on_c_squared <= 1.5 + 1e-8);
}

TEST_CASE("fully separable mixtures give a zero Observation 2 bound") {
  const OptimizerConfig cfg = light_config();
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const DensityMatrix rho = random_separable({2, 2, 2}, 1 + static_cast<int>(seed % 6), 600 + seed);
    worst = std::max(worst, optimize_bound_multipartite(rho, 1, cfg, TripartiteOperators::Canonical).bound_on_c_squared);
    worst = std::max(worst, optimize_observation3(rho, 1, cfg).bound_on_c_squared);
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("W at p = 0.2: joint bound detects, bipartition-wise bound vanishes") {
  const DensityMatrix rho = w_p(0.2);
  CHECK(example_obs2(ExampleFamily::W, rho) > 1e-4);
  CHECK(optimize_observation3(rho, 1, OptimizerConfig{}).bound_on_c_squared <= 1e-8);
  CHECK(optimize_observation3(rho, 2, light_config()).bound_on_c_squared <= 1e-8);
}
