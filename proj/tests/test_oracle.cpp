#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ga/io.hpp"
#include "ga/oracle.hpp"
#include "ga/plucker.hpp"

using namespace ga;

namespace {

Multivector mv(const char* text, int n) { return parse_multivector(text, n); }

}  // namespace

TEST_CASE("blade_oracle: worked examples") {
  CHECK(!blade_oracle(mv("e123 + e456", 6), 3));
  CHECK(blade_oracle(mv("e123", 3), 3));
  CHECK(blade_oracle(mv("e125 + e234 + 2e124 + e235 + e123 + e245", 5), 3));
  CHECK_THROWS_AS(blade_oracle(Multivector(3), 1), std::invalid_argument);
  CHECK_THROWS_AS(blade_oracle(mv("1 + e12", 4), 2), std::invalid_argument);
}

TEST_CASE("random_vector: contract and determinism") {
  SplitMix64 a(42);
  const Multivector v = random_vector(6, a);
  CHECK(!v.is_zero());
  CHECK(v.is_homogeneous(1));
  CHECK(v.dimension() == 6);

  SplitMix64 b(42);
  CHECK(random_vector(6, b) == v);

  SplitMix64 c(43);
  CHECK(random_vector(6, c) != v);
}

TEST_CASE("random_blade: blades by construction") {
  SplitMix64 rng(1);
  const Multivector two_blade = random_blade(4, 2, rng);
  CHECK(wedge_square(two_blade).is_zero());

  const Multivector top = random_blade(5, 5, rng);
  CHECK(top.terms().size() == 1);
  CHECK(top.terms().begin()->first.grade() == 5);

  const Multivector b63 = random_blade(6, 3, rng);
  CHECK(blade_oracle(b63, 3));
}

TEST_CASE("random_rvector: contract and determinism") {
  SplitMix64 a(9);
  const Multivector b = random_rvector(6, 3, a);
  CHECK(!b.is_zero());
  CHECK(b.is_homogeneous(3));
  CHECK(b.dimension() == 6);

  SplitMix64 c(9);
  CHECK(random_rvector(6, 3, c) == b);
}

TEST_CASE("trial streams are independent of evaluation order") {
  SplitMix64 t5 = trial_rng(1234, 5);
  const Multivector from_t5 = random_blade(5, 2, t5);
  // Recreating the stream later yields the same draw regardless of what
  // other trials consumed.
  SplitMix64 t0 = trial_rng(1234, 0);
  random_blade(5, 2, t0);
  SplitMix64 t5_again = trial_rng(1234, 5);
  CHECK(random_blade(5, 2, t5_again) == from_t5);
}

TEST_CASE("run_equivalence_trials: theorems hold on seeded sweeps") {
  const TrialReport r63 = run_equivalence_trials({6, 3, 100, 1, 10});
  CHECK(r63.trials_run == 100);
  CHECK(r63.instances == 200);
  CHECK(r63.all_agree());
  CHECK(!r63.first_disagreement.has_value());
  CHECK(r63.quad_checks == 0);

  const TrialReport r42 = run_equivalence_trials({4, 2, 150, 7, 10});
  CHECK(r42.all_agree());
  CHECK(r42.quad_checks == r42.instances);

  // n = r: every instance is a pseudoscalar multiple, hence a blade.
  const TrialReport r33 = run_equivalence_trials({3, 3, 10, 0, 10});
  CHECK(r33.all_agree());
  CHECK(r33.agreements == 10);
}

TEST_CASE("run_equivalence_trials: reports are deterministic") {
  const TrialConfig cfg{5, 3, 25, 99, 8};
  const TrialReport a = run_equivalence_trials(cfg);
  const TrialReport b = run_equivalence_trials(cfg);
  CHECK(a.trials_run == b.trials_run);
  CHECK(a.instances == b.instances);
  CHECK(a.agreements == b.agreements);
  CHECK(a.quad_checks == b.quad_checks);
  CHECK(a.first_disagreement.has_value() == b.first_disagreement.has_value());
}

TEST_CASE("run_equivalence_trials: config validation") {
  CHECK_THROWS_AS(run_equivalence_trials({0, 1, 10, 0, 10}), std::invalid_argument);
  CHECK_THROWS_AS(run_equivalence_trials({4, 5, 10, 0, 10}), std::invalid_argument);
  CHECK_THROWS_AS(run_equivalence_trials({13, 2, 10, 0, 10}), std::invalid_argument);
  CHECK_THROWS_AS(run_equivalence_trials({4, 2, 0, 0, 10}), std::invalid_argument);
  CHECK_THROWS_AS(run_equivalence_trials({4, 2, 10, 0, 0}), std::invalid_argument);
}

TEST_CASE("oracle agrees with generators across seeds") {
  for (std::uint64_t seed : {2ULL, 3ULL, 5ULL, 8ULL}) {
    SplitMix64 rng(seed);
    const Multivector blade = random_blade(6, 3, rng, 6);
    CHECK(blade_oracle(blade, 3));
  }
}
