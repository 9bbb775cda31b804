#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ga/io.hpp"
#include "ga/linalg.hpp"
#include "ga/oracle.hpp"
#include "ga/plucker.hpp"

using namespace ga;

namespace {

Multivector mv(const char* text, int n) { return parse_multivector(text, n); }

BladeIndex idx(std::initializer_list<int> indices) {
  return BladeIndex::from_indices(std::vector<int>(indices));
}

// Paper's worked examples.
Multivector g5_decomposable() { return mv("e125 + e234 + 2e124 + e235 + e123 + e245", 5); }
Multivector g6_nonblade() { return mv("e123 + e456", 6); }
Multivector g6_divisible() {
  return mv("e123 + e456 + e124 + e356 + e125 + e346 + e126 + e345", 6);
}

int matrix_rank_of(const std::vector<Multivector>& vectors, int n) {
  linalg::Matrix m;
  for (const Multivector& v : vectors) {
    linalg::Row row(static_cast<std::size_t>(n), Rational(0));
    for (const auto& [j, c] : v.terms()) row[static_cast<std::size_t>(j.max_index() - 1)] = c;
    m.push_back(std::move(row));
  }
  return linalg::rank(std::move(m));
}

}  // namespace

TEST_CASE("plucker_check: witnesses and passes") {
  const CheckReport fail = plucker_check(g6_nonblade(), 3);
  CHECK(!fail.passed);
  CHECK(fail.failure == CheckReport::Failure::plucker_residual);
  REQUIRE(fail.witness_k.has_value());
  CHECK(*fail.witness_k == idx({1, 2}));
  REQUIRE(fail.residual.has_value());
  CHECK(*fail.residual == mv("e3456", 6));

  CHECK(plucker_check(g5_decomposable(), 3).passed);
  CHECK(plucker_check(mv("e12", 2), 2).passed);

  CHECK_THROWS_AS(plucker_check(Multivector(4), 2), std::invalid_argument);
  CHECK_THROWS_AS(plucker_check(mv("1 + e12", 4), 2), std::invalid_argument);
}

TEST_CASE("plucker_failures enumerates every failing witness") {
  const auto failures = plucker_failures(g6_nonblade(), 3);
  CHECK(!failures.empty());
  CHECK(failures.front().witness_k == idx({1, 2}));
  for (const auto& f : failures) {
    REQUIRE(f.residual.has_value());
    CHECK(!f.residual->is_zero());
  }
  CHECK(plucker_failures(g5_decomposable(), 3).empty());
}

TEST_CASE("wedge_square") {
  CHECK(wedge_square(mv("e12 + e34", 4)) == mv("2e1234", 4));
  CHECK(wedge_square(mv("e12", 4)).is_zero());
  CHECK(wedge_square(mv("e12 + e13", 4)).is_zero());
  CHECK_THROWS_AS(wedge_square(mv("e123", 4)), std::invalid_argument);
  CHECK_THROWS_AS(wedge_square(mv("1 + e12", 4)), std::invalid_argument);
}

TEST_CASE("nguyen_check: both conditions with witnesses") {
  const CheckReport square_fail = nguyen_check(mv("e12 + e34", 4), 2);
  CHECK(!square_fail.passed);
  CHECK(square_fail.failure == CheckReport::Failure::square_not_scalar);
  REQUIRE(square_fail.residual.has_value());
  CHECK(*square_fail.residual == mv("2e1234", 4));

  const CheckReport sandwich_fail = nguyen_check(g6_nonblade(), 3);
  CHECK(!sandwich_fail.passed);
  CHECK(sandwich_fail.failure == CheckReport::Failure::sandwich_not_vector);
  REQUIRE(sandwich_fail.witness_k.has_value());
  REQUIRE(sandwich_fail.residual.has_value());
  CHECK(!sandwich_fail.residual->is_zero());
  // B^2 = -2 is scalar, so only condition (ii) can fail here.
  CHECK(square_parity(g6_nonblade()));

  CHECK(nguyen_check(mv("e123", 3), 3).passed);
  CHECK(nguyen_check(g5_decomposable(), 3).passed);
}

TEST_CASE("square_parity") {
  CHECK(square_parity(g6_nonblade()));
  CHECK(!square_parity(mv("e12 + e34", 4)));
  CHECK(square_parity(mv("e12", 4)));
  CHECK_THROWS_AS(square_parity(mv("1 + e12", 4)), std::invalid_argument);
}

TEST_CASE("parity_witness: construction yields a live witness") {
  const Multivector b = mv("e12 + e34", 4);
  const auto k = parity_witness(b, 2);
  REQUIRE(k.has_value());
  CHECK(k->grade() == 1);
  const Multivector residual = outer_product(left_contraction(Multivector::blade(4, *k), b), b);
  CHECK(!residual.is_zero());
  // K sits inside one of the terms.
  bool inside = false;
  for (const auto& [j, c] : b.terms()) inside = inside || k->subset_of(j);
  CHECK(inside);

  CHECK(!parity_witness(g6_nonblade(), 3).has_value());
  CHECK(!parity_witness(mv("e123", 3), 3).has_value());
}

TEST_CASE("span_set: contraction vectors in lexicographic K order") {
  const auto simple = span_set(mv("e12", 2), 2);
  REQUIRE(simple.size() == 2);
  CHECK(simple[0] == mv("e2", 2));   // K = {1}
  CHECK(simple[1] == mv("-e1", 2));  // K = {2}

  const auto six = span_set(g6_nonblade(), 3);
  CHECK(six.size() == 6);  // only K inside {1,2,3} or {4,5,6} contract to nonzero
  CHECK(matrix_rank_of(six, 6) == 6);

  const auto three = span_set(mv("e12 + e13", 3), 2);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == mv("e2 + e3", 3));
  CHECK(three[1] == mv("-e1", 3));
  CHECK(three[2] == mv("-e1", 3));
}

TEST_CASE("span_rank") {
  CHECK(span_rank(mv("e123", 3), 3) == 3);
  CHECK(span_rank(g6_nonblade(), 3) == 6);
  CHECK(span_rank(g5_decomposable(), 3) == 3);
}

TEST_CASE("rank_space: dimension and basis") {
  const RankSpace full = rank_space(mv("e123", 3), 3);
  CHECK(full.dimension == 3);
  CHECK(full.basis.size() == 3);

  CHECK(rank_space(g6_nonblade(), 3).dimension == 0);

  const Multivector b = mv("e12 + e13", 3);
  const RankSpace partial = rank_space(b, 2);
  CHECK(partial.dimension == 2);
  for (const Multivector& x : partial.basis) {
    CHECK(x.is_homogeneous(1));
    CHECK(outer_product(x, b).is_zero());
  }
  // The basis spans {e1, e2 + e3}: adding either must not raise the rank.
  auto with = partial.basis;
  with.push_back(mv("e1", 3));
  with.push_back(mv("e2 + e3", 3));
  CHECK(matrix_rank_of(with, 3) == 2);
}

TEST_CASE("is_divisible") {
  CHECK(is_divisible(mv("e123", 3), mv("e1", 3)));
  CHECK(!is_divisible(g6_nonblade(), mv("e1", 6)));

  const Multivector b = g6_divisible();
  const Multivector v = left_contraction(mv("e12", 6), b);
  CHECK(is_divisible(b, v));

  CHECK_THROWS_AS(is_divisible(Multivector(3), mv("e1", 3)), std::invalid_argument);
  CHECK_THROWS_AS(is_divisible(mv("e1", 3), mv("e12", 3)), std::invalid_argument);
}

TEST_CASE("divide: exact quotients, verified reconstruction") {
  CHECK(divide(mv("e123", 3), mv("e12", 3)) == mv("e3", 3));
  CHECK(divide(mv("e12 + e13", 3), mv("e1", 3)) == mv("e2 + e3", 3));
  CHECK(divide(mv("e123", 3), mv("e123", 3)) == Multivector::scalar(3, 1));
  CHECK_THROWS_AS(divide(g6_nonblade(), mv("e1", 6)), std::invalid_argument);
}

TEST_CASE("divisibility quotient property on constructed divisors") {
  SplitMix64 rng(31);
  for (int iter = 0; iter < 30; ++iter) {
    const int n = 5;
    const int k = static_cast<int>(rng.int_in(1, 2));
    const int r = static_cast<int>(rng.int_in(k + 1, 4));
    const Multivector l = random_blade(n, k, rng, 5);
    Multivector b = l;
    for (int i = k; i < r; ++i) b = outer_product(b, random_vector(n, rng, 5));
    if (b.is_zero()) continue;
    REQUIRE(is_divisible(b, l));
    CHECK(geometric_product(l, divide(b, l)) == b);
  }
}

TEST_CASE("factorize: paper example reconstructs exactly") {
  const Multivector b = g5_decomposable();
  const Factorization f = factorize(b, 3);
  REQUIRE(f.vectors.size() == 3);
  Multivector wedge = f.vectors[0];
  wedge = outer_product(wedge, f.vectors[1]);
  wedge = outer_product(wedge, f.vectors[2]);
  CHECK(f.scale * wedge == b);
  for (const Multivector& v : f.vectors) CHECK(v.is_homogeneous(1));
  CHECK(rank_space(f.scale * wedge, 3).dimension == 3);

  // The factors printed in the source example wedge to exactly B as well.
  const Multivector w1 = mv("-e1 + e2 + e3 + e4", 5);
  const Multivector w2 = mv("-2e1 + e2 + e3 - e5", 5);
  const Multivector w3 = mv("-3e1 + e2 + 2e3 + e4 - e5", 5);
  CHECK(outer_product(outer_product(w1, w2), w3) == b);
}

TEST_CASE("factorize: small pivot walk-through") {
  const Multivector b = mv("e12 + e13", 3);
  const Factorization f = factorize(b, 2);
  CHECK(f.pivot == idx({1, 2}));
  REQUIRE(f.vectors.size() == 2);
  CHECK(f.vectors[0] == mv("-e1", 3));      // e2 . B
  CHECK(f.vectors[1] == mv("e2 + e3", 3));  // e1 . B
  CHECK(f.scale == Rational(-1));
  CHECK(f.scale * outer_product(f.vectors[0], f.vectors[1]) == b);
}

TEST_CASE("factorize: rejects non-blades with the plucker witness") {
  try {
    factorize(g6_nonblade(), 3);
    FAIL("expected NotABladeError");
  } catch (const NotABladeError& e) {
    REQUIRE(e.report.witness_k.has_value());
    CHECK(*e.report.witness_k == idx({1, 2}));
    REQUIRE(e.report.residual.has_value());
    CHECK(*e.report.residual == mv("e3456", 6));
  }
}

TEST_CASE("factorize: grade edges r = 1 and r = n") {
  const Multivector v = mv("3e1 - 2e2", 2);
  const Factorization f1 = factorize(v, 1);
  CHECK(f1.scale == Rational(1));
  REQUIRE(f1.vectors.size() == 1);
  CHECK(f1.vectors[0] == v);

  const Multivector top = mv("-5e1234", 4);
  const Factorization fn = factorize(top, 4);
  REQUIRE(fn.vectors.size() == 4);
  Multivector wedge = fn.vectors[0];
  for (std::size_t i = 1; i < 4; ++i) wedge = outer_product(wedge, fn.vectors[i]);
  CHECK(fn.scale * wedge == top);
}

TEST_CASE("blade_vb_identity_residual") {
  CHECK(blade_vb_identity_residual(mv("e123", 3), 3).is_zero());
  CHECK(blade_vb_identity_residual(g5_decomposable(), 3).is_zero());
  CHECK(!blade_vb_identity_residual(g6_nonblade(), 3).is_zero());
}

TEST_CASE("paper's divisible-but-not-decomposable example") {
  const Multivector b = g6_divisible();
  CHECK(square_parity(b));
  CHECK(outer_product(left_contraction(mv("e21", 6), b), b).is_zero());
  CHECK(outer_product(left_contraction(mv("e13", 6), b), b) ==
        mv("e2456 + e2356 + e2346 + e2345", 6));
  CHECK(!plucker_check(b, 3).passed);
  CHECK(!nguyen_check(b, 3).passed);
  CHECK(!blade_oracle(b, 3));
}

TEST_CASE("criterion equivalence on structured families") {
  SplitMix64 rng(37);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = static_cast<int>(rng.int_in(3, 6));
    const int r = static_cast<int>(rng.int_in(2, n));
    const Multivector blade = random_blade(n, r, rng, 5);
    CHECK(plucker_check(blade, r).passed);
    CHECK(nguyen_check(blade, r).passed);
    CHECK(span_rank(blade, r) == r);
    CHECK(rank_space(blade, r).dimension == r);
    CHECK(blade_oracle(blade, r));

    const Factorization f = factorize(blade, r);
    Multivector wedge = f.vectors.front();
    for (std::size_t i = 1; i < f.vectors.size(); ++i) wedge = outer_product(wedge, f.vectors[i]);
    CHECK(f.scale * wedge == blade);

    const Multivector candidate = random_rvector(n, r, rng, 5);
    const bool verdict = blade_oracle(candidate, r);
    CHECK(plucker_check(candidate, r).passed == verdict);
    CHECK(nguyen_check(candidate, r).passed == verdict);
    CHECK((span_rank(candidate, r) == r) == verdict);
    CHECK((rank_space(candidate, r).dimension == r) == verdict);
  }
}

TEST_CASE("parity necessity and insufficiency") {
  SplitMix64 rng(41);
  int parity_failures = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const Multivector b = random_rvector(4, 2, rng, 5);
    if (square_parity(b)) continue;
    ++parity_failures;
    CHECK(!plucker_check(b, 2).passed);
    const auto k = parity_witness(b, 2);
    REQUIRE(k.has_value());
    const Multivector residual =
        outer_product(left_contraction(Multivector::blade(4, *k), b), b);
    CHECK(!residual.is_zero());
  }
  CHECK(parity_failures > 0);

  // square_parity alone is not sufficient: the G_6 example squares to a
  // scalar yet is not a 3-blade.
  CHECK(square_parity(g6_nonblade()));
  CHECK(!plucker_check(g6_nonblade(), 3).passed);
}

TEST_CASE("Lemma 2 bounds r <= span_rank <= n") {
  SplitMix64 rng(43);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = static_cast<int>(rng.int_in(2, 6));
    const int r = static_cast<int>(rng.int_in(1, n));
    const Multivector b =
        rng.coin() ? random_blade(n, r, rng, 5) : random_rvector(n, r, rng, 5);
    const int rank = span_rank(b, r);
    CHECK(r <= rank);
    CHECK(rank <= n);
  }
}

TEST_CASE("blade identity residual vanishes exactly on plucker passes") {
  SplitMix64 rng(47);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = static_cast<int>(rng.int_in(3, 6));
    const int r = static_cast<int>(rng.int_in(2, n));
    const Multivector b =
        rng.coin() ? random_blade(n, r, rng, 5) : random_rvector(n, r, rng, 5);
    if (plucker_check(b, r).passed) {
      CHECK(blade_vb_identity_residual(b, r).is_zero());
    }
  }
}

TEST_CASE("r = 2, n = 4 quadratic relation matches the criteria") {
  SplitMix64 rng(53);
  auto coeff = [](const Multivector& b, int i, int j) {
    return b.coefficient(BladeIndex::unit(i).with(j));
  };
  for (int iter = 0; iter < 80; ++iter) {
    const Multivector b =
        rng.coin() ? random_blade(4, 2, rng, 6) : random_rvector(4, 2, rng, 6);
    const Rational quad = coeff(b, 1, 2) * coeff(b, 3, 4) -
                          coeff(b, 1, 3) * coeff(b, 2, 4) +
                          coeff(b, 1, 4) * coeff(b, 2, 3);
    const bool pass = plucker_check(b, 2).passed;
    CHECK(pass == quad.is_zero());
    CHECK(pass == wedge_square(b).is_zero());
  }
}
