#include "ga/plucker.hpp"

#include <bit>
#include <string>

#include "ga/linalg.hpp"

namespace ga {

namespace {

// Shared precondition of every criterion: a nonzero homogeneous r-vector.
void require_rvector(const Multivector& b, int r, const char* op) {
  if (b.is_zero()) {
    throw std::invalid_argument(std::string(op) + ": zero multivector");
  }
  if (r < 0 || r > b.dimension()) {
    throw std::invalid_argument(std::string(op) + ": grade out of range");
  }
  if (!b.is_homogeneous(r)) {
    throw std::invalid_argument(std::string(op) + ": input is not homogeneous of the given grade");
  }
}

Multivector unit_blade(const Multivector& b, BladeIndex k) {
  return Multivector::blade(b.dimension(), k);
}

}  // namespace

CheckReport plucker_check(const Multivector& b, int r) {
  require_rvector(b, r, "plucker_check");
  if (r < 1) throw std::invalid_argument("plucker_check: grade must be at least 1");
  for (BladeIndex k : coordinate_blades(b.dimension(), r - 1)) {
    const Multivector residual = outer_product(left_contraction(unit_blade(b, k), b), b);
    if (!residual.is_zero()) {
      return {false, CheckReport::Failure::plucker_residual, k, residual};
    }
  }
  return CheckReport::pass();
}

std::vector<CheckReport> plucker_failures(const Multivector& b, int r) {
  require_rvector(b, r, "plucker_check");
  if (r < 1) throw std::invalid_argument("plucker_check: grade must be at least 1");
  std::vector<CheckReport> out;
  for (BladeIndex k : coordinate_blades(b.dimension(), r - 1)) {
    Multivector residual = outer_product(left_contraction(unit_blade(b, k), b), b);
    if (!residual.is_zero()) {
      out.push_back({false, CheckReport::Failure::plucker_residual, k, std::move(residual)});
    }
  }
  return out;
}

Multivector wedge_square(const Multivector& b) {
  if (!b.is_homogeneous(2)) {
    throw std::invalid_argument("wedge_square: input must be homogeneous of grade 2");
  }
  return outer_product(b, b);
}

CheckReport nguyen_check(const Multivector& b, int r) {
  require_rvector(b, r, "nguyen_check");
  const Multivector square = geometric_product(b, b);
  const Multivector nonscalar = square - grade_project(square, 0);
  if (!nonscalar.is_zero()) {
    return {false, CheckReport::Failure::square_not_scalar, std::nullopt, nonscalar};
  }
  for (BladeIndex k : coordinate_blades(b.dimension(), r - 1)) {
    const Multivector v = left_contraction(unit_blade(b, k), b);
    const Multivector bvb = geometric_product(b, geometric_product(v, b));
    const Multivector high = bvb - grade_project(bvb, 0) - grade_project(bvb, 1);
    if (!high.is_zero()) {
      return {false, CheckReport::Failure::sandwich_not_vector, k, high};
    }
  }
  return CheckReport::pass();
}

bool square_parity(const Multivector& b) {
  if (!b.single_grade() && !b.is_zero()) {
    throw std::invalid_argument("square_parity: input is not homogeneous");
  }
  const Multivector square = geometric_product(b, b);
  return square == grade_project(square, 0);
}

std::optional<BladeIndex> parity_witness(const Multivector& b, int r) {
  require_rvector(b, r, "parity_witness");
  if (square_parity(b)) return std::nullopt;

  // B^2 expands over term pairs; the cross term of (m, p) survives exactly
  // when the overlap k = |J_m & J_p| has the same parity as r. Scan those
  // pairs and pick K inside J_m with |K & J_p| <= r-2.
  std::vector<BladeIndex> support;
  support.reserve(b.terms().size());
  for (const auto& [j, c] : b.terms()) support.push_back(j);

  for (std::size_t m = 0; m < support.size(); ++m) {
    for (std::size_t p = m + 1; p < support.size(); ++p) {
      const BladeIndex jm = support[m];
      const BladeIndex jp = support[p];
      const int overlap = std::popcount(jm.mask() & jp.mask());
      if ((overlap & 1) != (r & 1)) continue;
      for (int drop : jm.indices()) {
        const BladeIndex k = jm.without(drop);
        if (std::popcount(k.mask() & jp.mask()) > r - 2) continue;
        const Multivector residual = outer_product(left_contraction(unit_blade(b, k), b), b);
        if (!residual.is_zero()) return k;
      }
    }
  }
  throw std::logic_error("parity_witness: construction yielded no witness");
}

std::vector<Multivector> span_set(const Multivector& b, int r) {
  require_rvector(b, r, "span_set");
  std::vector<Multivector> out;
  for (BladeIndex k : coordinate_blades(b.dimension(), r - 1)) {
    Multivector v = left_contraction(unit_blade(b, k), b);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

int span_rank(const Multivector& b, int r) {
  require_rvector(b, r, "span_rank");
  const int n = b.dimension();
  linalg::Matrix m;
  for (const Multivector& v : span_set(b, r)) {
    linalg::Row row(static_cast<std::size_t>(n), Rational(0));
    for (const auto& [j, c] : v.terms()) row[static_cast<std::size_t>(j.max_index() - 1)] = c;
    m.push_back(std::move(row));
  }
  return linalg::rank(std::move(m));
}

RankSpace rank_space(const Multivector& b, int r) {
  require_rvector(b, r, "rank_space");
  const int n = b.dimension();

  // One linear equation per grade-(r+1) coordinate blade J:
  //   sum_i x_i * coeff(e_i ^ B, J) = 0.
  std::vector<Multivector> wedges;
  wedges.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    wedges.push_back(outer_product(Multivector::blade(n, BladeIndex::unit(i)), b));
  }
  linalg::Matrix m;
  for (BladeIndex j : coordinate_blades(n, r + 1)) {
    linalg::Row row(static_cast<std::size_t>(n), Rational(0));
    bool nonzero = false;
    for (int i = 1; i <= n; ++i) {
      Rational c = wedges[static_cast<std::size_t>(i - 1)].coefficient(j);
      if (!c.is_zero()) nonzero = true;
      row[static_cast<std::size_t>(i - 1)] = std::move(c);
    }
    if (nonzero) m.push_back(std::move(row));
  }

  RankSpace out;
  for (const linalg::Row& x : linalg::nullspace(std::move(m), static_cast<std::size_t>(n))) {
    out.basis.push_back(Multivector::vector(n, x));
  }
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

bool is_divisible(const Multivector& b, const Multivector& k) {
  if (b.is_zero() || k.is_zero()) throw std::invalid_argument("is_divisible: zero input");
  const std::optional<int> r = b.single_grade();
  const std::optional<int> kg = k.single_grade();
  if (!r || !kg) throw std::invalid_argument("is_divisible: inputs must be homogeneous");
  if (*kg > *r) throw std::invalid_argument("is_divisible: divisor grade exceeds dividend grade");
  const Multivector product = geometric_product(k, b);
  return product == grade_project(product, *r - *kg);
}

Multivector divide(const Multivector& b, const Multivector& l) {
  if (!is_divisible(b, l)) throw std::invalid_argument("divide: not divisible");
  const Multivector square = geometric_product(l, l);
  if (!square.is_homogeneous(0)) {
    throw std::invalid_argument("divide: divisor is not a blade (square is not scalar)");
  }
  const Rational l2 = square.coefficient(BladeIndex{});
  if (l2.is_zero()) throw std::invalid_argument("divide: divisor has zero square");
  const Multivector quotient = (Rational(1) / l2) * left_contraction(l, b);
  if (geometric_product(l, quotient) != b) {
    throw std::logic_error("divide: quotient failed to reconstruct the dividend");
  }
  return quotient;
}

Factorization factorize(const Multivector& b, int r) {
  require_rvector(b, r, "factorize");
  if (r < 1) throw std::invalid_argument("factorize: grade must be at least 1");
  const int n = b.dimension();

  // Analytically forced edges: every vector is a 1-blade, every n-vector is
  // a pseudoscalar multiple.
  if (r == 1) {
    return {Rational(1), {b}, b.terms().begin()->first};
  }
  if (r != n) {
    CheckReport check = plucker_check(b, r);
    if (!check.passed) throw NotABladeError(std::move(check));
  }

  // Pivot: lexicographically first nonzero coordinate (the term map is
  // lex-ordered and zero-free). Factors are the contractions that strike
  // one pivot index each.
  const BladeIndex pivot = b.terms().begin()->first;
  std::vector<Multivector> vectors;
  vectors.reserve(static_cast<std::size_t>(r));
  for (int j : pivot.indices()) {
    vectors.push_back(left_contraction(unit_blade(b, pivot.without(j)), b));
  }

  Multivector wedge = vectors.front();
  for (std::size_t i = 1; i < vectors.size(); ++i) wedge = outer_product(wedge, vectors[i]);

  const Rational wedge_pivot = wedge.coefficient(pivot);
  if (wedge_pivot.is_zero()) {
    throw std::logic_error("factorize: pivot coefficient vanished in the reconstruction");
  }
  const Rational scale = b.coefficient(pivot) / wedge_pivot;
  if (scale * wedge != b) {
    throw std::logic_error("factorize: reconstruction check failed");
  }
  return {scale, std::move(vectors), pivot};
}

Multivector blade_vb_identity_residual(const Multivector& b, int r) {
  require_rvector(b, r, "blade_vb_identity_residual");
  const Multivector bb = left_contraction(b, b);
  const Rational sign = (r % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^(r+1)
  for (BladeIndex k : coordinate_blades(b.dimension(), r - 1)) {
    const Multivector v = left_contraction(unit_blade(b, k), b);
    const Multivector lhs = geometric_product(b, geometric_product(v, b));
    const Multivector rhs = sign * geometric_product(bb, v);
    const Multivector residual = lhs - rhs;
    if (!residual.is_zero()) return residual;
  }
  return Multivector(b.dimension());
}

}  // namespace ga
