#include "ga/multivector.hpp"

namespace ga {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > BladeIndex::kMaxDim) {
    throw std::invalid_argument("Multivector: dimension must be in [1, 64]");
  }
}

void check_same_dimension(const Multivector& a, const Multivector& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("Multivector: operands have different ambient dimensions");
  }
}

}  // namespace

Multivector::Multivector(int dimension) : dimension_(dimension) { check_dimension(dimension); }

Multivector Multivector::scalar(int dimension, Rational value) {
  return blade(dimension, BladeIndex{}, std::move(value));
}

Multivector Multivector::blade(int dimension, BladeIndex j, Rational coeff) {
  Multivector out(dimension);
  if (j.max_index() > dimension) {
    throw std::invalid_argument("Multivector: blade index exceeds dimension");
  }
  if (!coeff.is_zero()) out.terms_.emplace(j, std::move(coeff));
  return out;
}

Multivector Multivector::vector(int dimension, const std::vector<Rational>& coords) {
  if (static_cast<int>(coords.size()) != dimension) {
    throw std::invalid_argument("Multivector::vector: need exactly n coordinates");
  }
  Multivector out(dimension);
  for (int i = 1; i <= dimension; ++i) {
    const Rational& c = coords[static_cast<std::size_t>(i - 1)];
    if (!c.is_zero()) out.terms_.emplace(BladeIndex::unit(i), c);
  }
  return out;
}

Multivector Multivector::from_terms(int dimension, TermMap terms) {
  Multivector out(dimension);
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.max_index() > dimension) {
      throw std::invalid_argument("Multivector: blade index exceeds dimension");
    }
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
  out.terms_ = std::move(terms);
  return out;
}

Rational Multivector::coefficient(BladeIndex j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<int> Multivector::grades() const {
  std::set<int> out;
  for (const auto& [j, c] : terms_) out.insert(j.grade());
  return out;
}

bool Multivector::is_homogeneous(int k) const {
  for (const auto& [j, c] : terms_) {
    if (j.grade() != k) return false;
  }
  return true;
}

std::optional<int> Multivector::single_grade() const {
  auto g = grades();
  if (g.size() != 1) return std::nullopt;
  return *g.begin();
}

Multivector Multivector::operator-() const {
  Multivector out(dimension_);
  for (const auto& [j, c] : terms_) out.terms_.emplace(j, -c);
  return out;
}

namespace {

void accumulate(Multivector::TermMap& acc, BladeIndex j, Rational value) {
  auto it = acc.find(j);
  if (it == acc.end()) {
    acc.emplace(j, std::move(value));
    return;
  }
  it->second += value;
  if (it->second.is_zero()) acc.erase(it);
}

// Bilinear extension of a per-basis-blade rule. The rule returns false to
// drop the term pair, otherwise fills in (sign, result index).
template <typename Rule>
Multivector bilinear(const Multivector& a, const Multivector& b, Rule rule) {
  check_same_dimension(a, b);
  Multivector::TermMap acc;
  for (const auto& [ja, ca] : a.terms()) {
    for (const auto& [jb, cb] : b.terms()) {
      int sign = 0;
      BladeIndex j;
      if (!rule(ja, jb, sign, j)) continue;
      Rational v = ca * cb;
      if (sign < 0) v = -v;
      accumulate(acc, j, std::move(v));
    }
  }
  return Multivector::from_terms(a.dimension(), std::move(acc));
}

}  // namespace

Multivector operator+(const Multivector& a, const Multivector& b) {
  check_same_dimension(a, b);
  Multivector::TermMap acc = a.terms();
  for (const auto& [j, c] : b.terms()) accumulate(acc, j, c);
  return Multivector::from_terms(a.dimension(), std::move(acc));
}

Multivector operator-(const Multivector& a, const Multivector& b) { return a + (-b); }

Multivector operator*(const Rational& c, const Multivector& a) {
  Multivector::TermMap acc;
  if (!c.is_zero()) {
    for (const auto& [j, v] : a.terms()) acc.emplace(j, c * v);
  }
  return Multivector::from_terms(a.dimension(), std::move(acc));
}

Multivector operator*(const Multivector& a, const Rational& c) { return c * a; }

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  return bilinear(a, b, [](BladeIndex ja, BladeIndex jb, int& sign, BladeIndex& j) {
    std::tie(sign, j) = basis_product(ja, jb);
    return true;
  });
}

Multivector outer_product(const Multivector& a, const Multivector& b) {
  // Per basis blade the grade-(s+t) part of the product survives exactly
  // when the index sets are disjoint.
  return bilinear(a, b, [](BladeIndex ja, BladeIndex jb, int& sign, BladeIndex& j) {
    if ((ja.mask() & jb.mask()) != 0) return false;
    std::tie(sign, j) = basis_product(ja, jb);
    return true;
  });
}

Multivector left_contraction(const Multivector& a, const Multivector& b) {
  // Grade-(t-s) part: the left factor's indices must all annihilate, i.e.
  // ja must be a subset of jb.
  return bilinear(a, b, [](BladeIndex ja, BladeIndex jb, int& sign, BladeIndex& j) {
    if (!ja.subset_of(jb)) return false;
    std::tie(sign, j) = basis_product(ja, jb);
    return true;
  });
}

Multivector reverse(const Multivector& a) {
  Multivector::TermMap acc;
  for (const auto& [j, c] : a.terms()) {
    const int k = j.grade();
    acc.emplace(j, (k * (k - 1) / 2) % 2 == 0 ? c : -c);
  }
  return Multivector::from_terms(a.dimension(), std::move(acc));
}

Multivector grade_project(const Multivector& a, int k) {
  Multivector::TermMap acc;
  for (const auto& [j, c] : a.terms()) {
    if (j.grade() == k) acc.emplace(j, c);
  }
  return Multivector::from_terms(a.dimension(), std::move(acc));
}

}  // namespace ga
