#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "ga/blade.hpp"
#include "ga/rational.hpp"

namespace ga {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Sparse exact multivector of the Euclidean geometric algebra G_n:
/// an association from coordinate blades to nonzero rational coefficients,
/// tagged with the ambient dimension n. Values are immutable once built;
/// all operations are pure functions.
class Multivector {
 public:
  using TermMap = std::map<BladeIndex, Rational, BladeLexLess>;

  /// The zero multivector of G_n.
  explicit Multivector(int dimension);

  static Multivector scalar(int dimension, Rational value);
  static Multivector blade(int dimension, BladeIndex j, Rational coeff = Rational(1));
  /// Grade-1 element with the given coordinates (size must equal dimension).
  static Multivector vector(int dimension, const std::vector<Rational>& coords);
  /// Normalizes: drops zero coefficients, validates index range.
  static Multivector from_terms(int dimension, TermMap terms);

  int dimension() const { return dimension_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Stored coefficient at j, 0 if absent. Equals the scalar part of
  /// b * reverse(e_j), which the tests cross-validate.
  Rational coefficient(BladeIndex j) const;

  /// The set of grades with a nonzero component; empty for zero.
  std::set<int> grades() const;
  /// True when every term has grade k. The zero multivector is homogeneous
  /// of every grade by convention.
  bool is_homogeneous(int k) const;
  /// The unique grade when the value is nonzero and homogeneous.
  std::optional<int> single_grade() const;

  Multivector operator-() const;

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

 private:
  int dimension_;
  TermMap terms_;
};

Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator*(const Rational& c, const Multivector& a);
Multivector operator*(const Multivector& a, const Rational& c);

/// The Clifford product, bilinear over basis_product. Exact.
Multivector geometric_product(const Multivector& a, const Multivector& b);

/// Outer (wedge) product: the grade-(s+t) part of the geometric product of
/// homogeneous arguments, extended bilinearly.
Multivector outer_product(const Multivector& a, const Multivector& b);

/// Left contraction (the dot A.B of grade(A) <= grade(B)): the grade-(t-s)
/// part of the geometric product, extended bilinearly; zero when s > t.
Multivector left_contraction(const Multivector& a, const Multivector& b);

/// Grade-k terms scaled by (-1)^(k(k-1)/2).
Multivector reverse(const Multivector& a);

/// Retains exactly the grade-k terms.
Multivector grade_project(const Multivector& a, int k);

}  // namespace ga
