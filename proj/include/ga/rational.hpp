#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace ga {

/// Exact arbitrary-precision rational scalar.
///
/// Always kept reduced with a positive denominator; zero is uniquely 0/1.
/// Backed by GMP, which maintains exactly this canonical form.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, `coeff == 2` reads naturally
  Rational(long num, long den);

  /// Parses "7", "-7", "3/2", "-3/2". Throws std::invalid_argument on anything else.
  static Rational parse(const std::string& text);

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  /// Canonical text form: "3/2", "-7", "0".
  std::string str() const { return q_.get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  friend Rational abs(const Rational& a);
  friend std::ostream& operator<<(std::ostream& os, const Rational& a);

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

}  // namespace ga
