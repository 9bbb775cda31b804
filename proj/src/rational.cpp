#include "ga/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ga {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
  // mpq_class accepts more than we want ("0x.."); restrict to decimal digits, '-', '/'.
  for (char c : text) {
    if (c == '-' || c == '/' || (c >= '0' && c <= '9')) continue;
    throw std::invalid_argument("Rational::parse: bad character in '" + text + "'");
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
  }
  if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.q_))); }

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.q_; }

}  // namespace ga
