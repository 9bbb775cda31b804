#include "ga/io.hpp"

#include <cctype>
#include <optional>
#include <tuple>
#include <vector>

namespace ga {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  Multivector run() {
    Multivector::TermMap acc;
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool negative = take_sign().value_or(false);
    while (true) {
      parse_term(negative, acc);
      skip_ws();
      if (at_end()) break;
      const auto sign = take_sign();
      if (!sign) throw ParseError("expected '+' or '-'", pos_);
      negative = *sign;
    }
    return Multivector::from_terms(n_, std::move(acc));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::optional<bool> take_sign() {
    if (at_end()) return std::nullopt;
    if (peek() == '+' || peek() == '-') {
      const bool negative = peek() == '-';
      ++pos_;
      skip_ws();
      return negative;
    }
    return std::nullopt;
  }

  std::string take_digits(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError(std::string("expected ") + what, pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  // rational := digits ['/' digits]
  Rational parse_rational() {
    const std::string num = take_digits("a number");
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t den_at = pos_;
      const std::string den = take_digits("a denominator");
      Rational d = Rational::parse(den);
      if (d.is_zero()) throw ParseError("zero denominator", den_at);
      return Rational::parse(num) / d;
    }
    return Rational::parse(num);
  }

  int parse_index(const std::string& digits, std::size_t at) {
    Rational value = Rational::parse(digits);
    if (value.is_zero() || value.denominator() != 1 || value.numerator() > n_) {
      throw ParseError("index out of range [1, " + std::to_string(n_) + "]", at);
    }
    return static_cast<int>(value.numerator().get_si());
  }

  // blade := 'e' digits | 'e{' index (',' index)* '}'
  // Returns the canonical index set and the permutation sign of sorting the
  // written order ascending.
  std::pair<BladeIndex, int> parse_blade() {
    ++pos_;  // consume 'e'
    std::vector<int> written;
    if (!at_end() && peek() == '{') {
      ++pos_;
      while (true) {
        skip_ws();
        const std::size_t at = pos_;
        written.push_back(parse_index(take_digits("an index"), at));
        skip_ws();
        if (at_end()) throw ParseError("unterminated '{'", pos_);
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == '}') {
          ++pos_;
          break;
        }
        throw ParseError("expected ',' or '}'", pos_);
      }
    } else {
      if (n_ > 9) {
        throw ParseError("compact blade notation needs n <= 9; use e{i,j,...}", pos_);
      }
      const std::size_t at = pos_;
      const std::string digits = take_digits("blade indices");
      for (std::size_t i = 0; i < digits.size(); ++i) {
        written.push_back(parse_index(digits.substr(i, 1), at + i));
      }
    }

    // Canonicalize: count inversions for the transposition sign, reject
    // repeated indices.
    int inversions = 0;
    for (std::size_t i = 0; i < written.size(); ++i) {
      for (std::size_t j = i + 1; j < written.size(); ++j) {
        if (written[i] == written[j]) {
          throw ParseError("repeated index " + std::to_string(written[i]) + " within one blade",
                           pos_);
        }
        if (written[i] > written[j]) ++inversions;
      }
    }
    BladeIndex index;
    for (int i : written) index = index.with(i);
    return {index, inversions % 2 == 0 ? 1 : -1};
  }

  void parse_term(bool negative, Multivector::TermMap& acc) {
    skip_ws();
    if (at_end()) throw ParseError("expected a term", pos_);

    std::optional<Rational> coeff;
    if (std::isdigit(static_cast<unsigned char>(peek()))) coeff = parse_rational();
    skip_ws();

    BladeIndex index;
    int perm_sign = 1;
    bool has_blade = false;
    if (!at_end() && peek() == 'e') {
      std::tie(index, perm_sign) = parse_blade();
      has_blade = true;
    }
    if (!coeff && !has_blade) throw ParseError("expected a term", pos_);

    Rational value = coeff.value_or(Rational(1));
    if (negative) value = -value;
    if (perm_sign < 0) value = -value;
    if (value.is_zero()) return;

    auto it = acc.find(index);
    if (it == acc.end()) {
      acc.emplace(index, std::move(value));
    } else {
      it->second += value;
      if (it->second.is_zero()) acc.erase(it);
    }
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Multivector parse_multivector(std::string_view text, int n) {
  if (n < 1 || n > BladeIndex::kMaxDim) {
    throw std::invalid_argument("parse_multivector: dimension must be in [1, 64]");
  }
  return Parser(text, n).run();
}

std::string format_blade(BladeIndex j, int n) {
  if (j.empty()) return "";
  std::string out = "e";
  if (n <= 9) {
    for (int i : j.indices()) out += static_cast<char>('0' + i);
    return out;
  }
  out += '{';
  bool first = true;
  for (int i : j.indices()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

std::string format_multivector(const Multivector& b) {
  if (b.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [j, c] : b.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    const std::string blade = format_blade(j, b.dimension());
    if (blade.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != Rational(1)) out += magnitude.str();
      out += blade;
    }
  }
  return out;
}

}  // namespace ga
