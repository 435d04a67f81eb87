#include "divpos/rational.hpp"

#include <cctype>

namespace divpos {

Rational make_rational(Int num, Int den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  return Rational(std::move(num), std::move(den));
}

Int floor_int(const Rational& x) {
  Int q = numerator(x) / denominator(x);  // truncates toward zero
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

Int ceil_int(const Rational& x) { return -floor_int(-x); }

namespace {

struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool eat(char c) {
    if (peek() == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError,
         msg + " at position " + std::to_string(pos) + " in \"" + std::string(s) + "\"");
  }

  Int digits() {
    if (done() || !std::isdigit(static_cast<unsigned char>(s[pos]))) error("expected digits");
    Int value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      value = value * 10 + (s[pos] - '0');
      ++pos;
    }
    return value;
  }

  // [sign] digits [ '/' digits ]
  Rational rational() {
    skip_ws();
    int sgn = 1;
    if (eat('-')) sgn = -1;
    else eat('+');
    skip_ws();
    Int num = digits();
    Int den = 1;
    if (eat('/')) {
      den = digits();
      if (den == 0) error("zero denominator");
    }
    return make_rational(sgn * num, den);
  }
};

}  // namespace

Rational parse_rational(std::string_view text) {
  Scanner sc{text};
  Rational r = sc.rational();
  sc.skip_ws();
  if (!sc.done()) sc.error("trailing characters");
  return r;
}

std::string emit_rational(const Rational& x) {
  std::string out = numerator(x).str();
  if (denominator(x) != 1) {
    out += '/';
    out += denominator(x).str();
  }
  return out;
}

std::string emit_int(const Int& x) { return x.str(); }

}  // namespace divpos
