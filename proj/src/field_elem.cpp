#include "divpos/field_elem.hpp"

#include <cctype>
#include <cmath>

namespace divpos {

namespace {

bool is_squarefree(const Int& d) {
  if (d < 2) return false;
  Int n = d;
  for (Int f = 2; f * f <= n; ++f) {
    int count = 0;
    while (n % f == 0) {
      n /= f;
      if (++count > 1) return false;
    }
  }
  return true;
}

// n = s^2 * d with d squarefree; returns (s, d). n > 0.
std::pair<Int, Int> split_square_part(Int n) {
  Int s = 1, d = 1;
  for (Int f = 2; f * f <= n; ++f) {
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= f;
    if (e % 2 == 1) d *= f;
  }
  d *= n;  // leftover prime
  return {s, d};
}

}  // namespace

FieldElem::FieldElem(Rational rational_part, Rational radical_part, Int radicand)
    : rat_(std::move(rational_part)), rad_(std::move(radical_part)), d_(std::move(radicand)) {
  if (d_ != 0 && !is_squarefree(d_)) {
    fail(ErrorCode::PreconditionViolated,
         "radicand must be squarefree and >= 2, got " + d_.str());
  }
  if (rad_ != 0 && d_ == 0) {
    fail(ErrorCode::PreconditionViolated, "radical part without a radicand");
  }
  canonicalize();
}

void FieldElem::canonicalize() {
  if (rad_ == 0) d_ = 0;
}

FieldElem FieldElem::sqrt_of(const Rational& value) {
  if (value < 0) {
    fail(ErrorCode::DegenerateChoice, "square root of negative rational " + emit_rational(value));
  }
  if (value == 0) return FieldElem(0);
  // sqrt(n/m) = sqrt(n*m)/m, then pull the square part out of n*m.
  const Int n = numerator(value), m = denominator(value);
  auto [s, d] = split_square_part(n * m);
  if (d == 1) return FieldElem(Rational(s, m));
  return FieldElem(0, Rational(s, m), d);
}

Int FieldElem::join_radicand(const FieldElem& x, const FieldElem& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0) return x.d_;
  if (x.d_ != y.d_) {
    fail(ErrorCode::MixedRadicand,
         "mixed radicands sqrt(" + x.d_.str() + ") and sqrt(" + y.d_.str() + ")");
  }
  return x.d_;
}

int FieldElem::sign() const {
  const int sa = sign_of(rat_);
  const int sb = sign_of(rad_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|sqrt(d) decided by a^2 vs d*b^2. Equality is
  // impossible for squarefree d >= 2 unless both parts vanish.
  const Rational lhs = rat_ * rat_;
  const Rational rhs = Rational(d_) * rad_ * rad_;
  if (lhs == rhs) fail(ErrorCode::Internal, "a^2 == d*b^2 for nonzero parts");
  return lhs > rhs ? sa : sb;
}

double FieldElem::approx() const {
  return static_cast<double>(rat_) + static_cast<double>(rad_) * std::sqrt(static_cast<double>(d_));
}

FieldElem FieldElem::operator-() const {
  FieldElem out = *this;
  out.rat_ = -out.rat_;
  out.rad_ = -out.rad_;
  return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& other) {
  d_ = join_radicand(*this, other);
  rat_ += other.rat_;
  rad_ += other.rad_;
  canonicalize();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& other) {
  d_ = join_radicand(*this, other);
  rat_ -= other.rat_;
  rad_ -= other.rad_;
  canonicalize();
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& other) {
  const Int d = join_radicand(*this, other);
  Rational rat = rat_ * other.rat_ + Rational(d) * rad_ * other.rad_;
  Rational rad = rat_ * other.rad_ + rad_ * other.rat_;
  rat_ = std::move(rat);
  rad_ = std::move(rad);
  d_ = d;
  canonicalize();
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& other) {
  if (other.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero field element");
  const Int d = join_radicand(*this, other);
  // Multiply by the conjugate; the norm a^2 - d*b^2 vanishes only at zero.
  const Rational norm = other.rat_ * other.rat_ - Rational(d) * other.rad_ * other.rad_;
  if (norm == 0) fail(ErrorCode::Internal, "zero norm for nonzero divisor");
  FieldElem conj = other;
  conj.rad_ = -conj.rad_;
  conj.d_ = d;
  *this *= conj;
  rat_ /= norm;
  rad_ /= norm;
  canonicalize();
  return *this;
}

std::string FieldElem::str() const {
  if (is_rational()) return emit_rational(rat_);
  std::string out = emit_rational(rat_);
  out += rad_ > 0 ? " + " : " - ";
  const Rational mag = rad_ > 0 ? rad_ : Rational(-rad_);
  out += emit_rational(mag);
  out += "*sqrt(";
  out += d_.str();
  out += ')';
  return out;
}

namespace {

struct ElemScanner {
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
  bool eat_word(std::string_view w) {
    if (s.substr(pos, w.size()) == w) { pos += w.size(); return true; }
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

  Rational unsigned_rational() {
    Int num = digits();
    Int den = 1;
    if (eat('/')) {
      den = digits();
      if (den == 0) error("zero denominator");
    }
    return make_rational(std::move(num), std::move(den));
  }

  Int sqrt_radicand() {
    if (!eat('(')) error("expected '(' after sqrt");
    skip_ws();
    Int d = digits();
    skip_ws();
    if (!eat(')')) error("expected ')'");
    return d;
  }

  // term := 'sqrt' '(' int ')' | rat [ '*' 'sqrt' '(' int ')' ]
  // Returns the value with sign applied; is_radical reports the syntactic
  // form (a zero radical coefficient still counts as a sqrt term).
  FieldElem term(int sgn, bool& is_radical) {
    skip_ws();
    if (eat_word("sqrt")) {
      is_radical = true;
      return FieldElem(0, sgn, sqrt_radicand());
    }
    Rational coeff = unsigned_rational();
    skip_ws();
    if (eat('*')) {
      skip_ws();
      if (!eat_word("sqrt")) error("expected sqrt after '*'");
      is_radical = true;
      const Rational scaled = sgn * coeff;
      return scaled == 0 ? FieldElem(0, 0, sqrt_radicand()) : FieldElem(0, scaled, sqrt_radicand());
    }
    is_radical = false;
    return FieldElem(sgn * coeff);
  }
};

}  // namespace

FieldElem FieldElem::parse(std::string_view text) {
  ElemScanner sc{text};
  sc.skip_ws();
  int sgn = 1;
  if (sc.eat('-')) sgn = -1;
  else sc.eat('+');
  bool first_radical = false;
  FieldElem result = sc.term(sgn, first_radical);
  sc.skip_ws();
  if (!sc.done()) {
    int sgn2;
    if (sc.eat('+')) sgn2 = 1;
    else if (sc.eat('-')) sgn2 = -1;
    else sc.error("expected '+' or '-'");
    bool second_radical = false;
    const FieldElem second = sc.term(sgn2, second_radical);
    if (first_radical || !second_radical) {
      sc.error("expected the rational part first, then one sqrt term");
    }
    result += second;
    sc.skip_ws();
  }
  if (!sc.done()) sc.error("trailing characters");
  return result;
}

FieldElem abs(const FieldElem& x) { return x.sign() < 0 ? -x : x; }

std::pair<Rational, Rational> rational_decompose(const FieldElem& x) {
  return {x.rational_part(), x.radical_part()};
}

Int floor_int(const FieldElem& x) {
  if (x.is_rational()) return floor_int(x.rational_part());
  // x = (u + v*sqrt(d)) / w with integers u, v, w > 0. For v != 0 and
  // squarefree d the value u + v*sqrt(d) lies strictly inside a unit
  // interval with integer endpoints, so the floor divides out exactly.
  const Rational& a = x.rational_part();
  const Rational& b = x.radical_part();
  const Int w = lcm(denominator(a), denominator(b));
  const Int u = numerator(a) * (w / denominator(a));
  const Int v = numerator(b) * (w / denominator(b));
  const Int square = v * v * x.radicand();
  const Int root = sqrt(square);  // floor of |v|*sqrt(d)
  const Int low = v > 0 ? Int(u + root) : Int(u - root - 1);
  // floor(y/w) for y in the open interval (low, low+1)
  Int q = low / w;
  if (low < 0 && q * w != low) --q;
  return q;
}

Rational continued_fraction_approx(const FieldElem& x, const FieldElem& slack) {
  if (slack.sign() <= 0) fail(ErrorCode::PreconditionViolated, "slack must be positive");
  if (x.is_rational()) return x.rational_part();
  Int p_prev = 1, p_prev2 = 0;  // h_{-1}, h_{-2}
  Int q_prev = 0, q_prev2 = 1;  // k_{-1}, k_{-2}
  FieldElem y = x;
  for (;;) {
    const Int a = floor_int(y);
    const Int p = a * p_prev + p_prev2;
    const Int q = a * q_prev + q_prev2;
    // |q*x - p| shrinks strictly along convergents, so this terminates.
    if (abs(FieldElem(Rational(q)) * x - FieldElem(Rational(p))) < slack) {
      return Rational(p, q);
    }
    p_prev2 = p_prev; p_prev = p;
    q_prev2 = q_prev; q_prev = q;
    y = FieldElem(1) / (y - FieldElem(Rational(a)));
  }
}

}  // namespace divpos
