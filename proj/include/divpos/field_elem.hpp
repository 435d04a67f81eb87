#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "divpos/rational.hpp"

namespace divpos {

// Element a + b*sqrt(d) of the rationals or of one real quadratic extension
// Q(sqrt(d)), ordered by its real value under the positive square root.
// Canonical form: b == 0 implies d == 0, so plain rationals embed into any
// radicand context and two elements mix iff their radicands agree.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Rational rational) : rat_(std::move(rational)) {}  // NOLINT(google-explicit-constructor)
  FieldElem(int value) : rat_(value) {}                        // NOLINT(google-explicit-constructor)
  FieldElem(Rational rational_part, Rational radical_part, Int radicand);

  // Exact square root of a nonnegative rational, realized as r*sqrt(d) with
  // d squarefree (rational output when the value is a square).
  static FieldElem sqrt_of(const Rational& value);

  const Rational& rational_part() const { return rat_; }
  const Rational& radical_part() const { return rad_; }
  const Int& radicand() const { return d_; }
  bool is_rational() const { return rad_ == 0; }
  bool is_zero() const { return rat_ == 0 && rad_ == 0; }

  // Exact sign of the real value: opposite-sign parts are decided by
  // comparing a^2 against d*b^2, never by root extraction.
  int sign() const;

  // Double image; sanity cross-checks only, the exact path is authoritative.
  double approx() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& other);
  FieldElem& operator-=(const FieldElem& other);
  FieldElem& operator*=(const FieldElem& other);
  FieldElem& operator/=(const FieldElem& other);

  friend FieldElem operator+(FieldElem lhs, const FieldElem& rhs) { return lhs += rhs; }
  friend FieldElem operator-(FieldElem lhs, const FieldElem& rhs) { return lhs -= rhs; }
  friend FieldElem operator*(FieldElem lhs, const FieldElem& rhs) { return lhs *= rhs; }
  friend FieldElem operator/(FieldElem lhs, const FieldElem& rhs) { return lhs /= rhs; }

  friend bool operator==(const FieldElem& lhs, const FieldElem& rhs) {
    return lhs.rat_ == rhs.rat_ && lhs.rad_ == rhs.rad_ && lhs.d_ == rhs.d_;
  }
  friend bool operator!=(const FieldElem& lhs, const FieldElem& rhs) { return !(lhs == rhs); }
  friend bool operator<(const FieldElem& lhs, const FieldElem& rhs) { return (lhs - rhs).sign() < 0; }
  friend bool operator>(const FieldElem& lhs, const FieldElem& rhs) { return (lhs - rhs).sign() > 0; }
  friend bool operator<=(const FieldElem& lhs, const FieldElem& rhs) { return (lhs - rhs).sign() <= 0; }
  friend bool operator>=(const FieldElem& lhs, const FieldElem& rhs) { return (lhs - rhs).sign() >= 0; }

  // Canonical text form: "p/q" when rational, otherwise
  // "p/q + r/s*sqrt(d)" (the rational part is always written, the sign of
  // the radical part becomes the middle operator). Parse accepts the same
  // shapes with arbitrary spacing, bare "sqrt(d)" included.
  std::string str() const;
  static FieldElem parse(std::string_view text);

 private:
  // Shared radicand of two operands, joining rationals into either context.
  static Int join_radicand(const FieldElem& x, const FieldElem& y);
  void canonicalize();

  Rational rat_ = 0;
  Rational rad_ = 0;
  Int d_ = 0;  // 0 iff the element is rational
};

FieldElem abs(const FieldElem& x);

// (rational_part, radical_part); the element is rational iff .second == 0.
std::pair<Rational, Rational> rational_decompose(const FieldElem& x);

// Floor of the exact real value, via integer square roots.
Int floor_int(const FieldElem& x);

// Rational q with |q - x| < slack, taken from the continued-fraction
// expansion of x: the first convergent p_k/q_k with |q_k*x - p_k| < slack.
// Rational x is returned unchanged.
Rational continued_fraction_approx(const FieldElem& x, const FieldElem& slack);

}  // namespace divpos
