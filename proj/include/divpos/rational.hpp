#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "divpos/error.hpp"

namespace divpos {

// Arbitrary-precision integers and canonical fractions (gcd-reduced,
// positive denominator). The backend keeps the canonical form itself;
// everything in this project goes through these two aliases.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sign_of(const Rational& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// den == 0 is a hard error rather than backend UB.
Rational make_rational(Int num, Int den);

// Floor / ceiling toward the integers (exact).
Int floor_int(const Rational& x);
Int ceil_int(const Rational& x);

// Text form "p" or "p/q" (canonical); parse accepts optional surrounding
// whitespace and a leading sign, nothing else.
Rational parse_rational(std::string_view text);
std::string emit_rational(const Rational& x);

std::string emit_int(const Int& x);

}  // namespace divpos
