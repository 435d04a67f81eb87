#pragma once

#include <optional>

#include "divpos/chow.hpp"

namespace divpos {

// Data certifying an effective presentation of lambda*Theta + b*F:
// D ~ lambda*(Theta - f^* xi) + lambda * f^* B with deg(B) >= 0 and a summand
// of nonnegative twisted degree carrying the section.
struct EffectivityWitness {
  Rational xi_degree;     // degree of the maximal-slope summand
  FieldElem b_degree;     // deg(B), B = xi - A
  int section_slot = 0;   // index of a summand with nonnegative twisted degree
  Int m = 1;              // positive integer clearing all denominators
};

// Why the Q-effectivity verdict is absent, when it is.
enum class QEffUndecided {
  none,              // q_effective is present
  irrational_input,  // R-coefficients: witnesses route through rationalization
  base_field,        // base curve not over the closure of a finite field
};

struct PositivityReport {
  bool nef = false;
  bool pseudoeffective = false;
  bool big = false;
  bool ample = false;
  std::optional<bool> q_effective;
  QEffUndecided undecided = QEffUndecided::none;
  std::optional<EffectivityWitness> witness;
  Rational mu_max_threshold;
  Rational mu_min_threshold;
};

// Full positivity classification of a divisor class on P(E).
PositivityReport classify(const DivClass& d, const HNProfile& e, const Curve& c);

// Split-bundle entry point; the witness slot indexes the given summand list.
PositivityReport classify(const DivClass& d, const SplitBundle& e, const Curve& c);

// Degree criterion for divisors on the base curve itself; only valid over
// the algebraic closure of a finite field.
bool curve_divisor_q_effective(const FieldElem& deg_a, const Curve& c);

struct NakaiCertificate {
  bool ample = false;
  FieldElem d_squared;
};

// Rank-2 ampleness via the self-intersection: requires a strictly nef
// rational class and certifies (D.D) > 0.
NakaiCertificate is_ample_rank2_nakai(const DivClass& d, const SplitBundle& e, const Curve& c);

// Verdicts are invariant under pullback along a degree-n cover of the base.
bool pullback_invariance_check(const DivClass& d, const HNProfile& e, int n, const Curve& c);

}  // namespace divpos
