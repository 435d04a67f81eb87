#pragma once

#include <cstddef>
#include <vector>

#include "divpos/field_elem.hpp"

namespace divpos {

// An effective presentation D' + a_1 (phi_1) + ... + a_r (phi_r) >= 0 over a
// common list of prime-divisor slots, coefficients given as field elements.
// The engine only ever sees the coefficient matrix, never divisors.
struct EffectivityInstance {
  std::vector<Rational> d_prime;
  std::vector<std::vector<Rational>> principals;  // one vector per (phi_j)
  std::vector<FieldElem> coeffs;                  // one a_j per principal

  // Dimensions agree, and d' + sum a_j (phi_j) >= 0 holds exactly on
  // every slot.
  void validate() const;

  // d' + sum a_j (phi_j), slot by slot.
  std::vector<FieldElem> combined() const;
};

struct NormalizedBasis {
  std::vector<FieldElem> basis;          // rational element first when the span meets Q
  std::vector<std::vector<Int>> coords;  // b_i = sum_j coords[i][j] * basis[j]
};

// Q-basis of span_Q(b) with integer coordinates for every input, the
// rational direction (when present) in first position.
NormalizedBasis normalize_basis(const std::vector<FieldElem>& b);

// Slots where the combined value vanishes exactly. On such a slot every
// entry (d' and all principals) must vanish too; a nonzero entry means the
// declared independence of {1, a_1, ...} was false.
std::vector<std::size_t> zero_row_forcing(const EffectivityInstance& inst);

// Rational replacement coefficients a'_j keeping d' + sum a'_j (phi_j) >= 0,
// found by approximating each a_j within a slack-derived tolerance and
// re-verified exactly.
std::vector<Rational> rationalize(const EffectivityInstance& inst);

enum class Relation { ge, gt };

// Row "coeffs . x  rel  bound".
struct LinearRow {
  std::vector<Rational> coeffs;
  Relation rel = Relation::ge;
  Rational bound;
};

struct LinearSystem {
  std::vector<LinearRow> rows;
};

struct Feasibility {
  bool feasible = false;
  std::vector<Rational> witness;  // one value per variable when feasible
};

// Exact Fourier-Motzkin elimination; strict rows carry their strictness
// through every combination step symbolically.
Feasibility fm_feasible(const LinearSystem& sys);

}  // namespace divpos
