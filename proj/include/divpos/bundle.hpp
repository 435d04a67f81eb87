#pragma once

#include <vector>

#include "divpos/rational.hpp"

namespace divpos {

// Smooth projective base curve. Only the genus, the characteristic and
// whether the ground field is the algebraic closure of a finite field enter
// any computation; deg(omega) = 2g - 2 is always derived.
struct Curve {
  int genus = 0;
  Int characteristic = 0;  // prime, or 0
  bool over_fpbar = false;

  void validate() const;
  Int canonical_degree() const { return Int(2) * genus - 2; }
};

// Bundle given as a direct sum of line bundles, one integer degree per
// summand. The summand order is preserved as constructed; derived bundles
// (sym_power, tensor) come out sorted by descending degree.
class SplitBundle {
 public:
  explicit SplitBundle(std::vector<Int> degrees);
  SplitBundle(std::initializer_list<int> degrees);

  const std::vector<Int>& degrees() const { return degrees_; }
  int rank() const { return static_cast<int>(degrees_.size()); }
  Int degree() const;
  Rational slope() const { return Rational(degree(), rank()); }

  bool same_summands(const SplitBundle& other) const;  // multiset equality

 private:
  std::vector<Int> degrees_;
};

struct HNPiece {
  int rank = 1;
  Rational degree;

  Rational slope() const { return degree / rank; }
};

// Strong Harder-Narasimhan data: graded pieces with strictly decreasing
// slopes. Rational degrees are allowed (they become integral after a cover);
// the constructor rejects anything out of order.
class HNProfile {
 public:
  explicit HNProfile(std::vector<HNPiece> pieces);

  const std::vector<HNPiece>& pieces() const { return pieces_; }
  int total_rank() const;
  Rational total_degree() const;

  bool operator==(const HNProfile& other) const;

 private:
  std::vector<HNPiece> pieces_;
};

// Groups equal-degree summands into pieces, sorted by descending slope.
HNProfile hn_profile(const SplitBundle& e);

Rational mu_max(const HNProfile& p);
Rational mu_min(const HNProfile& p);

// Degrees of Sym^m: all sums of m-element multisets drawn from the summand
// degrees. Rank of the result is C(r+m-1, m); oversized requests are
// rejected rather than exhausting memory.
SplitBundle sym_power(const SplitBundle& e, int m);

// All pairwise degree sums.
SplitBundle tensor(const SplitBundle& e, const SplitBundle& g);

// Pullback along a degree-n cover: every piece degree scales by n.
HNProfile pullback_cover(const HNProfile& p, int n);

// Pullback along the m-th Frobenius: degrees scale by char^m.
HNProfile frobenius_pullback(const HNProfile& p, int m, const Curve& c);

// Minimal m >= 0 with char^m * (mu_{i+1} - mu_i) + (2g - 2) < 0 for every
// adjacent pair of pieces; 0 for a single piece.
int splitting_frobenius_power(const HNProfile& p, const Curve& c);

// h^0 over a genus-0 base: sum of max(d_i + 1, 0). Caller guarantees the
// base has genus 0; this is the brute-force oracle, not cohomology.
Int h0_genus0(const SplitBundle& e);

// Hypothesis predicate of the vanishing lemma: every piece of p has degree
// < 0 and g has degree <= 0.
bool sym_vanishing_holds(const HNProfile& p, const HNPiece& g);

}  // namespace divpos
