#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "divpos/field_elem.hpp"

namespace divpos {

// Diagonal lattice of signature (1, rho-1): one positive anchor direction
// e_1 with (e_1.e_1) = anchor_square and negatives (e_i.e_i) = -lambda_i.
struct NSLattice {
  int rho = 3;
  Int anchor_square = 2;
  std::vector<Int> negatives;  // lambda_2 .. lambda_rho, all positive

  void validate() const;
};

struct NSClass {
  std::vector<FieldElem> coords;

  bool is_zero() const;
};

FieldElem pairing(const NSLattice& lat, const NSClass& x, const NSClass& y);

// Positive-cone membership: (x.x) >= 0 and (x.e_1) >= 0.
bool nef_membership(const NSLattice& lat, const NSClass& x);

// Whether some positive multiple of x has all-rational coordinates.
bool ray_is_rational(const NSClass& x);

// Supporting functional H = (d . -) of a boundary class d: nonnegative on
// the cone, vanishing exactly on the ray of d.
class SupportFunctional {
 public:
  SupportFunctional(NSLattice lat, NSClass direction)
      : lat_(std::move(lat)), direction_(std::move(direction)) {}

  FieldElem operator()(const NSClass& x) const { return pairing(lat_, direction_, x); }
  const NSClass& direction() const { return direction_; }

 private:
  NSLattice lat_;
  NSClass direction_;
};

SupportFunctional support_functional(const NSLattice& lat, const NSClass& d);

struct ConeCertificate {
  bool nef = false;
  bool boundary = false;
  bool ray_rational = true;

  bool all_pass() const { return nef && boundary && !ray_rational; }
};

struct Counterexample {
  NSClass cls;
  Int radicand;  // the squarefree d realizing the irrational coordinate
  ConeCertificate certificate;
};

// Boundary class D = e_1 + t e_2 + a_3 e_3 (zero-padded beyond rho = 3) with
// (D.D) = 0 and an irrational ray: a_3 = sqrt((anchor - lambda_2 t^2)/lambda_3).
// DegenerateChoice when t is out of range or the radicand is a rational square.
Counterexample build_counterexample(const NSLattice& lat, const Rational& t);

// Outcome of refuting a claimed effective decomposition sum c_i Gamma_i = d.
struct Refutation {
  enum class Step {
    zero_sum,           // no nonzero summands, d != 0
    sum_mismatch,       // the combination does not even sum to d
    ray_rationality,    // forced onto ray(d), contradicting its irrationality
  };
  Step step = Step::zero_sum;
  std::size_t index = 0;  // coordinate (sum_mismatch) or gamma index (ray step)
  std::string detail;
};

// Checks that rational cone classes can never sum (with positive weights)
// to a certified counterexample class, reporting where the attempt breaks.
Refutation effective_decomposition_refuter(const NSLattice& lat, const NSClass& d,
                                           std::span<const NSClass> gammas,
                                           std::span<const FieldElem> weights);

}  // namespace divpos
