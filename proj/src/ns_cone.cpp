#include "divpos/ns_cone.hpp"

namespace divpos {

void NSLattice::validate() const {
  if (rho < 3) fail(ErrorCode::SchemaError, "lattice rank must be at least 3");
  if (anchor_square <= 0) fail(ErrorCode::SchemaError, "anchor square must be positive");
  if (static_cast<int>(negatives.size()) != rho - 1) {
    fail(ErrorCode::SchemaError, "expected rho - 1 negative squares");
  }
  for (const Int& l : negatives) {
    if (l <= 0) fail(ErrorCode::SchemaError, "negative-direction squares must be positive integers");
  }
}

bool NSClass::is_zero() const {
  for (const FieldElem& c : coords) {
    if (!c.is_zero()) return false;
  }
  return true;
}

FieldElem pairing(const NSLattice& lat, const NSClass& x, const NSClass& y) {
  lat.validate();
  if (static_cast<int>(x.coords.size()) != lat.rho || static_cast<int>(y.coords.size()) != lat.rho) {
    fail(ErrorCode::DimensionMismatch, "class coordinates must match the lattice rank");
  }
  FieldElem out = FieldElem(Rational(lat.anchor_square)) * x.coords[0] * y.coords[0];
  for (int i = 1; i < lat.rho; ++i) {
    out -= FieldElem(Rational(lat.negatives[static_cast<std::size_t>(i - 1)])) *
           x.coords[static_cast<std::size_t>(i)] * y.coords[static_cast<std::size_t>(i)];
  }
  return out;
}

bool nef_membership(const NSLattice& lat, const NSClass& x) {
  if (pairing(lat, x, x).sign() < 0) return false;
  return (FieldElem(Rational(lat.anchor_square)) * x.coords[0]).sign() >= 0;
}

bool ray_is_rational(const NSClass& x) {
  if (x.is_zero()) fail(ErrorCode::ZeroClass, "the zero class spans no ray");
  const FieldElem* first = nullptr;
  for (const FieldElem& c : x.coords) {
    if (!c.is_zero()) { first = &c; break; }
  }
  for (const FieldElem& c : x.coords) {
    if (!(c / *first).is_rational()) return false;
  }
  return true;
}

SupportFunctional support_functional(const NSLattice& lat, const NSClass& d) {
  lat.validate();
  if (static_cast<int>(d.coords.size()) != lat.rho) {
    fail(ErrorCode::DimensionMismatch, "class coordinates must match the lattice rank");
  }
  if (!pairing(lat, d, d).is_zero() || (FieldElem(Rational(lat.anchor_square)) * d.coords[0]).sign() <= 0) {
    fail(ErrorCode::NotBoundaryClass, "support functional needs d^2 = 0 and (d.e_1) > 0");
  }
  return SupportFunctional(lat, d);
}

Counterexample build_counterexample(const NSLattice& lat, const Rational& t) {
  lat.validate();
  const Rational anchor(lat.anchor_square);
  const Rational l2(lat.negatives[0]);
  const Rational l3(lat.negatives[1]);
  const Rational weight = l2 * t * t;
  if (!(weight > 0) || !(weight < anchor)) {
    fail(ErrorCode::DegenerateChoice,
         "need 0 < lambda_2 t^2 < " + emit_rational(anchor) + ", got " + emit_rational(weight));
  }
  const Rational radicand = (anchor - weight) / l3;
  const FieldElem a3 = FieldElem::sqrt_of(radicand);
  if (a3.is_rational()) {
    fail(ErrorCode::DegenerateChoice,
         "(anchor - lambda_2 t^2)/lambda_3 = " + emit_rational(radicand) +
             " is a rational square; the ray would be rational");
  }

  Counterexample out;
  out.cls.coords.assign(static_cast<std::size_t>(lat.rho), FieldElem(0));
  out.cls.coords[0] = FieldElem(1);
  out.cls.coords[1] = FieldElem(t);
  out.cls.coords[2] = a3;
  out.radicand = a3.radicand();

  // Each certificate entry is re-verified through the public operations.
  out.certificate.nef = nef_membership(lat, out.cls);
  out.certificate.boundary = pairing(lat, out.cls, out.cls).is_zero();
  out.certificate.ray_rational = ray_is_rational(out.cls);
  if (!out.certificate.all_pass()) {
    fail(ErrorCode::Internal, "constructed class fails its own certificate");
  }
  return out;
}

Refutation effective_decomposition_refuter(const NSLattice& lat, const NSClass& d,
                                           std::span<const NSClass> gammas,
                                           std::span<const FieldElem> weights) {
  lat.validate();
  if (gammas.size() != weights.size()) {
    fail(ErrorCode::DimensionMismatch, "one weight per decomposition class required");
  }
  // d must be a certified counterexample class.
  if (!nef_membership(lat, d) || !pairing(lat, d, d).is_zero() || d.is_zero() ||
      ray_is_rational(d)) {
    fail(ErrorCode::PreconditionViolated, "d is not a certified boundary class with irrational ray");
  }
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    for (const FieldElem& c : gammas[i].coords) {
      if (!c.is_rational()) {
        fail(ErrorCode::PreconditionViolated, "decomposition classes must be rational");
      }
    }
    if (!nef_membership(lat, gammas[i])) {
      fail(ErrorCode::PreconditionViolated, "decomposition classes must lie in the positive cone");
    }
    if (weights[i].sign() <= 0) {
      fail(ErrorCode::PreconditionViolated, "weights must be positive");
    }
  }

  Refutation out;
  if (gammas.empty()) {
    out.step = Refutation::Step::zero_sum;
    out.detail = "empty decomposition cannot equal a nonzero class";
    return out;
  }

  NSClass sum;
  sum.coords.assign(static_cast<std::size_t>(lat.rho), FieldElem(0));
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    for (std::size_t k = 0; k < sum.coords.size(); ++k) {
      sum.coords[k] += weights[i] * gammas[i].coords[k];
    }
  }
  for (std::size_t k = 0; k < sum.coords.size(); ++k) {
    if (sum.coords[k] != d.coords[k]) {
      out.step = Refutation::Step::sum_mismatch;
      out.index = k;
      out.detail = "decomposition does not even sum to d: coordinate " + std::to_string(k) +
                   " gives " + sum.coords[k].str() + ", expected " + d.coords[k].str();
      return out;
    }
  }

  // The sum equals d, so H(d) = 0 = sum c_i H(gamma_i) with positive c_i and
  // H >= 0 on the cone: every H(gamma_i) vanishes and each nonzero gamma_i
  // sits on ray(d), which is irrational while gamma_i is rational.
  const SupportFunctional h = support_functional(lat, d);
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (gammas[i].is_zero()) continue;
    const FieldElem value = h(gammas[i]);
    if (!value.is_zero()) {
      fail(ErrorCode::Internal, "support functional positive on a summand of its own kernel class");
    }
    out.step = Refutation::Step::ray_rationality;
    out.index = i;
    out.detail = "H(Gamma_" + std::to_string(i) +
                 ") = 0 forces it onto ray(d), but the class is rational and ray(d) is not";
    return out;
  }
  out.step = Refutation::Step::zero_sum;
  out.detail = "all summands vanish, so the sum is zero and cannot equal d";
  return out;
}

}  // namespace divpos
