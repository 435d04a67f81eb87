#pragma once

#include <span>
#include <vector>

#include "divpos/bundle.hpp"
#include "divpos/field_elem.hpp"

namespace divpos {

// Divisor class lambda*Theta + b*F on P(E) over a curve, in the rank-2
// numerical class group generated by the tautological class and the fiber.
struct DivClass {
  FieldElem theta;
  FieldElem fiber;

  bool is_rational() const { return theta.is_rational() && fiber.is_rational(); }
};

// Element of the numerical ring Z[Theta, F] / (F^2, Theta^r - deg(E) Theta^{r-1} F),
// instantiated per bundle. Monomials Theta^i (i <= r) and Theta^i F (i <= r-1).
class ChowElem {
 public:
  ChowElem(int rank, Rational bundle_degree);

  static ChowElem one(int rank, Rational bundle_degree);

  // Multiply by a degree-1 class; anything beyond the top dimension drops out.
  void multiply(const DivClass& cls);

  const FieldElem& coeff_theta(int i) const;        // of Theta^i
  const FieldElem& coeff_theta_fiber(int i) const;  // of Theta^i F

  // Degree-r evaluation against the point class: coefficient of
  // Theta^{r-1} F after reducing Theta^r = deg(E) Theta^{r-1} F.
  FieldElem top_intersection() const;

 private:
  int rank_;
  Rational bundle_degree_;
  std::vector<FieldElem> pure_;        // Theta^0 .. Theta^r
  std::vector<FieldElem> with_fiber_;  // Theta^0 F .. Theta^{r-1} F
};

// Product of exactly rank(E) divisor classes evaluated in the ring above.
// Computes both the symbolic reduction and the closed form
// (prod lambda_i) * deg(E) + sum_j b_j * prod_{i != j} lambda_i
// and insists they agree.
FieldElem intersection_number(std::span<const DivClass> classes, const HNProfile& e);
FieldElem intersection_number(std::span<const DivClass> classes, const SplitBundle& e);

// Degree of the restriction to a fiber line: the Theta coefficient.
FieldElem fiber_restriction_degree(const DivClass& d);

}  // namespace divpos
