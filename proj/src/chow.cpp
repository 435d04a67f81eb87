#include "divpos/chow.hpp"

namespace divpos {

ChowElem::ChowElem(int rank, Rational bundle_degree)
    : rank_(rank), bundle_degree_(std::move(bundle_degree)) {
  if (rank_ < 1) fail(ErrorCode::PreconditionViolated, "ring needs rank >= 1");
  pure_.assign(static_cast<std::size_t>(rank_) + 1, FieldElem(0));
  with_fiber_.assign(static_cast<std::size_t>(rank_), FieldElem(0));
}

ChowElem ChowElem::one(int rank, Rational bundle_degree) {
  ChowElem e(rank, std::move(bundle_degree));
  e.pure_[0] = FieldElem(1);
  return e;
}

void ChowElem::multiply(const DivClass& cls) {
  std::vector<FieldElem> pure(pure_.size(), FieldElem(0));
  std::vector<FieldElem> with_fiber(with_fiber_.size(), FieldElem(0));
  const std::size_t r = static_cast<std::size_t>(rank_);
  for (std::size_t i = 0; i <= r; ++i) {
    if (pure_[i].is_zero()) continue;
    // Theta^i * Theta: lives on while i+1 <= r
    if (i + 1 <= r) pure[i + 1] += cls.theta * pure_[i];
    // Theta^i * F: lives on while i <= r-1 (Theta^r F reduces to 0 via F^2)
    if (i < r) with_fiber[i] += cls.fiber * pure_[i];
  }
  for (std::size_t i = 0; i < with_fiber_.size(); ++i) {
    if (with_fiber_[i].is_zero()) continue;
    // Theta^i F * Theta: lives on while i+1 <= r-1; F^2 kills the rest
    if (i + 1 < r) with_fiber[i + 1] += cls.theta * with_fiber_[i];
  }
  pure_ = std::move(pure);
  with_fiber_ = std::move(with_fiber);
}

const FieldElem& ChowElem::coeff_theta(int i) const {
  return pure_.at(static_cast<std::size_t>(i));
}

const FieldElem& ChowElem::coeff_theta_fiber(int i) const {
  return with_fiber_.at(static_cast<std::size_t>(i));
}

FieldElem ChowElem::top_intersection() const {
  // Theta^r = deg(E) Theta^{r-1} F against the point class Theta^{r-1} F.
  return with_fiber_[static_cast<std::size_t>(rank_) - 1] +
         FieldElem(bundle_degree_) * pure_[static_cast<std::size_t>(rank_)];
}

namespace {

FieldElem intersection_in_ring(std::span<const DivClass> classes, int rank,
                               const Rational& bundle_degree) {
  if (static_cast<int>(classes.size()) != rank) {
    fail(ErrorCode::ArityMismatch,
         "intersection of " + std::to_string(classes.size()) + " classes on a P(E) of dimension " +
             std::to_string(rank));
  }
  ChowElem acc = ChowElem::one(rank, bundle_degree);
  for (const DivClass& cls : classes) acc.multiply(cls);
  const FieldElem symbolic = acc.top_intersection();

  // closed form: (prod lambda) deg(E) + sum_j b_j prod_{i != j} lambda_i
  FieldElem prod_all(1);
  for (const DivClass& cls : classes) prod_all *= cls.theta;
  FieldElem closed = prod_all * FieldElem(bundle_degree);
  for (std::size_t j = 0; j < classes.size(); ++j) {
    FieldElem prod_others(1);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (i != j) prod_others *= classes[i].theta;
    }
    closed += classes[j].fiber * prod_others;
  }

  if (symbolic != closed) {
    fail(ErrorCode::Internal, "symbolic reduction disagrees with the closed form");
  }
  return symbolic;
}

}  // namespace

FieldElem intersection_number(std::span<const DivClass> classes, const HNProfile& e) {
  return intersection_in_ring(classes, e.total_rank(), e.total_degree());
}

FieldElem intersection_number(std::span<const DivClass> classes, const SplitBundle& e) {
  return intersection_in_ring(classes, e.rank(), Rational(e.degree()));
}

FieldElem fiber_restriction_degree(const DivClass& d) { return d.theta; }

}  // namespace divpos
