#include "divpos/oracle.hpp"

#include <array>

namespace divpos {

namespace {

Int lcm_denominators(std::initializer_list<Rational> values) {
  Int m = 1;
  for (const Rational& v : values) m = lcm(m, denominator(v));
  return m;
}

PositivityReport classify_impl(const DivClass& d, const HNProfile& e, const Curve& c,
                               int split_section_slot) {
  c.validate();
  PositivityReport report;
  report.mu_max_threshold = mu_max(e);
  report.mu_min_threshold = mu_min(e);

  const FieldElem& lambda = d.theta;
  const FieldElem& b = d.fiber;
  const int lambda_sign = lambda.sign();
  const bool rational_inputs = d.is_rational();

  if (lambda_sign < 0) {
    // negative on every fiber line; nothing is positive
  } else if (lambda_sign == 0) {
    const bool nonneg = b.sign() >= 0;
    report.pseudoeffective = nonneg;
    report.nef = nonneg;
  } else {
    const FieldElem pe_threshold = -(lambda * FieldElem(report.mu_max_threshold));
    const FieldElem nef_threshold = -(lambda * FieldElem(report.mu_min_threshold));
    report.pseudoeffective = b >= pe_threshold;
    report.nef = b >= nef_threshold;
    report.big = b > pe_threshold;
    report.ample = b > nef_threshold;
  }

  if (!rational_inputs) {
    report.undecided = QEffUndecided::irrational_input;
  } else if (!c.over_fpbar) {
    report.undecided = QEffUndecided::base_field;
  } else {
    report.q_effective = report.pseudoeffective;
    if (report.pseudoeffective && lambda_sign > 0) {
      // D = lambda (Theta - a F), a = -b/lambda; take xi of maximal slope
      // and B = xi - A of nonnegative degree.
      const Rational lam = lambda.rational_part();
      const Rational a = -(b.rational_part() / lam);
      EffectivityWitness w;
      w.xi_degree = report.mu_max_threshold;
      w.b_degree = FieldElem(w.xi_degree - a);
      w.section_slot = split_section_slot;
      w.m = lcm_denominators({lam, lam * w.xi_degree, lam * (w.xi_degree - a)});
      report.witness = w;
    }
  }
  return report;
}

}  // namespace

PositivityReport classify(const DivClass& d, const HNProfile& e, const Curve& c) {
  // the maximal-slope piece is the first one
  return classify_impl(d, e, c, 0);
}

PositivityReport classify(const DivClass& d, const SplitBundle& e, const Curve& c) {
  int slot = 0;
  for (int i = 1; i < e.rank(); ++i) {
    if (e.degrees()[static_cast<std::size_t>(i)] > e.degrees()[static_cast<std::size_t>(slot)]) slot = i;
  }
  return classify_impl(d, hn_profile(e), c, slot);
}

bool curve_divisor_q_effective(const FieldElem& deg_a, const Curve& c) {
  c.validate();
  if (!c.over_fpbar) {
    fail(ErrorCode::NotOverFpbar,
         "the degree criterion needs a base over the closure of a finite field");
  }
  return deg_a.sign() >= 0;
}

NakaiCertificate is_ample_rank2_nakai(const DivClass& d, const SplitBundle& e, const Curve& c) {
  c.validate();
  if (e.rank() != 2) fail(ErrorCode::PreconditionViolated, "Nakai route implemented for rank 2 only");
  if (!d.is_rational()) fail(ErrorCode::PreconditionViolated, "Nakai route needs a rational class");
  const HNProfile profile = hn_profile(e);
  const FieldElem& lambda = d.theta;
  const bool strictly_nef =
      lambda.sign() > 0 && d.fiber > -(lambda * FieldElem(mu_min(profile)));
  if (!strictly_nef) {
    fail(ErrorCode::PreconditionViolated, "class is not strictly nef in the fiber/threshold sense");
  }
  const std::array<DivClass, 2> square{d, d};
  NakaiCertificate cert;
  cert.d_squared = intersection_number(square, e);
  // strict nef forces (D.D) > 0 here; a zero would contradict the threshold
  if (cert.d_squared.sign() <= 0) {
    fail(ErrorCode::Internal, "strictly nef rank-2 class with nonpositive self-intersection");
  }
  cert.ample = true;
  return cert;
}

bool pullback_invariance_check(const DivClass& d, const HNProfile& e, int n, const Curve& c) {
  const PositivityReport base = classify(d, e, c);
  const DivClass pulled{d.theta, d.fiber * FieldElem(n)};
  const PositivityReport cover = classify(pulled, pullback_cover(e, n), c);
  return base.nef == cover.nef && base.pseudoeffective == cover.pseudoeffective &&
         base.big == cover.big && base.ample == cover.ample &&
         base.q_effective == cover.q_effective;
}

}  // namespace divpos
