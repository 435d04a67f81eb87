#include <doctest.h>

#include <random>

#include "divpos/oracle.hpp"

using namespace divpos;

namespace {

const Curve kP1{0, 2, true};

DivClass theta_minus(const Rational& a) { return DivClass{FieldElem(1), FieldElem(-a)}; }

}  // namespace

TEST_CASE("classification thresholds on E = [1, 0]") {
  const SplitBundle e{1, 0};

  const PositivityReport beyond = classify(theta_minus(Rational(2)), e, kP1);
  CHECK(!beyond.pseudoeffective);
  CHECK(!beyond.nef);
  CHECK(!beyond.big);
  CHECK(!beyond.ample);
  REQUIRE(beyond.q_effective.has_value());
  CHECK(!*beyond.q_effective);

  const PositivityReport strip = classify(theta_minus(Rational(1, 2)), e, kP1);
  CHECK(strip.pseudoeffective);
  CHECK(!strip.nef);
  CHECK(strip.big);
  CHECK(!strip.ample);
  REQUIRE(strip.q_effective.has_value());
  CHECK(*strip.q_effective);

  const PositivityReport boundary = classify(theta_minus(Rational(1)), e, kP1);
  CHECK(boundary.pseudoeffective);
  CHECK(!boundary.big);
  CHECK(!boundary.nef);
  REQUIRE(boundary.witness.has_value());
  CHECK(boundary.witness->xi_degree == 1);
  CHECK(boundary.witness->b_degree == FieldElem(0));
  CHECK(boundary.witness->section_slot == 0);
  CHECK(boundary.witness->m == 1);
  CHECK(boundary.mu_max_threshold == 1);
  CHECK(boundary.mu_min_threshold == 0);
}

TEST_CASE("negative theta coefficient kills everything") {
  const PositivityReport r = classify(DivClass{FieldElem(-1), FieldElem(0)},
                                      SplitBundle{0, 0}, kP1);
  CHECK(!r.pseudoeffective);
  CHECK(!r.nef);
  CHECK(!r.big);
  CHECK(!r.ample);
  REQUIRE(r.q_effective.has_value());
  CHECK(!*r.q_effective);
}

TEST_CASE("pure fiber classes follow the degree rule") {
  const SplitBundle e{1, 0};
  const PositivityReport up = classify(DivClass{FieldElem(0), FieldElem(Rational(3, 2))}, e, kP1);
  CHECK(up.pseudoeffective);
  CHECK(up.nef);
  CHECK(!up.big);
  CHECK(!up.ample);
  CHECK(up.q_effective == true);
  CHECK(!up.witness.has_value());  // pulled back from the base, no Theta decomposition

  const PositivityReport down = classify(DivClass{FieldElem(0), FieldElem(-1)}, e, kP1);
  CHECK(!down.pseudoeffective);
  CHECK(down.q_effective == false);

  const PositivityReport zero = classify(DivClass{FieldElem(0), FieldElem(0)}, e, kP1);
  CHECK(zero.pseudoeffective);
  CHECK(zero.nef);
  CHECK(zero.q_effective == true);
}

TEST_CASE("witness reconstructs the class exactly") {
  std::mt19937_64 rng(0x0403);
  for (int trial = 0; trial < 300; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    std::vector<Int> degrees;
    for (int i = 0; i < rank; ++i) degrees.emplace_back(static_cast<int>(rng() % 7) - 3);
    const SplitBundle e(std::move(degrees));
    const FieldElem lambda(Rational(1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 3)));
    const FieldElem b(Rational(static_cast<int>(rng() % 17) - 8, 1 + static_cast<int>(rng() % 3)));
    const DivClass d{lambda, b};
    const PositivityReport r = classify(d, e, kP1);
    REQUIRE(r.q_effective.has_value());
    CHECK(*r.q_effective == r.pseudoeffective);  // the equivalence over F_p bar
    if (r.witness) {
      // lambda*(Theta - xi F) + lambda*bdeg*F == lambda*Theta + b F
      const EffectivityWitness& w = *r.witness;
      CHECK(lambda * (w.b_degree - FieldElem(w.xi_degree)) == b);
      CHECK(w.b_degree.sign() >= 0);
      CHECK(w.m > 0);
      // the slot points at a summand of maximal degree
      const Int top = e.degrees()[static_cast<std::size_t>(w.section_slot)];
      for (const Int& deg : e.degrees()) CHECK(top >= deg);
    }
  }
}

TEST_CASE("implication chain and fiber-coefficient monotonicity") {
  std::mt19937_64 rng(0x0404);
  for (int trial = 0; trial < 400; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 3);
    std::vector<Int> degrees;
    for (int i = 0; i < rank; ++i) degrees.emplace_back(static_cast<int>(rng() % 9) - 4);
    const SplitBundle e(std::move(degrees));
    const FieldElem lambda(Rational(static_cast<int>(rng() % 5) - 2, 1 + static_cast<int>(rng() % 2)));
    const FieldElem b(Rational(static_cast<int>(rng() % 13) - 6, 1 + static_cast<int>(rng() % 3)));
    const PositivityReport r = classify(DivClass{lambda, b}, e, kP1);
    if (r.ample) CHECK(r.nef);
    if (r.nef) CHECK(r.pseudoeffective);
    if (r.big) CHECK(r.pseudoeffective);
    // bumping b never turns a true verdict false
    const PositivityReport bumped = classify(DivClass{lambda, b + FieldElem(1)}, e, kP1);
    if (r.nef) CHECK(bumped.nef);
    if (r.pseudoeffective) CHECK(bumped.pseudoeffective);
    if (r.big) CHECK(bumped.big);
    if (r.ample) CHECK(bumped.ample);
  }
}

TEST_CASE("cone structure: scaling and addition of pseudo-effective classes") {
  std::mt19937_64 rng(0x0405);
  const SplitBundle e{2, 0, -1};
  for (int trial = 0; trial < 200; ++trial) {
    const FieldElem l1(Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 2)));
    const FieldElem b1(Rational(static_cast<int>(rng() % 13) - 6, 1 + static_cast<int>(rng() % 2)));
    const FieldElem l2(Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 2)));
    const FieldElem b2(Rational(static_cast<int>(rng() % 13) - 6, 1 + static_cast<int>(rng() % 2)));
    const PositivityReport r1 = classify(DivClass{l1, b1}, e, kP1);
    const PositivityReport r2 = classify(DivClass{l2, b2}, e, kP1);
    const FieldElem scale(Rational(1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 3)));
    const PositivityReport scaled = classify(DivClass{scale * l1, scale * b1}, e, kP1);
    CHECK(scaled.pseudoeffective == r1.pseudoeffective);
    CHECK(scaled.nef == r1.nef);
    CHECK(scaled.big == r1.big);
    CHECK(scaled.ample == r1.ample);
    if (r1.pseudoeffective && r2.pseudoeffective) {
      const PositivityReport sum = classify(DivClass{l1 + l2, b1 + b2}, e, kP1);
      CHECK(sum.pseudoeffective);
    }
    if (r1.nef && r2.nef) {
      const PositivityReport sum = classify(DivClass{l1 + l2, b1 + b2}, e, kP1);
      CHECK(sum.nef);
    }
  }
}

TEST_CASE("irrational classes report pseudo-effectivity but defer effectivity") {
  const SplitBundle e{1, 0};
  const DivClass d{FieldElem(1), FieldElem(Rational(-1), Rational(1, 2), 2)};  // -1 + sqrt(2)/2
  const PositivityReport r = classify(d, e, kP1);
  CHECK(r.pseudoeffective);
  CHECK(!r.q_effective.has_value());
  CHECK(r.undecided == QEffUndecided::irrational_input);
  CHECK(!r.witness.has_value());
}

TEST_CASE("no effectivity verdict away from closures of finite fields") {
  const Curve complex_curve{0, 0, false};
  const PositivityReport r = classify(theta_minus(Rational(0)), SplitBundle{1, 0}, complex_curve);
  CHECK(r.pseudoeffective);
  CHECK(!r.q_effective.has_value());
  CHECK(r.undecided == QEffUndecided::base_field);
}

TEST_CASE("curve divisor effectivity by degree") {
  CHECK(curve_divisor_q_effective(FieldElem(0), kP1));
  CHECK(!curve_divisor_q_effective(FieldElem(Rational(-1, 3)), kP1));
  CHECK(curve_divisor_q_effective(FieldElem(Rational(-1), Rational(1), 2), kP1));  // sqrt(2) - 1 > 0
  CHECK_THROWS_AS(curve_divisor_q_effective(FieldElem(1), Curve{0, 0, false}), Error);
}

TEST_CASE("rank-2 Nakai certificates") {
  const NakaiCertificate flat = is_ample_rank2_nakai(
      DivClass{FieldElem(1), FieldElem(1)}, SplitBundle{0, 0}, kP1);
  CHECK(flat.ample);
  CHECK(flat.d_squared == FieldElem(2));

  // boundary of the nef cone violates the strictness precondition
  CHECK_THROWS_AS(is_ample_rank2_nakai(DivClass{FieldElem(1), FieldElem(0)}, SplitBundle{1, 0}, kP1),
                  Error);

  const NakaiCertificate twisted = is_ample_rank2_nakai(
      DivClass{FieldElem(1), FieldElem(0)}, SplitBundle{1, 1}, kP1);
  CHECK(twisted.ample);
  CHECK(twisted.d_squared == FieldElem(2));

  CHECK_THROWS_AS(is_ample_rank2_nakai(DivClass{FieldElem(1), FieldElem(1)}, SplitBundle{1, 0, 0}, kP1),
                  Error);
}

TEST_CASE("Nakai certificate is positive whenever the precondition holds") {
  std::mt19937_64 rng(0x0406);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Int> degrees{static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 9) - 4};
    const SplitBundle e(std::move(degrees));
    const Rational lambda(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 2));
    const Rational b(static_cast<int>(rng() % 17) - 8, 1 + static_cast<int>(rng() % 3));
    const DivClass d{FieldElem(lambda), FieldElem(b)};
    const bool strict = b > -(lambda * mu_min(hn_profile(e)));
    if (!strict) {
      CHECK_THROWS_AS(is_ample_rank2_nakai(d, e, kP1), Error);
    } else {
      const NakaiCertificate cert = is_ample_rank2_nakai(d, e, kP1);
      CHECK(cert.ample);
      CHECK(cert.d_squared.sign() > 0);
    }
  }
}

TEST_CASE("cover pullback invariance on the frozen examples") {
  const HNProfile p = hn_profile(SplitBundle{1, 0});
  CHECK(pullback_invariance_check(theta_minus(Rational(1)), p, 3, kP1));
  CHECK(pullback_invariance_check(theta_minus(Rational(2)), p, 2, kP1));
  CHECK(pullback_invariance_check(theta_minus(Rational(-5, 3)), p, 1, kP1));
}
