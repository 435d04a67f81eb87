#include <doctest.h>

#include <array>
#include <random>
#include <vector>

#include "divpos/chow.hpp"

using namespace divpos;

namespace {

DivClass dc(int theta, int fiber) { return DivClass{FieldElem(theta), FieldElem(fiber)}; }

FieldElem random_coeff(std::mt19937_64& rng) {
  Rational rat(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3));
  if (rng() % 3 == 0) {
    Rational rad(static_cast<int>(rng() % 5) - 2, 1 + static_cast<int>(rng() % 2));
    if (rad != 0) return FieldElem(rat, rad, 2);
  }
  return FieldElem(rat);
}

}  // namespace

TEST_CASE("frozen intersection numbers") {
  const SplitBundle e{1, 0};
  // Theta^2 = deg(E) = 1
  CHECK(intersection_number(std::array{dc(1, 0), dc(1, 0)}, e) == FieldElem(1));
  // (Theta + 2F).(Theta - F) = 1*1 + (2 + (-1)) = 2
  CHECK(intersection_number(std::array{dc(1, 2), dc(1, -1)}, e) == FieldElem(2));
  // semistable boundary: (Theta - F)^2 = 0 on E = [1,1] (deg 2, rank 2)
  const SplitBundle semistable{1, 1};
  CHECK(intersection_number(std::array{dc(1, -1), dc(1, -1)}, semistable) == FieldElem(0));
}

TEST_CASE("arity is enforced") {
  const SplitBundle e{1, 0};
  CHECK_THROWS_AS(intersection_number(std::array{dc(1, 0)}, e), Error);
  CHECK_THROWS_AS(intersection_number(std::array{dc(1, 0), dc(1, 0), dc(1, 0)}, e), Error);
}

TEST_CASE("products containing F twice vanish") {
  const SplitBundle e{2, 0, -1};
  CHECK(intersection_number(std::array{dc(0, 1), dc(0, 1), dc(1, 3)}, e) == FieldElem(0));
  CHECK(intersection_number(std::array{dc(0, 5), dc(0, -2), dc(0, 1)}, e) == FieldElem(0));
  // Theta^{r-1} F = 1 (point class)
  CHECK(intersection_number(std::array{dc(1, 0), dc(1, 0), dc(0, 1)}, e) == FieldElem(1));
}

TEST_CASE("symbolic reduction equals the closed form on random classes") {
  std::mt19937_64 rng(0xc401);
  for (int trial = 0; trial < 500; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    std::vector<Int> degrees;
    for (int i = 0; i < rank; ++i) degrees.emplace_back(static_cast<int>(rng() % 7) - 3);
    const SplitBundle e(std::move(degrees));
    std::vector<DivClass> classes;
    for (int i = 0; i < rank; ++i) classes.push_back({random_coeff(rng), random_coeff(rng)});
    // intersection_number itself cross-checks the two routes and throws on drift
    const FieldElem value = intersection_number(classes, e);
    FieldElem expected = FieldElem(Rational(e.degree()));
    for (const DivClass& c : classes) expected *= c.theta;
    for (std::size_t j = 0; j < classes.size(); ++j) {
      FieldElem term = classes[j].fiber;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i != j) term *= classes[i].theta;
      }
      expected += term;
    }
    CHECK(value == expected);
  }
}

TEST_CASE("multilinearity and symmetry") {
  std::mt19937_64 rng(0xc402);
  const SplitBundle e{2, -1, 0};
  for (int trial = 0; trial < 100; ++trial) {
    DivClass a{random_coeff(rng), random_coeff(rng)};
    DivClass b{random_coeff(rng), random_coeff(rng)};
    DivClass c{random_coeff(rng), random_coeff(rng)};
    DivClass d{random_coeff(rng), random_coeff(rng)};
    const FieldElem s = random_coeff(rng);

    // linearity in the first slot
    DivClass combo{a.theta + s * b.theta, a.fiber + s * b.fiber};
    const FieldElem lhs = intersection_number(std::array{combo, c, d}, e);
    const FieldElem rhs = intersection_number(std::array{a, c, d}, e) +
                          s * intersection_number(std::array{b, c, d}, e);
    CHECK(lhs == rhs);

    // symmetry under permutation
    CHECK(intersection_number(std::array{a, c, d}, e) ==
          intersection_number(std::array{d, a, c}, e));
  }
}

TEST_CASE("rank-1 ring evaluates degrees directly") {
  const SplitBundle line{5};
  CHECK(intersection_number(std::array{dc(1, 2)}, line) == FieldElem(7));
  CHECK(intersection_number(std::array{dc(0, 1)}, line) == FieldElem(1));
}

TEST_CASE("profile and split entry points agree") {
  const SplitBundle e{3, 1, 1};
  const std::array classes{dc(1, -1), dc(2, 0), dc(1, 1)};
  CHECK(intersection_number(classes, e) == intersection_number(classes, hn_profile(e)));
}

TEST_CASE("fiber restriction degree is the theta coefficient") {
  CHECK(fiber_restriction_degree(dc(1, -3)) == FieldElem(1));
  CHECK(fiber_restriction_degree(dc(-2, 0)) == FieldElem(-2));
  CHECK(fiber_restriction_degree(dc(0, 5)) == FieldElem(0));
}
