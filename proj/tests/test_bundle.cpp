#include <doctest.h>

#include <random>

#include "divpos/bundle.hpp"

using namespace divpos;

namespace {

SplitBundle random_bundle(std::mt19937_64& rng, int max_rank, int span) {
  const int rank = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_rank));
  std::vector<Int> degrees;
  for (int i = 0; i < rank; ++i) {
    degrees.emplace_back(static_cast<int>(rng() % (2 * span + 1)) - span);
  }
  return SplitBundle(std::move(degrees));
}

}  // namespace

TEST_CASE("hn_profile groups equal degrees descending") {
  const HNProfile p = hn_profile(SplitBundle{2, 2, 0, -1});
  REQUIRE(p.pieces().size() == 3);
  CHECK(p.pieces()[0].rank == 2);
  CHECK(p.pieces()[0].degree == 4);
  CHECK(p.pieces()[1].rank == 1);
  CHECK(p.pieces()[1].degree == 0);
  CHECK(p.pieces()[2].rank == 1);
  CHECK(p.pieces()[2].degree == -1);

  const HNProfile single = hn_profile(SplitBundle{0});
  CHECK(single.pieces().size() == 1);
  CHECK(single.pieces()[0].rank == 1);
  CHECK(single.pieces()[0].degree == 0);

  const HNProfile semistable = hn_profile(SplitBundle{3, 3, 3});
  CHECK(semistable.pieces().size() == 1);
  CHECK(semistable.pieces()[0].rank == 3);
  CHECK(semistable.pieces()[0].degree == 9);
}

TEST_CASE("profiles validate strictly decreasing slopes") {
  CHECK_THROWS_AS(HNProfile({{1, Rational(0)}, {1, Rational(0)}}), Error);
  CHECK_THROWS_AS(HNProfile({{1, Rational(0)}, {1, Rational(1)}}), Error);
  CHECK_THROWS_AS(HNProfile({{0, Rational(1)}}), Error);
  CHECK_THROWS_AS(HNProfile({}), Error);
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const HNProfile p = hn_profile(random_bundle(rng, 5, 6));
    for (std::size_t k = 1; k < p.pieces().size(); ++k) {
      CHECK(p.pieces()[k - 1].slope() > p.pieces()[k].slope());
    }
  }
}

TEST_CASE("mu_max and mu_min") {
  const HNProfile p({{2, Rational(4)}, {1, Rational(-1)}});
  CHECK(mu_max(p) == 2);
  CHECK(mu_min(p) == -1);
  const HNProfile semistable({{3, Rational(9)}});
  CHECK(mu_max(semistable) == 3);
  CHECK(mu_min(semistable) == 3);
  const HNProfile split = hn_profile(SplitBundle{3, 1});
  CHECK(mu_max(split) == 3);
  CHECK(mu_min(split) == 1);
}

TEST_CASE("sym_power enumerates multiset sums") {
  CHECK(sym_power(SplitBundle{1, 0}, 2).same_summands(SplitBundle{2, 1, 0}));
  const SplitBundle e{2, 0, -1};
  CHECK(sym_power(e, 1).same_summands(e));
  CHECK(sym_power(SplitBundle{3, 3}, 2).same_summands(SplitBundle{6, 6, 6}));
  // rank C(r+m-1, m)
  CHECK(sym_power(SplitBundle{1, 0, -1}, 4).rank() == 15);
  CHECK_THROWS_AS(sym_power(e, 0), Error);
}

TEST_CASE("tensor takes all pairwise sums") {
  CHECK(tensor(SplitBundle{1, 0}, SplitBundle{-1}).same_summands(SplitBundle{0, -1}));
  CHECK(tensor(SplitBundle{1}, SplitBundle{1}).same_summands(SplitBundle{2}));
  CHECK(tensor(SplitBundle{2, 0}, SplitBundle{1, -1}).same_summands(SplitBundle{3, 1, 1, -1}));
}

TEST_CASE("degree and rank are additive under tensor") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const SplitBundle e = random_bundle(rng, 4, 5);
    const SplitBundle g = random_bundle(rng, 4, 5);
    const SplitBundle t = tensor(e, g);
    CHECK(t.rank() == e.rank() * g.rank());
    CHECK(t.degree() == e.degree() * g.rank() + g.degree() * e.rank());
  }
}

TEST_CASE("slope of Sym^m scales for semistable bundles") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const int d = static_cast<int>(rng() % 9) - 4;
    const int r = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 5);
    const SplitBundle e(std::vector<Int>(static_cast<std::size_t>(r), Int(d)));
    CHECK(sym_power(e, m).slope() == Rational(m) * e.slope());
  }
}

TEST_CASE("pullbacks scale every slope by the same factor") {
  const HNProfile p({{1, Rational(1)}, {1, Rational(0)}});
  const HNProfile tripled = pullback_cover(p, 3);
  CHECK(tripled.pieces()[0].degree == 3);
  CHECK(tripled.pieces()[1].degree == 0);
  CHECK(pullback_cover(p, 1) == p);
  CHECK(pullback_cover(HNProfile({{2, Rational(1)}}), 2) == HNProfile({{2, Rational(2)}}));

  const Curve c{1, 2, true};
  const HNProfile frob = frobenius_pullback(p, 3, c);
  CHECK(frob.pieces()[0].degree == 8);
  CHECK(frob.pieces()[1].degree == 0);
  CHECK(frobenius_pullback(p, 0, c) == p);
  CHECK(frobenius_pullback(HNProfile({{1, Rational(-1)}}), 2, Curve{0, 3, true}) ==
        HNProfile({{1, Rational(-9)}}));
  CHECK_THROWS_AS(frobenius_pullback(p, 1, Curve{0, 0, false}), Error);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const HNProfile q = hn_profile(random_bundle(rng, 4, 4));
    const int n = 2 + static_cast<int>(rng() % 3);
    CHECK(mu_max(pullback_cover(q, n)) == Rational(n) * mu_max(q));
    CHECK(mu_min(pullback_cover(q, n)) == Rational(n) * mu_min(q));
  }
}

TEST_CASE("splitting_frobenius_power matches the frozen examples") {
  const HNProfile p({{1, Rational(1)}, {1, Rational(0)}});
  CHECK(splitting_frobenius_power(p, Curve{2, 2, true}) == 2);  // need 2^m > 2
  CHECK(splitting_frobenius_power(p, Curve{0, 2, true}) == 0);  // -1 - 2 < 0 already
  CHECK(splitting_frobenius_power(HNProfile({{3, Rational(5)}}), Curve{4, 5, true}) == 0);
  CHECK_THROWS_AS(splitting_frobenius_power(p, Curve{2, 0, false}), Error);
}

TEST_CASE("splitting power is minimal") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    HNProfile p = hn_profile(random_bundle(rng, 4, 5));
    Curve c{static_cast<int>(rng() % 4), Int(2 + static_cast<int>(rng() % 2)), true};
    const int m = splitting_frobenius_power(p, c);
    const auto holds = [&](int power) {
      Int f = 1;
      for (int k = 0; k < power; ++k) f *= c.characteristic;
      for (std::size_t j = 0; j + 1 < p.pieces().size(); ++j) {
        const Rational gap = p.pieces()[j + 1].slope() - p.pieces()[j].slope();
        if (!(Rational(f) * gap + Rational(c.canonical_degree()) < 0)) return false;
      }
      return true;
    };
    if (p.pieces().size() < 2) {
      CHECK(m == 0);
    } else {
      CHECK(holds(m));
      if (m >= 1) CHECK(!holds(m - 1));
    }
  }
}

TEST_CASE("h0 over genus 0") {
  CHECK(h0_genus0(SplitBundle{3, -2}) == 4);
  CHECK(h0_genus0(SplitBundle{-1, -1}) == 0);
  CHECK(h0_genus0(SplitBundle{0}) == 1);
}

TEST_CASE("vanishing hypothesis predicate") {
  CHECK(sym_vanishing_holds(HNProfile({{1, Rational(-1)}, {1, Rational(-2)}}), HNPiece{1, Rational(0)}));
  CHECK(!sym_vanishing_holds(HNProfile({{1, Rational(0)}}), HNPiece{1, Rational(0)}));
  CHECK(!sym_vanishing_holds(HNProfile({{1, Rational(-1)}}), HNPiece{1, Rational(1)}));
}

TEST_CASE("curve validation") {
  CHECK_THROWS_AS((Curve{0, 4, true}.validate()), Error);  // 4 is not prime
  CHECK_THROWS_AS((Curve{0, 0, true}.validate()), Error);  // char 0 not over F_p bar
  CHECK_THROWS_AS((Curve{-1, 2, true}.validate()), Error);
  Curve ok{2, 7, true};
  ok.validate();
  CHECK(ok.canonical_degree() == 2);
}
