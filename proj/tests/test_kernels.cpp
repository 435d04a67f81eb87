#include <doctest.h>

#include <random>

#include "divpos/kernels.hpp"

using namespace divpos;
using kernels::Exec;

TEST_CASE("kernel agrees with the exact reference path") {
  std::mt19937_64 rng(0x6b01);
  for (int trial = 0; trial < 200; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    std::vector<Int> degrees;
    std::vector<std::int64_t> fast;
    for (int i = 0; i < rank; ++i) {
      const int d = static_cast<int>(rng() % 9) - 4;
      degrees.emplace_back(d);
      fast.push_back(d);
    }
    const SplitBundle e(std::move(degrees));
    const int m = 1 + static_cast<int>(rng() % 8);
    const std::int64_t twist = static_cast<int>(rng() % 21) - 10;
    const Int expected = kernels::h0_sym_twist_ref(e, m, Int(twist));
    CHECK(Int(kernels::h0_sym_twist(fast, m, twist, Exec::serial)) == expected);
  }
}

TEST_CASE("serial and OpenMP kernels return identical values") {
  std::mt19937_64 rng(0x6b02);
  for (int trial = 0; trial < 60; ++trial) {
    const int rank = 2 + static_cast<int>(rng() % 3);
    std::vector<std::int64_t> degrees;
    for (int i = 0; i < rank; ++i) degrees.push_back(static_cast<int>(rng() % 7) - 3);
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 40);
    const std::int64_t twist = static_cast<int>(rng() % 41) - 20;
    CHECK(kernels::h0_sym_twist(degrees, m, twist, Exec::serial) ==
          kernels::h0_sym_twist(degrees, m, twist, Exec::openmp));
  }
}

TEST_CASE("rank-1 closed case") {
  const std::vector<std::int64_t> line{3};
  CHECK(kernels::h0_sym_twist(line, 2, -2, Exec::serial) == 5);   // deg 6 - 2, +1
  CHECK(kernels::h0_sym_twist(line, 2, -7, Exec::serial) == 0);
}

TEST_CASE("kernel range guards") {
  CHECK_THROWS_AS(kernels::h0_sym_twist({}, 1, 0, Exec::serial), Error);
  CHECK_THROWS_AS(kernels::h0_sym_twist(std::vector<std::int64_t>{1}, 0, 0, Exec::serial), Error);
  CHECK_THROWS_AS(kernels::h0_sym_twist(std::vector<std::int64_t>{2'000'000}, 1, 0, Exec::serial),
                  Error);
  CHECK_THROWS_AS(kernels::h0_sym_twist(std::vector<std::int64_t>{1}, 20'000, 0, Exec::serial),
                  Error);
}

TEST_CASE("sweep-sized workload stays exact") {
  // the largest case the oracle sweep can hit: rank 4, m = 80
  const std::vector<std::int64_t> degrees{3, 3, 3, 3};
  const std::int64_t h0 = kernels::h0_sym_twist(degrees, 80, -240, Exec::serial);
  // every monomial has degree 240; the twist cancels it, leaving 1 each:
  // C(83, 3) monomials
  CHECK(h0 == 91881);
  CHECK(kernels::h0_sym_twist(degrees, 80, -241, Exec::serial) == 0);
}
