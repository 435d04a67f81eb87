#pragma once

#include <cstdint>
#include <span>

#include "divpos/bundle.hpp"

namespace divpos::kernels {

enum class Exec { serial, openmp };

// h^0 of Sym^m(E) twisted by degree t over a genus-0 base, by direct
// enumeration of the exponent vectors of Sym^m: sum of max(k.d + t + 1, 0).
// Fast int64 path for the sweep suites; inputs must satisfy
// |d_i|, |t| <= 10^6, m <= 10^4, rank <= 16 (checked).
std::int64_t h0_sym_twist(std::span<const std::int64_t> degrees, std::int64_t m, std::int64_t twist,
                          Exec exec);

// Exact reference for the kernel above, kept deliberately on the slow
// library path (materialize Sym^m, tensor with the twist, count sections).
Int h0_sym_twist_ref(const SplitBundle& e, int m, const Int& twist);

}  // namespace divpos::kernels
