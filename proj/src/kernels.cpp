#include "divpos/kernels.hpp"

#include <cstdlib>

namespace divpos::kernels {

namespace {

// Sum over exponent vectors (k_idx, ..., k_last) with sum m_left of
// max(acc + sum k_i d_i + 1, 0); acc carries twist and earlier levels.
std::int64_t h0_rec(const std::int64_t* d, int idx, int last, std::int64_t m_left,
                    std::int64_t acc) {
  if (idx == last) {
    const std::int64_t v = acc + m_left * d[idx] + 1;
    return v > 0 ? v : 0;
  }
  std::int64_t total = 0;
  std::int64_t level = acc;
  for (std::int64_t k = 0; k <= m_left; ++k) {
    total += h0_rec(d, idx + 1, last, m_left - k, level);
    level += d[idx];
  }
  return total;
}

}  // namespace

std::int64_t h0_sym_twist(std::span<const std::int64_t> degrees, std::int64_t m,
                          std::int64_t twist, Exec exec) {
  if (degrees.empty() || degrees.size() > 16 || m < 1 || m > 10'000 ||
      std::llabs(twist) > 1'000'000) {
    fail(ErrorCode::PreconditionViolated, "h0_sym_twist input out of the documented range");
  }
  for (std::int64_t d : degrees) {
    if (std::llabs(d) > 1'000'000) {
      fail(ErrorCode::PreconditionViolated, "h0_sym_twist degree out of the documented range");
    }
  }
  const int last = static_cast<int>(degrees.size()) - 1;
  const std::int64_t* d = degrees.data();
  if (last == 0) {
    const std::int64_t v = m * d[0] + twist + 1;
    return v > 0 ? v : 0;
  }
  std::int64_t total = 0;
  if (exec == Exec::openmp) {
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (std::int64_t k = 0; k <= m; ++k) {
      total += h0_rec(d, 1, last, m - k, twist + k * d[0]);
    }
  } else {
    for (std::int64_t k = 0; k <= m; ++k) {
      total += h0_rec(d, 1, last, m - k, twist + k * d[0]);
    }
  }
  return total;
}

Int h0_sym_twist_ref(const SplitBundle& e, int m, const Int& twist) {
  const SplitBundle twisted = tensor(sym_power(e, m), SplitBundle(std::vector<Int>{twist}));
  return h0_genus0(twisted);
}

}  // namespace divpos::kernels
