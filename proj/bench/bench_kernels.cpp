// Compares the serial reference paths against the OpenMP kernels on
// sweep-sized workloads. Run manually: ./bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "divpos/kernels.hpp"
#include "divpos/suites.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_best_of(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = Clock::now();
    fn();
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (s < best) best = s;
  }
  return best;
}

void print_row(const char* name, double serial, double parallel) {
  std::printf("%-34s %10.3f ms %10.3f ms %8.2fx\n", name, serial * 1e3, parallel * 1e3,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n");
#endif
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  using divpos::kernels::Exec;
  using divpos::kernels::h0_sym_twist;

  // largest single section count in the oracle sweep: rank 4, m = 80
  const std::vector<std::int64_t> degrees{3, 1, -2, -3};
  std::int64_t sink = 0;
  const double h0_serial = time_best_of(repeats, [&] {
    for (int j = 1; j <= 20; ++j) sink += h0_sym_twist(degrees, 4 * j, -j, Exec::serial);
  });
  const double h0_parallel = time_best_of(repeats, [&] {
    for (int j = 1; j <= 20; ++j) sink += h0_sym_twist(degrees, 4 * j, -j, Exec::openmp);
  });
  print_row("h0_sym_twist (rank 4, m<=80)", h0_serial, h0_parallel);

  const double sweep_serial =
      time_best_of(repeats, [] { divpos::suites::oracle_equivalence(Exec::serial); });
  const double sweep_parallel =
      time_best_of(repeats, [] { divpos::suites::oracle_equivalence(Exec::openmp); });
  print_row("oracle equivalence sweep", sweep_serial, sweep_parallel);

  const double cover_serial =
      time_best_of(repeats, [] { divpos::suites::cover_invariance(Exec::serial); });
  const double cover_parallel =
      time_best_of(repeats, [] { divpos::suites::cover_invariance(Exec::openmp); });
  print_row("cover invariance sweep", cover_serial, cover_parallel);

  std::printf("(checksum %lld)\n", static_cast<long long>(sink));
  return 0;
}
