#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divpos/kernels.hpp"

namespace divpos::suites {

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failure_count = 0;
  std::vector<std::string> failures;  // first few, in input order
  double seconds = 0;

  bool passed() const { return failure_count == 0; }
};

// Genus-0 brute-force equivalence: classification verdicts against direct
// section counts of Sym^m twists, across the full small-bundle grid.
SuiteResult oracle_equivalence(kernels::Exec exec);

// Nef threshold sweep plus the exact boundary identity
// (Theta - (deg E / r) F)^r = 0 and the ring/closed-form consistency.
SuiteResult nef_threshold(kernels::Exec exec);

// Vanishing sweep: negative split bundles stay sectionless under Sym^m
// and nonpositive twists.
SuiteResult sym_vanishing();

// Minimality of the Frobenius splitting power on random profiles.
SuiteResult frobenius_planner(std::uint64_t seed);

// Random effective instances rationalize, re-verify and agree with the
// Fourier-Motzkin feasibility kernel.
SuiteResult rationalizer(std::uint64_t seed);

// The boundary-class certificate and its supporting functional on random
// cone samples.
SuiteResult counterexample_certificate(std::uint64_t seed);

// Lorentzian Cauchy-Schwarz on random cone pairs, equality only on rays.
SuiteResult cauchy_schwarz(std::uint64_t seed);

// Verdict invariance under covers of degree 2 and 3 across the full sweep.
SuiteResult cover_invariance(kernels::Exec exec);

// All suites with their fixed seeds, in criterion order.
std::vector<SuiteResult> run_all(kernels::Exec exec);

// Deterministic, timing-free rendering (identical bytes run to run).
std::string selftest_report(kernels::Exec exec);

}  // namespace divpos::suites
