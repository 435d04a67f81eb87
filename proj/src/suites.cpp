#include "divpos/suites.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "divpos/ns_cone.hpp"
#include "divpos/oracle.hpp"
#include "divpos/rationalize.hpp"

namespace divpos::suites {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr std::size_t kMaxReportedFailures = 8;

// Run one check per index; a nonempty return is a failure message. Failure
// order is the index order no matter how the loop is scheduled.
SuiteResult run_indexed(std::string name, long long n, kernels::Exec exec,
                        const std::function<std::string(long long)>& check) {
  const auto start = Clock::now();
  std::vector<std::string> raw(static_cast<std::size_t>(n));
  const auto body = [&](long long i) {
    try {
      raw[static_cast<std::size_t>(i)] = check(i);
    } catch (const std::exception& e) {
      raw[static_cast<std::size_t>(i)] = std::string("exception: ") + e.what();
    }
  };
  if (exec == kernels::Exec::openmp) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) body(i);
  } else {
    for (long long i = 0; i < n; ++i) body(i);
  }
  SuiteResult result;
  result.name = std::move(name);
  result.checks = n;
  for (const std::string& message : raw) {
    if (message.empty()) continue;
    ++result.failure_count;
    if (result.failures.size() < kMaxReportedFailures) result.failures.push_back(message);
  }
  result.seconds = elapsed_since(start);
  return result;
}

// --- sweep grid ------------------------------------------------------------

// All degree multisets with rank <= 4 and entries in [-3, 3], paired with
// every reduced rational a = u/q, q <= 4, |a| <= 4.
struct SweepCase {
  SplitBundle bundle;
  Rational a;
  long long u = 0;  // a = u/q in lowest terms
  long long q = 1;
};

std::vector<SplitBundle> small_bundles(int max_rank, int min_deg, int max_deg) {
  std::vector<SplitBundle> out;
  std::vector<Int> current;
  const std::function<void(int, int)> extend = [&](int rank_left, int lowest) {
    if (!current.empty()) out.push_back(SplitBundle(current));
    if (rank_left == 0) return;
    for (int d = lowest; d <= max_deg; ++d) {
      current.emplace_back(d);
      extend(rank_left - 1, d);
      current.pop_back();
    }
  };
  extend(max_rank, min_deg);
  return out;
}

std::vector<SweepCase> sweep_grid() {
  std::vector<SweepCase> out;
  const std::vector<SplitBundle> bundles = small_bundles(4, -3, 3);
  for (long long q = 1; q <= 4; ++q) {
    for (long long u = -4 * q; u <= 4 * q; ++u) {
      if (gcd(Int(u), Int(q)) != 1) continue;
      for (const SplitBundle& e : bundles) {
        out.push_back(SweepCase{e, Rational(u, q), u, q});
      }
    }
  }
  return out;
}

Curve genus0_fpbar() { return Curve{0, 2, true}; }

std::vector<std::int64_t> degrees64(const SplitBundle& e) {
  std::vector<std::int64_t> out;
  out.reserve(e.degrees().size());
  for (const Int& d : e.degrees()) out.push_back(static_cast<std::int64_t>(d));
  return out;
}

// --- random helpers ---------------------------------------------------------

struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::uint64_t below(std::uint64_t n) { return engine() % n; }
  long long in_range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  Rational rational(long long max_abs_num, long long max_den) {
    return Rational(in_range(-max_abs_num, max_abs_num), in_range(1, max_den));
  }
};

}  // namespace

// --- criterion 1 -------------------------------------------------------------

SuiteResult oracle_equivalence(kernels::Exec exec) {
  const std::vector<SweepCase> grid = sweep_grid();
  const Curve curve = genus0_fpbar();
  return run_indexed(
      "oracle-equivalence", static_cast<long long>(grid.size()), exec, [&](long long i) -> std::string {
        const SweepCase& cs = grid[static_cast<std::size_t>(i)];
        const DivClass d{FieldElem(1), FieldElem(Rational(-cs.a))};
        const PositivityReport report = classify(d, cs.bundle, curve);
        const std::vector<std::int64_t> degs = degrees64(cs.bundle);
        const std::string label =
            "E=" + [&] {
              std::string s;
              for (const Int& deg : cs.bundle.degrees()) s += deg.str() + ",";
              return s;
            }() + " a=" + emit_rational(cs.a);

        if (!report.q_effective.has_value()) return label + ": q-effectivity undecided";
        const bool sections =
            kernels::h0_sym_twist(degs, cs.q, -cs.u, kernels::Exec::serial) > 0;
        if (*report.q_effective != sections) {
          return label + ": q_effective=" + (*report.q_effective ? "true" : "false") +
                 " but h0(Sym^q twist) " + (sections ? ">" : "=") + " 0";
        }
        if (!report.pseudoeffective) {
          for (long long j = 1; j <= 20; ++j) {
            const std::int64_t h0 =
                kernels::h0_sym_twist(degs, j * cs.q, -j * cs.u, kernels::Exec::serial);
            if (h0 != 0) {
              return label + ": not pseudo-effective but h0 at m=" + std::to_string(j * cs.q) +
                     " is " + std::to_string(h0);
            }
          }
        }
        return {};
      });
}

// --- criterion 2 -------------------------------------------------------------

SuiteResult nef_threshold(kernels::Exec exec) {
  const std::vector<SweepCase> grid = sweep_grid();
  const Curve curve = genus0_fpbar();
  return run_indexed(
      "nef-threshold", static_cast<long long>(grid.size()), exec, [&](long long i) -> std::string {
        const SweepCase& cs = grid[static_cast<std::size_t>(i)];
        const HNProfile profile = hn_profile(cs.bundle);
        const DivClass d{FieldElem(1), FieldElem(Rational(-cs.a))};
        const PositivityReport report = classify(d, profile, curve);
        const bool expected_nef = cs.a <= mu_min(profile);
        if (report.nef != expected_nef) return "nef verdict off threshold at a=" + emit_rational(cs.a);

        // ring consistency: (Theta - aF)^r = deg E - r a
        const int r = cs.bundle.rank();
        const std::vector<DivClass> copies(static_cast<std::size_t>(r), d);
        const FieldElem product = intersection_number(copies, profile);
        const Rational closed = Rational(cs.bundle.degree()) - Rational(r) * cs.a;
        if (product != FieldElem(closed)) return "ring value disagrees with deg E - r a";

        // semistable boundary identity: (Theta - (deg E / r) F)^r = 0 exactly
        const bool semistable = profile.pieces().size() == 1;
        if (semistable) {
          const Rational mu = cs.bundle.slope();
          if (report.nef != (cs.a <= mu)) return "semistable nef boundary not at a=deg";
          const DivClass boundary{FieldElem(1), FieldElem(-mu)};
          const std::vector<DivClass> bcopies(static_cast<std::size_t>(r), boundary);
          if (!intersection_number(bcopies, profile).is_zero()) {
            return "boundary class has nonzero top power";
          }
        }
        return {};
      });
}

// --- criterion 3 -------------------------------------------------------------

SuiteResult sym_vanishing() {
  struct Case {
    SplitBundle e;
    int twist;
    int m;
  };
  std::vector<Case> cases;
  for (const SplitBundle& e : small_bundles(3, -4, -1)) {
    for (int twist = -3; twist <= 0; ++twist) {
      for (int m = 1; m <= 6; ++m) cases.push_back({e, twist, m});
    }
  }
  return run_indexed(
      "sym-vanishing", static_cast<long long>(cases.size()), kernels::Exec::serial,
      [&](long long i) -> std::string {
        const Case& cs = cases[static_cast<std::size_t>(i)];
        if (!sym_vanishing_holds(hn_profile(cs.e), HNPiece{1, Rational(cs.twist)})) {
          return "hypothesis predicate rejected an in-range case";
        }
        const Int h0 = kernels::h0_sym_twist_ref(cs.e, cs.m, Int(cs.twist));
        if (h0 != 0) return "nonzero h0 in the vanishing range: " + h0.str();
        return {};
      });
}

// --- criterion 4 -------------------------------------------------------------

SuiteResult frobenius_planner(std::uint64_t seed) {
  struct Case {
    HNProfile profile;
    Curve curve;
  };
  std::vector<Case> cases;
  Rng rng(seed);
  const long long primes[3] = {2, 3, 5};
  while (cases.size() < 200) {
    const int npieces = static_cast<int>(rng.in_range(1, 4));
    // distinct quarter-integer slopes in [-5, 5]; any two differ by >= 1/4
    std::vector<long long> numerators;
    while (static_cast<int>(numerators.size()) < npieces) {
      const long long n = rng.in_range(-20, 20);
      bool fresh = true;
      for (long long seen : numerators) fresh = fresh && seen != n;
      if (fresh) numerators.push_back(n);
    }
    std::sort(numerators.rbegin(), numerators.rend());
    std::vector<HNPiece> pieces;
    for (long long n : numerators) {
      const int rank = static_cast<int>(rng.in_range(1, 3));
      pieces.push_back(HNPiece{rank, Rational(n, 4) * rank});
    }
    Curve c;
    c.genus = static_cast<int>(rng.in_range(0, 3));
    c.characteristic = primes[rng.below(3)];
    c.over_fpbar = true;
    cases.push_back({HNProfile(std::move(pieces)), c});
  }
  return run_indexed(
      "frobenius-planner", static_cast<long long>(cases.size()), kernels::Exec::serial,
      [&](long long i) -> std::string {
        const Case& cs = cases[static_cast<std::size_t>(i)];
        const int m = splitting_frobenius_power(cs.profile, cs.curve);
        const Rational omega(cs.curve.canonical_degree());
        const auto holds_at = [&](int power) {
          Int factor = 1;
          for (int k = 0; k < power; ++k) factor *= cs.curve.characteristic;
          for (std::size_t p = 0; p + 1 < cs.profile.pieces().size(); ++p) {
            const Rational gap =
                cs.profile.pieces()[p + 1].slope() - cs.profile.pieces()[p].slope();
            if (!(Rational(factor) * gap + omega < 0)) return false;
          }
          return true;
        };
        if (cs.profile.pieces().size() < 2) {
          return m == 0 ? std::string{} : "single piece must need no splitting power";
        }
        if (!holds_at(m)) return "returned power fails the slope inequality";
        if (m >= 1 && holds_at(m - 1)) return "returned power is not minimal";
        return {};
      });
}

// --- criterion 5 -------------------------------------------------------------

SuiteResult rationalizer(std::uint64_t seed) {
  std::vector<EffectivityInstance> instances;
  Rng rng(seed);
  while (instances.size() < 100) {
    const Int d = instances.size() % 2 == 0 ? 2 : 7;
    const std::size_t slots = static_cast<std::size_t>(rng.in_range(2, 6));
    const std::size_t nprin = static_cast<std::size_t>(rng.in_range(1, 3));
    EffectivityInstance inst;
    inst.principals.assign(nprin, std::vector<Rational>(slots, Rational(0)));
    std::vector<bool> forced(slots, false);
    for (std::size_t s = 0; s < slots; ++s) forced[s] = rng.below(4) == 0;
    for (std::size_t j = 0; j < nprin; ++j) {
      for (std::size_t s = 0; s < slots; ++s) {
        if (!forced[s]) inst.principals[j][s] = rng.rational(3, 2);
      }
      FieldElem a(rng.rational(2, 2), rng.rational(2, 2), d);
      if (j == 0 && a.is_rational()) a = FieldElem(a.rational_part(), Rational(1, 2), d);
      inst.coeffs.push_back(a);
    }
    inst.d_prime.assign(slots, Rational(0));
    for (std::size_t s = 0; s < slots; ++s) {
      if (forced[s]) continue;
      FieldElem value(0);
      for (std::size_t j = 0; j < nprin; ++j) {
        value += inst.coeffs[j] * FieldElem(inst.principals[j][s]);
      }
      // strictly above -value, plus occasional extra slack
      inst.d_prime[s] = Rational(floor_int(-value) + 1) + Rational(rng.in_range(0, 2), 2);
    }
    instances.push_back(std::move(inst));
  }
  return run_indexed(
      "rationalizer", static_cast<long long>(instances.size()), kernels::Exec::serial,
      [&](long long i) -> std::string {
        const EffectivityInstance& inst = instances[static_cast<std::size_t>(i)];
        inst.validate();
        const std::vector<std::size_t> forced = zero_row_forcing(inst);
        for (std::size_t slot : forced) {
          if (inst.d_prime[slot] != 0) return "forced slot with nonzero d'";
          for (const auto& p : inst.principals) {
            if (p[slot] != 0) return "forced slot with nonzero principal column";
          }
        }
        const std::vector<Rational> a_prime = rationalize(inst);
        if (a_prime.size() != inst.coeffs.size()) return "wrong coefficient count";
        for (std::size_t s = 0; s < inst.d_prime.size(); ++s) {
          Rational value = inst.d_prime[s];
          for (std::size_t j = 0; j < a_prime.size(); ++j) {
            value += a_prime[j] * inst.principals[j][s];
          }
          if (value < 0) return "rationalized output fails exact re-verification";
        }
        // the admissible region the rationalizer searched is nonempty
        LinearSystem sys;
        for (std::size_t s = 0; s < inst.d_prime.size(); ++s) {
          LinearRow row;
          for (const auto& p : inst.principals) row.coeffs.push_back(p[s]);
          row.rel = Relation::ge;
          row.bound = -inst.d_prime[s];
          sys.rows.push_back(std::move(row));
        }
        const Feasibility feas = fm_feasible(sys);
        if (!feas.feasible) return "feasibility kernel disagrees (infeasible)";
        for (std::size_t s = 0; s < inst.d_prime.size(); ++s) {
          Rational value = inst.d_prime[s];
          for (std::size_t j = 0; j < feas.witness.size(); ++j) {
            value += feas.witness[j] * inst.principals[j][s];
          }
          if (value < 0) return "feasibility witness fails its own rows";
        }
        return {};
      });
}

// --- criteria 6 and 7 --------------------------------------------------------

namespace {

NSLattice example_lattice() {
  NSLattice lat;
  lat.rho = 3;
  lat.anchor_square = 2;
  lat.negatives = {Int(1), Int(1)};
  return lat;
}

// Deterministic cone point with coordinates in Q(sqrt(7)): shrink the
// space-like part until membership holds.
NSClass sample_cone_point(const NSLattice& lat, std::uint64_t seed) {
  Rng rng(seed);
  NSClass x;
  x.coords.assign(static_cast<std::size_t>(lat.rho), FieldElem(0));
  x.coords[0] = FieldElem(Rational(rng.in_range(1, 9), rng.in_range(1, 3)));
  for (int i = 1; i < lat.rho; ++i) {
    Rational rat = rng.rational(4, 3);
    Rational rad = rng.below(3) == 0 ? Rational(0) : rng.rational(2, 3);
    x.coords[static_cast<std::size_t>(i)] = rad == 0 ? FieldElem(rat) : FieldElem(rat, rad, 7);
  }
  const FieldElem half(Rational(1, 2));
  for (int guard = 0; guard < 128 && !nef_membership(lat, x); ++guard) {
    for (int i = 1; i < lat.rho; ++i) x.coords[static_cast<std::size_t>(i)] *= half;
  }
  return x;
}

bool coords_proportional(const NSClass& x, const NSClass& y) {
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    for (std::size_t j = i + 1; j < x.coords.size(); ++j) {
      if (x.coords[i] * y.coords[j] != x.coords[j] * y.coords[i]) return false;
    }
  }
  return true;
}

}  // namespace

SuiteResult counterexample_certificate(std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult result;
  result.name = "counterexample-certificate";
  const NSLattice lat = example_lattice();
  auto record = [&](bool ok, const std::string& message) {
    ++result.checks;
    if (ok) return;
    ++result.failure_count;
    if (result.failures.size() < kMaxReportedFailures) result.failures.push_back(message);
  };

  try {
    const Counterexample ce = build_counterexample(lat, Rational(1, 2));
    record(ce.cls.coords[0] == FieldElem(1) && ce.cls.coords[1] == FieldElem(Rational(1, 2)) &&
               ce.cls.coords[2] == FieldElem(0, Rational(1, 2), 7),
           "expected class (1, 1/2, sqrt(7)/2)");
    record(ce.radicand == 7, "expected radicand 7");
    record(pairing(lat, ce.cls, ce.cls).is_zero(), "self-pairing must vanish exactly");
    record(nef_membership(lat, ce.cls), "class must lie in the cone");
    record(!ray_is_rational(ce.cls), "ray must be irrational");

    const SupportFunctional h = support_functional(lat, ce.cls);
    record(h(ce.cls).is_zero(), "H(D) must vanish exactly");
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const NSClass x = sample_cone_point(lat, seed + i);
      record(h(x).sign() >= 0, "H negative on a cone sample");
    }
    for (std::uint64_t i = 0; i < 50; ++i) {
      Rng rng(seed ^ (0x9e3779b97f4a7c15ULL + i));
      const FieldElem scale(Rational(rng.in_range(1, 12), rng.in_range(1, 5)));
      NSClass multiple = ce.cls;
      for (FieldElem& c : multiple.coords) c *= scale;
      record(h(multiple).is_zero(), "H nonzero on a multiple of D");
    }
  } catch (const std::exception& e) {
    ++result.checks;
    ++result.failure_count;
    result.failures.push_back(std::string("exception: ") + e.what());
  }
  result.seconds = elapsed_since(start);
  return result;
}

SuiteResult cauchy_schwarz(std::uint64_t seed) {
  const auto start = Clock::now();
  SuiteResult result;
  result.name = "cauchy-schwarz";
  const NSLattice lat = example_lattice();
  auto record = [&](bool ok, const std::string& message) {
    ++result.checks;
    if (ok) return;
    ++result.failure_count;
    if (result.failures.size() < kMaxReportedFailures) result.failures.push_back(message);
  };

  try {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const NSClass x = sample_cone_point(lat, seed + 2 * i);
      const NSClass y = sample_cone_point(lat, seed + 2 * i + 1);
      const FieldElem product = pairing(lat, x, y);
      record(product.sign() >= 0, "negative pairing of two cone classes");
      if (product.is_zero() && !x.is_zero() && !y.is_zero()) {
        record(coords_proportional(x, y), "equality case with non-proportional coordinates");
      }
    }
    // engineered equality cases: multiples along boundary rays, one
    // irrational and one rational
    const Counterexample ce = build_counterexample(lat, Rational(1, 2));
    NSClass rational_boundary;
    rational_boundary.coords = {FieldElem(5), FieldElem(5), FieldElem(5)};
    record(pairing(lat, rational_boundary, rational_boundary).is_zero(),
           "rational boundary class must have zero square");
    for (std::uint64_t i = 0; i < 50; ++i) {
      Rng rng(seed ^ (0xda942042e4dd58b5ULL + i));
      const FieldElem s1(Rational(rng.in_range(1, 9), rng.in_range(1, 4)));
      const FieldElem s2(Rational(rng.in_range(1, 9), rng.in_range(1, 4)));
      for (const NSClass& base : {ce.cls, rational_boundary}) {
        NSClass x = base, y = base;
        for (FieldElem& c : x.coords) c *= s1;
        for (FieldElem& c : y.coords) c *= s2;
        const FieldElem product = pairing(lat, x, y);
        record(product.is_zero(), "boundary-ray pair must pair to zero");
        record(coords_proportional(x, y), "ray multiples must be proportional");
      }
    }
    // mirror class pairs strictly positively
    NSClass mirror = ce.cls;
    mirror.coords[2] = -mirror.coords[2];
    record(pairing(lat, ce.cls, mirror) == FieldElem(Rational(7, 2)),
           "mirror pairing must be 7/2");
  } catch (const std::exception& e) {
    ++result.checks;
    ++result.failure_count;
    result.failures.push_back(std::string("exception: ") + e.what());
  }
  result.seconds = elapsed_since(start);
  return result;
}

// --- criterion 8 -------------------------------------------------------------

SuiteResult cover_invariance(kernels::Exec exec) {
  const std::vector<SweepCase> grid = sweep_grid();
  const Curve curve = genus0_fpbar();
  return run_indexed(
      "cover-invariance", static_cast<long long>(grid.size()), exec, [&](long long i) -> std::string {
        const SweepCase& cs = grid[static_cast<std::size_t>(i)];
        const HNProfile profile = hn_profile(cs.bundle);
        const DivClass d{FieldElem(1), FieldElem(Rational(-cs.a))};
        for (int n : {2, 3}) {
          if (!pullback_invariance_check(d, profile, n, curve)) {
            return "verdicts change under a degree-" + std::to_string(n) + " cover at a=" +
                   emit_rational(cs.a);
          }
        }
        return {};
      });
}

std::vector<SuiteResult> run_all(kernels::Exec exec) {
  std::vector<SuiteResult> results;
  results.push_back(oracle_equivalence(exec));
  results.push_back(nef_threshold(exec));
  results.push_back(sym_vanishing());
  results.push_back(frobenius_planner(0x5eed0004));
  results.push_back(rationalizer(0x5eed0005));
  results.push_back(counterexample_certificate(0x5eed0006));
  results.push_back(cauchy_schwarz(0x5eed0007));
  results.push_back(cover_invariance(exec));
  return results;
}

std::string selftest_report(kernels::Exec exec) {
  std::string out;
  bool all_passed = true;
  for (const SuiteResult& r : run_all(exec)) {
    out += "suite " + r.name + ": " + (r.passed() ? "PASS" : "FAIL") +
           " (checks=" + std::to_string(r.checks) + ")\n";
    for (const std::string& f : r.failures) out += "  failure: " + f + "\n";
    if (!r.passed() && r.failure_count > static_cast<long long>(r.failures.size())) {
      out += "  ... " + std::to_string(r.failure_count - static_cast<long long>(r.failures.size())) +
             " more\n";
    }
    all_passed = all_passed && r.passed();
  }
  out += all_passed ? "selftest: PASS\n" : "selftest: FAIL\n";
  return out;
}

}  // namespace divpos::suites
