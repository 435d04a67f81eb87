#include "divpos/rationalize.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace divpos {

void EffectivityInstance::validate() const {
  if (principals.size() != coeffs.size()) {
    fail(ErrorCode::DimensionMismatch, "one coefficient per principal divisor required");
  }
  for (const auto& p : principals) {
    if (p.size() != d_prime.size()) {
      fail(ErrorCode::DimensionMismatch, "principal vectors must match the slot count");
    }
  }
  for (const FieldElem& value : combined()) {
    if (value.sign() < 0) {
      fail(ErrorCode::PreconditionViolated, "instance is not effective: slot value " + value.str());
    }
  }
}

std::vector<FieldElem> EffectivityInstance::combined() const {
  std::vector<FieldElem> out;
  out.reserve(d_prime.size());
  for (std::size_t slot = 0; slot < d_prime.size(); ++slot) {
    FieldElem value(d_prime[slot]);
    for (std::size_t j = 0; j < principals.size(); ++j) {
      value += coeffs[j] * FieldElem(principals[j][slot]);
    }
    out.push_back(std::move(value));
  }
  return out;
}

NormalizedBasis normalize_basis(const std::vector<FieldElem>& b) {
  if (b.empty()) fail(ErrorCode::PreconditionViolated, "normalize_basis needs at least one element");
  Int d = 0;
  for (const FieldElem& x : b) {
    if (!x.is_rational()) {
      if (d != 0 && d != x.radicand()) fail(ErrorCode::MixedRadicand, "mixed radicands in basis input");
      d = x.radicand();
    }
  }

  // Integer row lattice of the (radical, rational) coordinates over a
  // common denominator; two Hermite pivots give the basis.
  Int common = 1;
  for (const FieldElem& x : b) {
    common = lcm(common, denominator(x.rational_part()));
    common = lcm(common, denominator(x.radical_part()));
  }
  struct Row { Int rad, rat; };
  std::vector<Row> rows;
  rows.reserve(b.size());
  for (const FieldElem& x : b) {
    rows.push_back({numerator(x.radical_part()) * (common / denominator(x.radical_part())),
                    numerator(x.rational_part()) * (common / denominator(x.rational_part()))});
  }

  // Euclid on the radical column.
  Row rad_pivot{0, 0};
  std::vector<Int> rational_leftovers;
  for (const Row& row : rows) {
    Row r = row;
    while (r.rad != 0) {
      if (rad_pivot.rad == 0) {
        std::swap(rad_pivot, r);
        continue;
      }
      const Int q = r.rad / rad_pivot.rad;
      r.rad -= q * rad_pivot.rad;
      r.rat -= q * rad_pivot.rat;
      if (r.rad != 0) std::swap(rad_pivot, r);
    }
    if (r.rat != 0) rational_leftovers.push_back(r.rat);
  }
  if (rad_pivot.rad < 0) { rad_pivot.rad = -rad_pivot.rad; rad_pivot.rat = -rad_pivot.rat; }

  Int rat_pivot = 0;
  for (const Int& v : rational_leftovers) rat_pivot = gcd(rat_pivot, v);

  // Reduce the irrational pivot's rational coordinate against the
  // rational pivot for a canonical pair.
  if (rat_pivot != 0 && rad_pivot.rad != 0) {
    Int q = rad_pivot.rat / rat_pivot;
    rad_pivot.rat -= q * rat_pivot;
    if (rad_pivot.rat < 0) rad_pivot.rat += rat_pivot;
  }

  NormalizedBasis out;
  if (rat_pivot != 0) out.basis.emplace_back(Rational(rat_pivot, common));
  if (rad_pivot.rad != 0) {
    out.basis.emplace_back(Rational(rad_pivot.rat, common), Rational(rad_pivot.rad, common), d);
  }

  for (const Row& row : rows) {
    std::vector<Int> coord;
    Int c_rad = 0, rest = row.rat;
    if (rad_pivot.rad != 0) {
      c_rad = row.rad / rad_pivot.rad;
      rest -= c_rad * rad_pivot.rat;
    }
    if (rat_pivot != 0) {
      coord.push_back(rest / rat_pivot);
      if (coord.back() * rat_pivot != rest) fail(ErrorCode::Internal, "non-integral basis coordinate");
    } else if (rest != 0) {
      fail(ErrorCode::Internal, "rational residue without a rational pivot");
    }
    if (rad_pivot.rad != 0) {
      if (c_rad * rad_pivot.rad != row.rad) fail(ErrorCode::Internal, "non-integral basis coordinate");
      coord.push_back(c_rad);
    }
    out.coords.push_back(std::move(coord));
  }
  return out;
}

std::vector<std::size_t> zero_row_forcing(const EffectivityInstance& inst) {
  const std::vector<FieldElem> values = inst.combined();
  std::vector<std::size_t> forced;
  for (std::size_t slot = 0; slot < values.size(); ++slot) {
    if (values[slot].sign() < 0) {
      fail(ErrorCode::PreconditionViolated, "instance is not effective at slot " + std::to_string(slot));
    }
    if (!values[slot].is_zero()) continue;
    bool entry_nonzero = inst.d_prime[slot] != 0;
    for (const auto& p : inst.principals) entry_nonzero = entry_nonzero || p[slot] != 0;
    if (entry_nonzero) {
      fail(ErrorCode::IndependenceViolated,
           "slot " + std::to_string(slot) +
               " combines to zero with nonzero entries; the declared independence is false");
    }
    forced.push_back(slot);
  }
  return forced;
}

std::vector<Rational> rationalize(const EffectivityInstance& inst) {
  inst.validate();
  const std::vector<std::size_t> forced = zero_row_forcing(inst);

  bool all_rational = true;
  for (const FieldElem& a : inst.coeffs) all_rational = all_rational && a.is_rational();
  if (all_rational) {
    std::vector<Rational> out;
    for (const FieldElem& a : inst.coeffs) out.push_back(a.rational_part());
    return out;
  }

  // Minimal strict slack over the non-forced slots, then a uniform
  // per-coefficient tolerance s / (r * max row norm).
  const std::vector<FieldElem> values = inst.combined();
  std::vector<bool> is_forced(values.size(), false);
  for (std::size_t slot : forced) is_forced[slot] = true;

  FieldElem slack(0);
  bool have_slack = false;
  for (std::size_t slot = 0; slot < values.size(); ++slot) {
    if (is_forced[slot]) continue;
    if (!have_slack || values[slot] < slack) {
      slack = values[slot];
      have_slack = true;
    }
  }

  Rational max_norm = 0;
  for (const auto& p : inst.principals) {
    for (const Rational& entry : p) {
      const Rational mag = entry < 0 ? Rational(-entry) : entry;
      if (mag > max_norm) max_norm = mag;
    }
  }

  FieldElem tolerance(1);
  if (have_slack && max_norm != 0) {
    tolerance = slack / FieldElem(Rational(Int(inst.coeffs.size())) * max_norm);
  }

  std::vector<Rational> out;
  out.reserve(inst.coeffs.size());
  for (const FieldElem& a : inst.coeffs) out.push_back(continued_fraction_approx(a, tolerance));

  // Exact re-verification; the tolerance argument guarantees this.
  for (std::size_t slot = 0; slot < inst.d_prime.size(); ++slot) {
    Rational value = inst.d_prime[slot];
    for (std::size_t j = 0; j < out.size(); ++j) value += out[j] * inst.principals[j][slot];
    if (value < 0) fail(ErrorCode::Internal, "rationalized coefficients fail re-verification");
  }
  return out;
}

namespace {

struct WorkRow {
  std::vector<Rational> coeffs;
  Rational bound;
  bool strict = false;
};

// Canonical integral form for deduplication: primitive integer coefficient
// vector with the bound scaled along.
void normalize_row(WorkRow& row) {
  Int den = denominator(row.bound);
  for (const Rational& c : row.coeffs) den = lcm(den, denominator(c));
  Int g = 0;
  for (const Rational& c : row.coeffs) g = gcd(g, numerator(c) * (den / denominator(c)));
  if (g == 0) return;  // constant row, leave as is
  const Rational scale(den, g);
  for (Rational& c : row.coeffs) c *= scale;
  row.bound *= scale;
}

WorkRow combine(const WorkRow& lower, const WorkRow& upper, std::size_t var) {
  // lower has coeffs[var] > 0, upper has coeffs[var] < 0; cancel the variable.
  const Rational lo = lower.coeffs[var];
  const Rational hi = -upper.coeffs[var];
  WorkRow out;
  out.coeffs.resize(lower.coeffs.size());
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] = lower.coeffs[i] * hi + upper.coeffs[i] * lo;
  }
  out.coeffs[var] = 0;
  out.bound = lower.bound * hi + upper.bound * lo;
  out.strict = lower.strict || upper.strict;
  normalize_row(out);
  return out;
}

bool constant_row_holds(const WorkRow& row) {
  return row.strict ? row.bound < 0 : row.bound <= 0;
}

bool is_constant(const WorkRow& row) {
  for (const Rational& c : row.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace

Feasibility fm_feasible(const LinearSystem& sys) {
  if (sys.rows.empty()) fail(ErrorCode::PreconditionViolated, "empty system");
  std::size_t nvars = 0;
  for (const LinearRow& row : sys.rows) nvars = std::max(nvars, row.coeffs.size());

  std::vector<WorkRow> current;
  current.reserve(sys.rows.size());
  for (const LinearRow& row : sys.rows) {
    WorkRow w;
    w.coeffs = row.coeffs;
    w.coeffs.resize(nvars, Rational(0));
    w.bound = row.bound;
    w.strict = row.rel == Relation::gt;
    normalize_row(w);
    current.push_back(std::move(w));
  }

  // stages[k]: rows mentioning only x_0..x_k, produced while eliminating
  // from the highest variable down.
  std::vector<std::vector<WorkRow>> stages(nvars + 1);
  stages[nvars] = std::move(current);

  for (std::size_t var = nvars; var-- > 0;) {
    std::vector<const WorkRow*> lowers, uppers;
    std::map<std::pair<std::vector<Rational>, bool>, Rational> best;
    auto keep = [&](WorkRow&& row) {
      auto key = std::make_pair(std::move(row.coeffs), row.strict);
      auto it = best.find(key);
      if (it == best.end()) best.emplace(std::move(key), std::move(row.bound));
      else if (row.bound > it->second) it->second = row.bound;  // tighter lower bound wins
    };
    for (const WorkRow& row : stages[var + 1]) {
      const int s = sign_of(row.coeffs[var]);
      if (s > 0) lowers.push_back(&row);
      else if (s < 0) uppers.push_back(&row);
      else keep(WorkRow(row));
    }
    for (const WorkRow* lo : lowers) {
      for (const WorkRow* hi : uppers) keep(combine(*lo, *hi, var));
    }
    for (auto& [key, bound] : best) {
      WorkRow row;
      row.coeffs = key.first;
      row.strict = key.second;
      row.bound = bound;
      if (is_constant(row) && !constant_row_holds(row)) return {};
      stages[var].push_back(std::move(row));
    }
  }

  for (const WorkRow& row : stages[0]) {
    if (is_constant(row) && !constant_row_holds(row)) return {};
  }

  // Back-substitute from x_0 upward; each stage only mentions earlier
  // variables plus the one being assigned.
  Feasibility result;
  result.feasible = true;
  result.witness.assign(nvars, Rational(0));
  for (std::size_t var = 0; var < nvars; ++var) {
    bool have_lo = false, have_hi = false, lo_strict = false, hi_strict = false;
    Rational lo, hi;
    for (const WorkRow& row : stages[var + 1]) {
      const int s = sign_of(row.coeffs[var]);
      if (s == 0) continue;
      Rational value = row.bound;
      for (std::size_t i = 0; i < var; ++i) value -= row.coeffs[i] * result.witness[i];
      value /= row.coeffs[var];
      if (s > 0) {
        if (!have_lo || value > lo) { lo = value; lo_strict = row.strict; have_lo = true; }
        else if (value == lo && row.strict) lo_strict = true;
      } else {
        if (!have_hi || value < hi) { hi = value; hi_strict = row.strict; have_hi = true; }
        else if (value == hi && row.strict) hi_strict = true;
      }
    }
    Rational pick = 0;
    if (have_lo && have_hi) {
      if (lo == hi) {
        if (lo_strict || hi_strict) fail(ErrorCode::Internal, "elimination missed an empty interval");
        pick = lo;
      } else {
        pick = (lo + hi) / 2;
      }
    } else if (have_lo) {
      pick = lo_strict ? lo + 1 : lo;
    } else if (have_hi) {
      pick = hi_strict ? hi - 1 : hi;
    }
    result.witness[var] = pick;
  }
  return result;
}

}  // namespace divpos
