#include "divpos/bundle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace divpos {

namespace {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int out = 1;
  for (Int i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

// Rank of a derived bundle must stay materializable.
constexpr long long kMaxSummands = 20'000'000;

}  // namespace

void Curve::validate() const {
  if (genus < 0) fail(ErrorCode::SchemaError, "genus must be nonnegative");
  if (characteristic != 0 && !is_prime(characteristic)) {
    fail(ErrorCode::SchemaError, "characteristic must be 0 or prime, got " + characteristic.str());
  }
  if (over_fpbar && characteristic == 0) {
    fail(ErrorCode::SchemaError, "a curve over the closure of a finite field has prime characteristic");
  }
}

SplitBundle::SplitBundle(std::vector<Int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) fail(ErrorCode::PreconditionViolated, "split bundle needs at least one summand");
}

SplitBundle::SplitBundle(std::initializer_list<int> degrees) {
  for (int d : degrees) degrees_.emplace_back(d);
  if (degrees_.empty()) fail(ErrorCode::PreconditionViolated, "split bundle needs at least one summand");
}

Int SplitBundle::degree() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), Int(0));
}

bool SplitBundle::same_summands(const SplitBundle& other) const {
  std::vector<Int> a = degrees_, b = other.degrees_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

HNProfile::HNProfile(std::vector<HNPiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) fail(ErrorCode::PreconditionViolated, "profile needs at least one piece");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].rank <= 0) fail(ErrorCode::PreconditionViolated, "piece ranks must be positive");
    if (i > 0 && !(pieces_[i - 1].slope() > pieces_[i].slope())) {
      fail(ErrorCode::PreconditionViolated, "profile slopes must be strictly decreasing");
    }
  }
}

int HNProfile::total_rank() const {
  int r = 0;
  for (const auto& p : pieces_) r += p.rank;
  return r;
}

Rational HNProfile::total_degree() const {
  Rational d = 0;
  for (const auto& p : pieces_) d += p.degree;
  return d;
}

bool HNProfile::operator==(const HNProfile& other) const {
  if (pieces_.size() != other.pieces_.size()) return false;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].rank != other.pieces_[i].rank) return false;
    if (pieces_[i].degree != other.pieces_[i].degree) return false;
  }
  return true;
}

HNProfile hn_profile(const SplitBundle& e) {
  std::map<Int, int, std::greater<Int>> multiplicity;
  for (const Int& d : e.degrees()) ++multiplicity[d];
  std::vector<HNPiece> pieces;
  pieces.reserve(multiplicity.size());
  for (const auto& [deg, count] : multiplicity) {
    pieces.push_back({count, Rational(deg * count)});
  }
  return HNProfile(std::move(pieces));
}

Rational mu_max(const HNProfile& p) { return p.pieces().front().slope(); }
Rational mu_min(const HNProfile& p) { return p.pieces().back().slope(); }

namespace {

// Exponent vectors k_1 + ... + k_r = m, degree of each monomial collected.
void sym_degrees(const std::vector<Int>& d, std::size_t idx, int left, const Int& acc,
                 std::vector<Int>& out) {
  if (idx + 1 == d.size()) {
    out.push_back(acc + Int(left) * d[idx]);
    return;
  }
  for (int k = 0; k <= left; ++k) {
    sym_degrees(d, idx + 1, left - k, acc + Int(k) * d[idx], out);
  }
}

}  // namespace

SplitBundle sym_power(const SplitBundle& e, int m) {
  if (m < 1) fail(ErrorCode::PreconditionViolated, "symmetric power needs m >= 1");
  const Int count = binomial(Int(e.rank()) + m - 1, Int(m));
  if (count > kMaxSummands) {
    fail(ErrorCode::PreconditionViolated,
         "Sym^" + std::to_string(m) + " has " + count.str() + " summands");
  }
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(count));
  sym_degrees(e.degrees(), 0, m, Int(0), out);
  std::sort(out.begin(), out.end(), std::greater<Int>());
  return SplitBundle(std::move(out));
}

SplitBundle tensor(const SplitBundle& e, const SplitBundle& g) {
  const Int count = Int(e.rank()) * g.rank();
  if (count > kMaxSummands) fail(ErrorCode::PreconditionViolated, "tensor product too large");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(count));
  for (const Int& a : e.degrees()) {
    for (const Int& b : g.degrees()) out.push_back(a + b);
  }
  std::sort(out.begin(), out.end(), std::greater<Int>());
  return SplitBundle(std::move(out));
}

HNProfile pullback_cover(const HNProfile& p, int n) {
  if (n < 1) fail(ErrorCode::PreconditionViolated, "cover degree must be >= 1");
  std::vector<HNPiece> pieces = p.pieces();
  for (auto& piece : pieces) piece.degree *= n;
  return HNProfile(std::move(pieces));
}

HNProfile frobenius_pullback(const HNProfile& p, int m, const Curve& c) {
  if (m < 0) fail(ErrorCode::PreconditionViolated, "Frobenius power must be nonnegative");
  if (c.characteristic == 0) fail(ErrorCode::CharZero, "Frobenius pullback needs positive characteristic");
  Int factor = 1;
  for (int i = 0; i < m; ++i) factor *= c.characteristic;
  std::vector<HNPiece> pieces = p.pieces();
  for (auto& piece : pieces) piece.degree *= Rational(factor);
  return HNProfile(std::move(pieces));
}

int splitting_frobenius_power(const HNProfile& p, const Curve& c) {
  if (c.characteristic == 0) fail(ErrorCode::CharZero, "splitting power needs positive characteristic");
  if (p.pieces().size() < 2) return 0;
  const Rational omega(c.canonical_degree());
  std::vector<Rational> gaps;  // mu_{i+1} - mu_i < 0
  for (std::size_t i = 0; i + 1 < p.pieces().size(); ++i) {
    gaps.push_back(p.pieces()[i + 1].slope() - p.pieces()[i].slope());
  }
  Int power = 1;
  for (int m = 0;; ++m) {
    bool ok = true;
    for (const Rational& gap : gaps) {
      if (!(Rational(power) * gap + omega < 0)) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
    power *= c.characteristic;
  }
}

Int h0_genus0(const SplitBundle& e) {
  Int total = 0;
  for (const Int& d : e.degrees()) {
    if (d >= 0) total += d + 1;
  }
  return total;
}

bool sym_vanishing_holds(const HNProfile& p, const HNPiece& g) {
  for (const auto& piece : p.pieces()) {
    if (!(piece.degree < 0)) return false;
  }
  return g.degree <= 0;
}

}  // namespace divpos
