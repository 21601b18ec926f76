#ifndef JACRED_UPOLY_HPP
#define JACRED_UPOLY_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jacred/mpoly.hpp"

namespace jacred {

/// Dense univariate polynomial over Q, coefficients from degree 0 upward.
class UPoly {
 public:
  UPoly() : var_("x") {}
  explicit UPoly(std::string var) : var_(std::move(var)) {}
  UPoly(std::string var, std::vector<Rat> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) { trim(); }

  static UPoly constant(std::string var, const Rat& c) { return UPoly(std::move(var), {c}); }
  static UPoly monomial(std::string var, std::size_t deg, const Rat& c) {
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return UPoly(std::move(var), std::move(v));
  }
  /// The monic linear factor (var - root).
  static UPoly linear_factor(std::string var, const Rat& root) { return UPoly(std::move(var), {-root, 1}); }

  const std::string& var() const { return var_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Degree degree() const {
    if (c_.empty()) return Degree::neg_infinity();
    return static_cast<int>(c_.size() - 1);
  }
  Rat coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading_coefficient() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat evaluate(const Rat& at) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return UPoly(var_, std::move(d));
  }

  UPoly monic() const {
    if (c_.empty()) return *this;
    return *this * Rat(1 / c_.back());
  }

  UPoly operator-() const { return *this * Rat(-1); }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    check_var(a, b);
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(a.var_, std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    check_var(a, b);
    if (a.is_zero() || b.is_zero()) return UPoly(a.var_);
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(a.var_, std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const Rat& s) {
    if (s == 0) return UPoly(a.var_);
    UPoly r = a;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.var_ == b.var_ && a.c_ == b.c_; }

  /// Euclidean division; b must be nonzero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    check_var(a, b);
    if (b.is_zero()) throw InputError("polynomial division by zero");
    UPoly rem = a;
    if (a.c_.size() < b.c_.size()) return {UPoly(a.var_), rem};
    std::vector<Rat> q(a.c_.size() - b.c_.size() + 1, Rat(0));
    const Rat inv_lead = 1 / b.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
      const Rat c = rem.coefficient(k + b.c_.size() - 1) * inv_lead;
      q[k] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem.c_[k + j] -= c * b.c_[j];
    }
    rem.trim();
    return {UPoly(a.var_, std::move(q)), rem};
  }

 private:
  static void check_var(const UPoly& a, const UPoly& b) {
    if (a.var_ != b.var_) throw InputError("univariate variable mismatch: " + a.var_ + " vs " + b.var_);
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::string var_;
  std::vector<Rat> c_;
};

inline UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

/// Quotient that must have zero remainder.
inline UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("inexact univariate division");
  return q;
}

/// Monic gcd (zero when both inputs are zero).
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

struct ExtendedGcd {
  UPoly gcd;  ///< monic
  UPoly s;
  UPoly t;    ///< s*a + t*b = gcd
};

inline ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
  const std::string& v = a.var();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(v, 1), s1(v);
  UPoly t0(v), t1 = UPoly::constant(v, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rat inv = 1 / r0.leading_coefficient();
  return {r0 * inv, s0 * inv, t0 * inv};
}

inline bool is_squarefree(const UPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

/// Product of the distinct monic irreducible factors of p.
inline UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) return p;
  UPoly g = gcd(p, p.derivative());
  return exact_quotient(p, g).monic();
}

namespace detail {

inline int sign_changes(const std::vector<UPoly>& chain, const Rat& at) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sgn(p.evaluate(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Distinct rational roots in ascending order. The zero polynomial is rejected.
/// Real roots of the squarefree part are isolated with a Sturm chain until each
/// interval is narrower than 1/L (L = leading coefficient of the primitive
/// integer form); any rational root is then k/L for an integer k in the interval.
inline std::vector<Rat> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw InputError("rational roots of the zero polynomial");
  if (p.degree() == 0) return {};
  const UPoly q = squarefree_part(p);
  Int den_lcm = 1;
  for (const auto& a : q.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den_mpz_t());
  const Int lead = abs(Int(Rat(q.leading_coefficient() * den_lcm)));

  std::vector<UPoly> chain{q, q.derivative()};
  while (chain.back().degree() > 0) {
    UPoly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }

  Rat bound = 0;
  for (const auto& a : q.coeffs()) bound = std::max(bound, Rat(abs(a)));
  bound = bound / abs(q.leading_coefficient()) + 2;

  std::set<Rat> roots;
  auto test = [&](const Rat& c) {
    if (q.evaluate(c) == 0) roots.insert(c);
  };
  const Rat resolution = Rat(1) / Rat(lead);
  // Work list of (lo, hi) with nonroot endpoints.
  std::vector<std::pair<Rat, Rat>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int count = detail::sign_changes(chain, lo) - detail::sign_changes(chain, hi);
    if (count == 0) continue;
    if (count == 1 && hi - lo < resolution) {
      Rat klo = lo * Rat(lead), khi = hi * Rat(lead);
      Int k = klo.get_num() / klo.get_den();
      for (; Rat(k) <= khi; ++k) test(make_rat(k, lead));
      continue;
    }
    // Split at a nonroot near the midpoint; a root hit on the way is recorded.
    Rat mid = (lo + hi) / 2;
    for (int attempt = 1; q.evaluate(mid) == 0; ++attempt) {
      roots.insert(mid);
      mid = lo + (hi - lo) * make_rat(attempt + 1, 2 * attempt + 3);
    }
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  return {roots.begin(), roots.end()};
}

/// Embeds a univariate polynomial into a multivariate ring as a polynomial in `var`.
inline MPoly to_mpoly(const UPoly& p, const Ring& ring, std::string_view var) {
  const std::size_t idx = ring.index(var);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    Monomial m(ring.size());
    m[idx] = static_cast<std::uint32_t>(i);
    terms.push_back({m, p.coeffs()[i]});
  }
  return MPoly::from_terms(ring, std::move(terms));
}
inline MPoly to_mpoly(const UPoly& p, const Ring& ring) { return to_mpoly(p, ring, p.var()); }

/// Univariate view of f; nullopt when f involves a variable other than `var`.
inline std::optional<UPoly> to_upoly(const MPoly& f, std::string_view var) {
  const auto idx = f.ring().find(var);
  std::vector<Rat> c;
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < f.ring().size(); ++i)
      if (t.mono[i] != 0 && (!idx || i != *idx)) return std::nullopt;
    const std::size_t e = idx ? t.mono[*idx] : 0;
    if (c.size() <= e) c.resize(e + 1, Rat(0));
    c[e] = t.coeff;
  }
  return UPoly(std::string(var), std::move(c));
}

struct BezoutPair {
  UPoly lambda;
  UPoly mu;  ///< r*mu + r'*lambda = 1
};

/// Solves r*mu + r'*lambda = 1 with deg lambda <= deg r - 1 and deg mu <= deg r - 2.
inline BezoutPair extended_euclid_bounded(const UPoly& r) {
  if (r.degree() < 1) throw InputError("extended_euclid_bounded needs deg r >= 1");
  const UPoly dr = r.derivative();
  auto eg = extended_gcd(r, dr);
  if (eg.gcd.degree() != 0)
    throw PreconditionError("r is not squarefree (repeated intersection x-coordinates)");
  // eg.s * r + eg.t * r' = 1; reduce lambda modulo r and recover mu exactly.
  UPoly lambda = eg.t % r;
  UPoly mu = exact_quotient(UPoly::constant(r.var(), 1) - dr * lambda, r);
  const int big_n = r.degree().value() - 1;
  if (lambda.degree() > big_n || mu.degree() > big_n - 1)
    throw InternalError("Bezout cofactors exceed their degree bounds");
  return {std::move(lambda), std::move(mu)};
}

}  // namespace jacred

#endif  // JACRED_UPOLY_HPP
