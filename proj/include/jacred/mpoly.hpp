#ifndef JACRED_MPOLY_HPP
#define JACRED_MPOLY_HPP

#include <algorithm>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "jacred/monomial.hpp"
#include "jacred/rational.hpp"

namespace jacred {

struct Term {
  Monomial mono;
  Rat coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

/// Sparse polynomial over Q. Terms are kept sorted by StorageOrderGreater with
/// no zero coefficients, so equal polynomials have identical term lists.
class MPoly {
 public:
  MPoly() : MPoly(Ring::xy()) {}
  explicit MPoly(Ring ring) : ring_(std::move(ring)) {}
  MPoly(Ring ring, const Rat& c) : ring_(std::move(ring)) {
    if (c != 0) terms_.push_back({Monomial(ring_.size()), c});
  }

  static MPoly var(const Ring& ring, std::string_view name) {
    Monomial m(ring.size());
    m[ring.index(name)] = 1;
    return monomial(ring, m, 1);
  }
  static MPoly monomial(const Ring& ring, const Monomial& m, const Rat& c) {
    MPoly p(ring);
    if (m.size() != ring.size()) throw InputError("monomial length does not match ring");
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  /// Builds a canonical polynomial from arbitrary (unsorted, repeated, zero) terms.
  static MPoly from_terms(const Ring& ring, std::vector<Term> terms) {
    for (const auto& t : terms)
      if (t.mono.size() != ring.size()) throw InputError("monomial length does not match ring");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return StorageOrderGreater{}(a.mono, b.mono);
    });
    MPoly p(ring);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
  }

  const Ring& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term value (zero when absent).
  Rat constant_term() const { return coefficient(Monomial(ring_.size())); }

  Degree total_degree() const {
    if (terms_.empty()) return Degree::neg_infinity();
    return static_cast<int>(terms_.front().mono.degree());
  }
  Degree degree_in(std::size_t var) const {
    if (terms_.empty()) return Degree::neg_infinity();
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return static_cast<int>(d);
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  Rat coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
      return StorageOrderGreater{}(t.mono, key);
    });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
  }

  Rat evaluate(std::span<const Rat> point) const {
    if (point.size() != ring_.size()) throw InputError("evaluation point has wrong dimension");
    Rat sum = 0;
    for (const auto& t : terms_) {
      Rat v = t.coeff;
      for (std::size_t i = 0; i < ring_.size(); ++i)
        if (t.mono[i] != 0) v *= rat_pow(point[i], t.mono[i]);
      sum += v;
    }
    return sum;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    check_ring(a, b);
    if (a.is_zero() || b.is_zero()) return MPoly(a.ring_);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return from_terms(a.ring_, std::move(prod));
  }
  friend MPoly operator*(const MPoly& a, const Rat& c) {
    if (c == 0) return MPoly(a.ring_);
    MPoly r = a;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  friend MPoly operator*(const Rat& c, const MPoly& a) { return a * c; }
  friend MPoly operator+(const MPoly& a, const Rat& c) { return a + MPoly(a.ring_, c); }
  friend MPoly operator-(const MPoly& a, const Rat& c) { return a - MPoly(a.ring_, c); }

  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  static void check_ring(const MPoly& a, const MPoly& b) {
    if (!(a.ring_ == b.ring_)) throw InputError("ring mismatch");
  }

  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
    check_ring(a, b);
    MPoly r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    StorageOrderGreater greater;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && greater(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || greater(b.terms_[j].mono, a.terms_[i].mono)) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().coeff = -r.terms_.back().coeff;
      } else {
        Rat c = subtract ? Rat(a.terms_[i].coeff - b.terms_[j].coeff)
                         : Rat(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Ring ring_;
  std::vector<Term> terms_;
};

inline MPoly pow(const MPoly& base, unsigned e) {
  MPoly result(base.ring(), 1);
  MPoly b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

}  // namespace jacred

#endif  // JACRED_MPOLY_HPP
