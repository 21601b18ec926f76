#ifndef JACRED_GROEBNER_HPP
#define JACRED_GROEBNER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "jacred/polyring.hpp"

namespace jacred {

/// Term order used by the Groebner engine, independent of storage order.
struct MonomialOrder {
  enum class Kind { lex, grlex };

  Kind kind = Kind::grlex;
  std::vector<std::size_t> precedence;  ///< variable indices, most significant first

  /// grlex with the last ring variable highest: y > x, and t > y > x in {x, y, t}.
  static MonomialOrder grlex(const Ring& ring) { return {Kind::grlex, reversed(ring.size())}; }
  static MonomialOrder lex(const Ring& ring) { return {Kind::lex, reversed(ring.size())}; }
  static MonomialOrder make(Kind kind, const Ring& ring, const std::vector<std::string>& high_to_low) {
    MonomialOrder o{kind, {}};
    for (const auto& n : high_to_low) o.precedence.push_back(ring.index(n));
    if (!o.covers(ring.size())) throw InputError("monomial order precedence must cover the ring");
    return o;
  }

  bool covers(std::size_t nvars) const {
    if (precedence.size() != nvars) return false;
    std::vector<bool> seen(nvars, false);
    for (auto i : precedence) {
      if (i >= nvars || seen[i]) return false;
      seen[i] = true;
    }
    return true;
  }

  bool greater(const Monomial& a, const Monomial& b) const {
    if (kind == Kind::grlex) {
      const auto da = a.degree(), db = b.degree();
      if (da != db) return da > db;
    }
    for (auto i : precedence)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static std::vector<std::size_t> reversed(std::size_t n) {
    std::vector<std::size_t> p;
    for (std::size_t i = n; i-- > 0;) p.push_back(i);
    return p;
  }
};

namespace detail {

struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

/// Terms sorted descending by a monomial order; the front term is the leader.
using OrderedPoly = std::vector<Term>;

inline OrderedPoly ordered(const MPoly& f, const MonomialOrder& order) {
  OrderedPoly p(f.terms().begin(), f.terms().end());
  std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return p;
}

inline void make_monic(OrderedPoly& p) {
  if (p.empty() || p.front().coeff == 1) return;
  const Rat inv = 1 / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

using WorkPoly = std::map<Monomial, Rat, OrderGreater>;

inline void add_scaled(WorkPoly& work, const OrderedPoly& g, std::size_t from, const Monomial& shift,
                       const Rat& factor) {
  for (std::size_t k = from; k < g.size(); ++k) {
    auto [it, inserted] = work.try_emplace(g[k].mono * shift, 0);
    it->second += factor * g[k].coeff;
    if (it->second == 0) work.erase(it);
  }
}

/// Full reduction of `work` modulo monic `basis`; returns the remainder, ordered.
inline OrderedPoly reduce(WorkPoly work, const std::vector<OrderedPoly>& basis) {
  OrderedPoly rem;
  while (!work.empty()) {
    auto it = work.begin();
    const Monomial m = it->first;
    const Rat c = it->second;
    work.erase(it);
    const OrderedPoly* divisor = nullptr;
    for (const auto& g : basis)
      if (!g.empty() && g.front().mono.divides(m)) {
        divisor = &g;
        break;
      }
    if (divisor == nullptr) {
      rem.push_back({m, c});
      continue;
    }
    add_scaled(work, *divisor, 1, m / divisor->front().mono, Rat(-c / divisor->front().coeff));
  }
  return rem;
}

inline WorkPoly to_work(const OrderedPoly& p, const MonomialOrder& order) {
  WorkPoly w(OrderGreater{&order});
  for (const auto& t : p) w.emplace(t.mono, t.coeff);
  return w;
}

inline WorkPoly s_polynomial(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
  const Monomial l = lcm(f.front().mono, g.front().mono);
  WorkPoly w(OrderGreater{&order});
  add_scaled(w, f, 1, l / f.front().mono, Rat(1 / f.front().coeff));
  add_scaled(w, g, 1, l / g.front().mono, Rat(-1 / g.front().coeff));
  return w;
}

}  // namespace detail

/// Reduced Groebner basis: monic generators sorted ascending by leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<MPoly> generators)
      : ring_(std::move(ring)), order_(std::move(order)), generators_(std::move(generators)) {
    for (const auto& g : generators_) ordered_.push_back(detail::ordered(g, order_));
  }

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<MPoly>& generators() const { return generators_; }
  const std::vector<detail::OrderedPoly>& ordered_generators() const { return ordered_; }

  bool is_unit() const {
    return std::any_of(generators_.begin(), generators_.end(), [](const MPoly& g) { return g.is_constant(); });
  }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : ordered_) out.push_back(g.front().mono);
    return out;
  }

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<MPoly> generators_;
  std::vector<detail::OrderedPoly> ordered_;
};

inline MPoly leading_term(const MPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw InputError("leading term of the zero polynomial");
  auto p = detail::ordered(f, order);
  return MPoly::monomial(f.ring(), p.front().mono, p.front().coeff);
}

/// Buchberger's algorithm with the coprime-leading-monomial criterion; pairs are
/// processed by ascending lcm degree, then by index, so the run is deterministic.
inline GroebnerBasis buchberger(const std::vector<MPoly>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw InputError("buchberger needs at least one generator");
  const Ring& ring = gens.front().ring();
  for (const auto& g : gens)
    if (!(g.ring() == ring)) throw InputError("generators live in different rings");
  if (!order.covers(ring.size())) throw InputError("monomial order does not cover the ring");

  using detail::OrderedPoly;
  using Pair = std::tuple<std::uint32_t, std::size_t, std::size_t>;
  std::vector<OrderedPoly> basis;
  std::vector<bool> active;  // false once a later leader divides this one
  std::set<Pair> pairs;
  bool unit = false;
  auto lead = [&](std::size_t i) -> const Monomial& { return basis[i].front().mono; };
  // Gebauer-Moeller update.
  auto add = [&](OrderedPoly p) {
    detail::make_monic(p);
    if (p.front().mono.is_one()) unit = true;
    const std::size_t k = basis.size();
    basis.push_back(std::move(p));
    active.push_back(true);
    const Monomial& lk = lead(k);
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < k; ++i)
      if (active[i]) cand.push_back(i);
    std::vector<Monomial> l;
    for (std::size_t i : cand) l.push_back(lcm(lead(i), lk));
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
        if (l[b] == l[a]) {
          // one representative per lcm; none when any of them is coprime
          drop = b < a || coprime(lead(cand[b]), lk);
        } else {
          drop = l[b].divides(l[a]);
        }
      }
      if (!drop) kept.push_back(cand[a]);
    }
    for (auto it = pairs.begin(); it != pairs.end();) {
      const auto [deg, j, i] = *it;
      const Monomial l = lcm(lead(i), lead(j));
      if (lk.divides(l) && !(lcm(lead(i), lk) == l) && !(lcm(lead(j), lk) == l))
        it = pairs.erase(it);
      else
        ++it;
    }
    for (std::size_t i : kept) pairs.emplace(lcm(lead(i), lk).degree(), k, i);
    for (std::size_t i = 0; i < k; ++i)
      if (active[i] && lk.divides(lead(i))) active[i] = false;
  };
  for (const auto& g : gens)
    if (!g.is_zero()) {
      auto rem = detail::reduce(detail::to_work(detail::ordered(g, order), order), basis);
      if (!rem.empty()) add(std::move(rem));
      if (unit) break;
    }

  while (!pairs.empty() && !unit) {
    const auto [deg, j, i] = *pairs.begin();
    pairs.erase(pairs.begin());
    auto h = detail::reduce(detail::s_polynomial(basis[i], basis[j], order), basis);
    if (!h.empty()) add(std::move(h));
  }

  if (unit) return GroebnerBasis(ring, order, {MPoly(ring, 1)});
  if (basis.empty()) return GroebnerBasis(ring, order, {});

  // Minimalize, then inter-reduce tails.
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = basis[i].front().mono;
      const auto& mj = basis[j].front().mono;
      if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<OrderedPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OrderedPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    detail::WorkPoly tail(detail::OrderGreater{&order});
    for (std::size_t k = 1; k < minimal[i].size(); ++k) tail.emplace(minimal[i][k].mono, minimal[i][k].coeff);
    OrderedPoly g{minimal[i].front()};
    auto rem = detail::reduce(std::move(tail), others);
    g.insert(g.end(), rem.begin(), rem.end());
    reduced.push_back(std::move(g));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return order.greater(b.front().mono, a.front().mono);
  });
  std::vector<MPoly> out;
  for (auto& g : reduced) out.push_back(MPoly::from_terms(ring, std::move(g)));
  return GroebnerBasis(ring, order, std::move(out));
}

inline GroebnerBasis buchberger(const std::vector<MPoly>& gens) {
  if (gens.empty()) throw InputError("buchberger needs at least one generator");
  return buchberger(gens, MonomialOrder::grlex(gens.front().ring()));
}

/// Remainder of multivariate division by the basis; zero iff f is in the ideal.
inline MPoly normal_form(const MPoly& f, const GroebnerBasis& gb) {
  if (!(f.ring() == gb.ring())) throw InputError("ring mismatch in normal_form");
  auto rem = detail::reduce(detail::to_work(detail::ordered(f, gb.order()), gb.order()), gb.ordered_generators());
  return MPoly::from_terms(f.ring(), std::move(rem));
}

/// Every S-polynomial of two generators reduces to zero.
inline bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& g = gb.ordered_generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!detail::reduce(detail::s_polynomial(g[i], g[j], gb.order()), g).empty()) return false;
  return true;
}

/// Number of standard monomials; nullopt when the staircase is unbounded.
inline std::optional<std::size_t> quotient_dimension(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring().size();
  const auto lms = gb.leading_monomials();
  for (const auto& m : lms)
    if (m.is_one()) return 0;
  std::vector<std::uint32_t> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& m : lms)
      if (m.degree() == m[v] && m[v] > 0 && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
    if (bound[v] == 0) return std::nullopt;
  }
  std::size_t count = 0;
  Monomial cur(n);
  while (true) {
    bool standard = true;
    for (const auto& m : lms)
      if (m.divides(cur)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    std::size_t v = 0;
    while (v < n && ++cur[v] == bound[v]) cur[v++] = 0;
    if (v == n) break;
  }
  return count;
}

/// f vanishes on V(gens) iff 1 is in (gens, 1 - t f) with a fresh variable t.
inline bool radical_member(const std::vector<MPoly>& gens, const MPoly& f) {
  if (gens.empty()) throw InputError("radical_member needs generators");
  const Ring& ring = gens.front().ring();
  std::string t = "t";
  while (ring.find(t)) t += "_";
  const Ring ext = ring.extended(t);
  std::vector<MPoly> lifted;
  for (const auto& g : gens) lifted.push_back(embed(g, ext));
  lifted.push_back(MPoly(ext, 1) - MPoly::var(ext, t) * embed(f, ext));
  return buchberger(lifted, MonomialOrder::grlex(ext)).is_unit();
}

namespace detail {

inline void require_discrete(const MPoly& f1, const MPoly& f2) {
  if (f1.is_zero() || f2.is_zero() || !quotient_dimension(buchberger({f1, f2})))
    throw PreconditionError("non-discrete intersection: the ideal (f1, f2) is not zero-dimensional");
}

}  // namespace detail

/// True iff every affine intersection point of f1 = 0 and f2 = 0 lies on y = 0.
inline bool rc2_check(const MPoly& f1, const MPoly& f2) {
  const auto gb = f1.is_zero() || f2.is_zero() ? std::nullopt : std::optional(buchberger({f1, f2}));
  if (!gb || !quotient_dimension(*gb))
    throw PreconditionError("non-discrete intersection: the ideal (f1, f2) is not zero-dimensional");
  // the reduced basis generates the same ideal and is a cheaper start
  return radical_member(gb->generators(), MPoly::var(f1.ring(), "y"));
}

/// True iff the Jacobian vanishes at no intersection point: (f1, f2, J) = (1).
inline bool normal_crossing_check(const MPoly& f1, const MPoly& f2) {
  detail::require_discrete(f1, f2);
  return buchberger({f1, f2, jacobian2(f1, f2)}).is_unit();
}

/// Local intersection multiplicity at (a, b): dim Q[x,y] / (I_translated + m^cap).
/// Exact once cap is at least the local multiplicity (e.g. the global total).
inline std::size_t local_multiplicity(const MPoly& f1, const MPoly& f2, const Rat& a, const Rat& b,
                                      std::size_t cap) {
  const Ring& ring = f1.ring();
  const std::vector<MPoly> base{translate(f1, a, b), translate(f2, a, b)};
  // dim Q[x,y]/(I + m^k) grows strictly in k until it reaches the local
  // multiplicity, then stays constant.
  std::size_t prev = 0;
  for (std::uint32_t k = 1;; ++k) {
    std::vector<MPoly> gens = base;
    for (std::uint32_t i = 0; i <= k; ++i) gens.push_back(MPoly::monomial(ring, Monomial{i, k - i}, 1));
    const auto dim = quotient_dimension(buchberger(gens));
    if (!dim) throw InternalError("truncated local ideal is not zero-dimensional");
    if (*dim == prev || *dim >= std::max<std::size_t>(cap, 1)) return *dim;
    prev = *dim;
  }
}

}  // namespace jacred

#endif  // JACRED_GROEBNER_HPP
