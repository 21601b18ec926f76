#ifndef JACRED_STRUCTURE_HPP
#define JACRED_STRUCTURE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "jacred/intersection.hpp"
#include "jacred/membership.hpp"
#include "jacred/pair.hpp"

namespace jacred {

struct IntersectionData {
  std::vector<Rat> x_roots;               ///< 0 first when present, then ascending
  UPoly r;                                ///< prod (x - a_i)
  std::vector<std::size_t> multiplicities;///< aligned with x_roots
  std::size_t total = 0;

  friend bool operator==(const IntersectionData&, const IntersectionData&) = default;
};

inline IntersectionData intersection_data(const PolyPair& pair) {
  require_rc(pair);
  const RationalIntersection ri = rational_intersection(pair.f1, pair.f2);
  std::vector<PointMultiplicity> pts = ri.points;
  for (const auto& p : pts)
    if (p.point.y != 0) throw InternalError("intersection point off y = 0 on an RC2 pair");
  std::stable_partition(pts.begin(), pts.end(), [](const PointMultiplicity& p) { return p.point.x == 0; });
  IntersectionData d;
  d.r = UPoly::constant("x", 1);
  for (const auto& p : pts) {
    d.x_roots.push_back(p.point.x);
    d.multiplicities.push_back(p.multiplicity);
    d.r = d.r * UPoly::linear_factor("x", p.point.x);
  }
  d.total = ri.total;
  return d;
}

struct Thm1Report {
  int n = 0;
  MPoly g1;
  MPoly g2;
  Rat g2_top_coeff;        ///< coefficient of x^(n-1) in g2
  std::size_t oracle_total = 0;
  bool agree = false;
  bool unique = false;

  friend bool operator==(const Thm1Report&, const Thm1Report&) = default;
};

inline Thm1Report verify_theorem1(const PolyPair& pair) {
  const BoundedSolution s = solve_y_equation(pair);
  Thm1Report rep;
  rep.n = *pair.n;
  rep.g1 = s.g1;
  rep.g2 = s.g2;
  rep.unique = s.unique;
  rep.g2_top_coeff = s.g2.coefficient(Monomial{static_cast<std::uint32_t>(rep.n - 1), 0});
  const auto total = quotient_dimension(buchberger({pair.f1, pair.f2}));
  if (!total) throw InternalError("RC pair with a non-discrete intersection");
  rep.oracle_total = *total;
  rep.agree = rep.g2_top_coeff == Rat(static_cast<unsigned long>(rep.oracle_total));
  return rep;
}

/// (f1, f2) = (h1 -k2; h2 k1) (r, y lambda) and its companion identities.
struct Decomposition {
  MPoly h1, h2, k1, k2;
  MPoly g1, g2;
  UPoly r, lambda, mu;
  bool det_ok = false;      ///< h1 k1 + h2 k2 = J(f)
  bool factor_ok = false;   ///< f = M (r, y lambda)
  bool g_factor_ok = false; ///< g = (-h2 k1; h1 k2) (r', y mu)
  bool dual_ok = false;     ///< J(f) r' = k1 g2 - k2 g1
  bool bezout_ok = false;   ///< r mu + r' lambda = 1 within the degree bounds
  bool solver_k_agrees = false;          ///< linear solver returned the same (k1, k2)
  std::size_t solver_k_nullspace_dim = 0;

  bool all_ok() const { return det_ok && factor_ok && g_factor_ok && dual_ok && bezout_ok; }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline Decomposition decompose(const PolyPair& pair) {
  require_rc(pair);
  if (!normal_crossing_check(pair.f1, pair.f2))
    throw PreconditionError("some intersection point is not a normal crossing (J(f) vanishes there)");
  const IntersectionData data = intersection_data(pair);
  const BoundedSolution g = solve_y_equation(pair);
  const Ring& R = Ring::xy();
  const MPoly y = MPoly::var(R, "y");

  Decomposition d;
  d.r = data.r;
  d.g1 = g.g1;
  d.g2 = g.g2;
  const MPoly r = to_mpoly(d.r, R, "x"), dr = to_mpoly(d.r.derivative(), R, "x");
  d.k1 = exact_div_y(r * g.g1 + dr * pair.f2);
  d.k2 = exact_div_y(r * g.g2 - dr * pair.f1);
  const BezoutPair bz = extended_euclid_bounded(d.r);
  d.lambda = bz.lambda;
  d.mu = bz.mu;
  const MPoly lambda = to_mpoly(bz.lambda, R, "x"), mu = to_mpoly(bz.mu, R, "x");
  d.h1 = mu * pair.f1 + lambda * g.g2;
  d.h2 = mu * pair.f2 - lambda * g.g1;

  d.det_ok = d.h1 * d.k1 + d.h2 * d.k2 == pair.jac;
  d.factor_ok = pair.f1 == d.h1 * r - d.k2 * y * lambda && pair.f2 == d.h2 * r + d.k1 * y * lambda;
  d.g_factor_ok = g.g1 == -(d.h2 * dr) + d.k1 * y * mu && g.g2 == d.h1 * dr + d.k2 * y * mu;
  d.dual_ok = pair.jac * dr == d.k1 * g.g2 - d.k2 * g.g1;
  const int big_n = d.r.degree().value() - 1;
  d.bezout_ok = d.r * d.mu + d.r.derivative() * d.lambda == UPoly::constant("x", 1) &&
                d.lambda.degree() <= Degree(big_n) && d.mu.degree() <= Degree(big_n - 1);

  const BoundedSolution k = solve_r_equation(pair, d.r, false);
  d.solver_k_agrees = k.g1 == d.k1 && k.g2 == d.k2;
  d.solver_k_nullspace_dim = k.nullspace_dim;
  return d;
}

/// g1(x,0) r = -r' f2(x,0) and g2(x,0) r = r' f1(x,0).
inline bool prop53_check(const PolyPair& pair, const IntersectionData& data) {
  const BoundedSolution g = solve_y_equation(pair);
  const UPoly& r = data.r;
  const UPoly dr = r.derivative();
  return restrict_to_x_axis(g.g1) * r == -(dr * restrict_to_x_axis(pair.f2)) &&
         restrict_to_x_axis(g.g2) * r == dr * restrict_to_x_axis(pair.f1);
}

namespace detail {

inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline MPoly random_poly(std::mt19937_64& rng, int max_deg, std::int64_t bound) {
  const Ring& R = Ring::xy();
  std::vector<Term> terms;
  for (int d = 0; d <= max_deg; ++d)
    for (int i = 0; i <= d; ++i)
      terms.push_back({Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(d - i)},
                       Rat(static_cast<long>(draw(rng, -bound, bound)))});
  return MPoly::from_terms(R, std::move(terms));
}

inline UPoly random_monic(std::mt19937_64& rng, int deg, std::int64_t bound) {
  std::vector<Rat> c;
  for (int i = 0; i < deg; ++i) c.push_back(Rat(static_cast<long>(draw(rng, -bound, bound))));
  c.push_back(1);
  return UPoly("x", std::move(c));
}

}  // namespace detail

inline constexpr int kMaxGeneratorDegree = 12;

/// Deterministic RC instance with V(f1, f2) = {(a_i, 0)}.
///
/// f_i = s_i P + v_i Q with P = r + y W, Q = y^e and (s1 v1; s2 v2) of constant
/// determinant, so (f1, f2) = (P, Q); each point then has multiplicity e
/// (e = 1 is the transversal case). s_i are monic of degree n - deg r, which
/// puts f_i in the form r s_i + y T_i. `contact` fixes e, otherwise the seed
/// chooses it.
inline PolyPair generate_rc_instance(std::uint64_t seed, int n, const std::vector<Rat>& roots,
                                     std::optional<int> contact = std::nullopt) {
  const int big_r = static_cast<int>(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (roots[i] == roots[j]) throw InputError("repeated root " + to_string(roots[i]));
  if (std::find(roots.begin(), roots.end(), Rat(0)) == roots.end()) throw InputError("roots must contain 0");
  if (n <= big_r) throw InputError("n must exceed deg r = " + std::to_string(big_r));
  if (n > kMaxGeneratorDegree) throw InputError("n is limited to " + std::to_string(kMaxGeneratorDegree));
  if (contact && (*contact < 1 || *contact > big_r))
    throw InputError("contact order must lie in [1, deg r]");

  const Ring& R = Ring::xy();
  const MPoly y = MPoly::var(R, "y");
  UPoly r = UPoly::constant("x", 1);
  for (const auto& a : roots) r = r * UPoly::linear_factor("x", a);
  const MPoly rm = to_mpoly(r, R, "x");
  const int d = n - big_r;

  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 64;
  for (int attempt = 1; attempt <= kAttempts; ++attempt) {
    int e = 1;
    if (contact) {
      e = *contact;
    } else if (big_r > 1 && detail::draw(rng, 0, 1) == 1) {
      e = static_cast<int>(detail::draw(rng, 2, big_r));
    }
    const UPoly s1 = detail::random_monic(rng, d, 2), s2 = detail::random_monic(rng, d, 2);
    const ExtendedGcd eg = extended_gcd(s1, s2);
    if (eg.gcd.degree() != 0) continue;
    const Rat c(static_cast<long>(detail::draw(rng, 0, 1) == 0 ? 1 : -1) * static_cast<long>(detail::draw(rng, 1, 2)));
    const MPoly W = big_r >= 2 ? detail::random_poly(rng, big_r - 2, 2) : MPoly(R);
    const MPoly w = big_r - e - 1 >= 0 ? detail::random_poly(rng, big_r - e - 1, 1) : MPoly(R);
    const MPoly s1m = to_mpoly(s1, R, "x"), s2m = to_mpoly(s2, R, "x");
    // s1 u0 - s2 v0 = 1
    const MPoly u = to_mpoly(eg.s, R, "x") * c + s2m * w;
    const MPoly v = to_mpoly(-eg.t, R, "x") * c + s1m * w;
    const MPoly P = rm + y * W, Q = pow(y, static_cast<unsigned>(e));
    const PolyPair pair = analyze(s1m * P + v * Q, s2m * P + u * Q);
    if (pair.rc1 && pair.rc2 && pair.discrete) return pair;
  }
  throw InternalError("generator rejected " + std::to_string(kAttempts) + " attempts");
}

struct ExplorationHit {
  std::size_t index = 0;  ///< enumeration index of the candidate
  MPoly h1, h2, k1, k2;
  UPoly r, lambda;
  MPoly jacobian;
  friend bool operator==(const ExplorationHit&, const ExplorationHit&) = default;
};

struct ExplorationReport {
  int max_deg_r = 2;
  int coeff_bound = 1;
  int entry_degree = 1;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::size_t matrices_enumerated = 0;
  std::size_t invertible_matrices = 0;
  std::size_t r_candidates = 0;
  std::size_t candidates_evaluated = 0;
  bool truncated = false;
  std::size_t zero_jacobian = 0;
  std::map<int, std::size_t> jacobian_degree_histogram;  ///< nonzero J only
  std::size_t counterexample_count = 0;
  std::vector<ExplorationHit> counterexamples;  ///< first few, by index

  friend bool operator==(const ExplorationReport&, const ExplorationReport&) = default;
};

struct ExploreOptions {
  int entry_degree = 1;
  std::size_t budget = 50'000'000;
  std::uint64_t seed = 0;
  std::size_t max_reported = 32;
};

namespace detail {

/// Dense integer polynomial in {x, y} of total degree <= 2 * entry_degree,
/// indexed by position in detail::monomials_up_to.
struct SmallPoly {
  std::vector<std::int64_t> c;
};

inline std::vector<UPoly> squarefree_r_candidates(int max_deg, std::int64_t bound) {
  std::vector<UPoly> out;
  for (int deg = 2; deg <= max_deg; ++deg) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(deg) + 1, -bound);
    while (true) {
      if (c.back() != 0) {
        std::vector<Rat> q;
        for (auto v : c) q.push_back(Rat(static_cast<long>(v)));
        UPoly r("x", std::move(q));
        if (is_squarefree(r)) out.push_back(std::move(r));
      }
      std::size_t i = 0;
      while (i < c.size() && c[i] == bound) c[i++] = -bound;
      if (i == c.size()) break;
      ++c[i];
    }
  }
  return out;
}

}  // namespace detail

/// Sweeps f = (h1 -k2; h2 k1)(r, y lambda) over small integer entries with
/// det = h1 k1 + h2 k2 a nonzero constant, squarefree r with 2 <= deg r <=
/// max_deg_r, and lambda = lambda0 + c r (the solutions of r mu + r' lambda = 1
/// with deg lambda <= deg r). Reports any constant nonzero J(f).
inline ExplorationReport explore_conjecture(int max_deg_r, int coeff_bound, const ExploreOptions& opt = {}) {
  if (max_deg_r < 2) throw InputError("max_deg_r must be at least 2");
  if (coeff_bound < 0) throw InputError("coeff_bound must be non-negative");
  if (opt.entry_degree < 0 || opt.entry_degree > 2) throw InputError("entry degree must be 0, 1 or 2");
  if (max_deg_r > 6 || coeff_bound > 3) throw InputError("sweep too large (max_deg_r <= 6, coeff_bound <= 3)");

  ExplorationReport rep;
  rep.max_deg_r = max_deg_r;
  rep.coeff_bound = coeff_bound;
  rep.entry_degree = opt.entry_degree;
  rep.budget = opt.budget;
  rep.seed = opt.seed;

  const Ring& R = Ring::xy();
  const std::int64_t B = coeff_bound;
  const auto basis = detail::monomials_up_to(opt.entry_degree);
  const auto prod_basis = detail::monomials_up_to(2 * opt.entry_degree);
  std::map<Monomial, std::size_t, StorageOrderGreater> prod_index;
  for (std::size_t i = 0; i < prod_basis.size(); ++i) prod_index[prod_basis[i]] = i;

  // Entries: every coefficient vector over `basis` in odometer order.
  std::vector<std::vector<std::int64_t>> entries;
  {
    std::vector<std::int64_t> c(basis.size(), -B);
    while (true) {
      entries.push_back(c);
      std::size_t i = c.size();
      while (i > 0 && c[i - 1] == B) c[--i] = -B;
      if (i == 0) break;
      ++c[i - 1];
    }
  }
  const std::size_t E = entries.size();
  std::vector<detail::SmallPoly> prod(E * E);
  for (std::size_t a = 0; a < E; ++a)
    for (std::size_t b = 0; b < E; ++b) {
      auto& p = prod[a * E + b].c;
      p.assign(prod_basis.size(), 0);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
          p[prod_index[basis[i] * basis[j]]] += entries[a][i] * entries[b][j];
    }
  auto to_poly = [&](std::size_t e) {
    std::vector<Term> t;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (entries[e][i] != 0) t.push_back({basis[i], Rat(static_cast<long>(entries[e][i]))});
    return MPoly::from_terms(R, std::move(t));
  };
  const std::size_t const_slot = prod_index[Monomial(2)];

  struct RData {
    UPoly r, lambda0;
    MPoly rm, lambda0m;
  };
  std::vector<RData> rs;
  for (auto& r : detail::squarefree_r_candidates(max_deg_r, B)) {
    const BezoutPair bz = extended_euclid_bounded(r);
    rs.push_back({r, bz.lambda, to_mpoly(r, R, "x"), to_mpoly(bz.lambda, R, "x")});
  }
  rep.r_candidates = rs.size();
  const MPoly y = MPoly::var(R, "y");

  std::size_t index = 0;
  for (std::size_t ih1 = 0; ih1 < E && !rep.truncated; ++ih1)
    for (std::size_t ik1 = 0; ik1 < E && !rep.truncated; ++ik1)
      for (std::size_t ih2 = 0; ih2 < E && !rep.truncated; ++ih2)
        for (std::size_t ik2 = 0; ik2 < E && !rep.truncated; ++ik2) {
          ++rep.matrices_enumerated;
          const auto& p = prod[ih1 * E + ik1].c;
          const auto& q = prod[ih2 * E + ik2].c;
          bool constant = true;
          for (std::size_t i = 0; i < p.size() && constant; ++i)
            if (i != const_slot && p[i] + q[i] != 0) constant = false;
          if (!constant || p[const_slot] + q[const_slot] == 0) continue;
          ++rep.invertible_matrices;
          const MPoly h1 = to_poly(ih1), k1 = to_poly(ik1), h2 = to_poly(ih2), k2 = to_poly(ik2);
          for (const auto& rd : rs) {
            for (std::int64_t c = -B; c <= B; ++c) {
              if (rep.candidates_evaluated >= opt.budget) {
                rep.truncated = true;
                break;
              }
              ++rep.candidates_evaluated;
              const MPoly lambda = rd.lambda0m + rd.rm * Rat(static_cast<long>(c));
              const MPoly ylam = y * lambda;
              const MPoly f1 = h1 * rd.rm - k2 * ylam, f2 = h2 * rd.rm + k1 * ylam;
              const MPoly J = jacobian2(f1, f2);
              const std::size_t this_index = index++;
              if (J.is_zero()) {
                ++rep.zero_jacobian;
                continue;
              }
              const int deg = J.total_degree().value();
              ++rep.jacobian_degree_histogram[deg];
              if (deg == 0) {
                ++rep.counterexample_count;
                if (rep.counterexamples.size() < opt.max_reported)
                  rep.counterexamples.push_back({this_index, h1, h2, k1, k2, rd.r,
                                                 rd.lambda0 + rd.r * Rat(static_cast<long>(c)), J});
              }
            }
            if (rep.truncated) break;
          }
        }
  return rep;
}

}  // namespace jacred

#endif  // JACRED_STRUCTURE_HPP
