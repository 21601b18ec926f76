#ifndef JACRED_MEMBERSHIP_HPP
#define JACRED_MEMBERSHIP_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "jacred/linsolve.hpp"
#include "jacred/pair.hpp"

namespace jacred {

/// Solution of J(f) h = g1 f1 + g2 f2 with deg gi <= bound_i.
struct BoundedSolution {
  MPoly g1;
  MPoly g2;
  int bound1 = 0;
  int bound2 = 0;
  bool unique = false;
  std::size_t nullspace_dim = 0;
  std::vector<std::pair<MPoly, MPoly>> nullspace;  ///< kernel basis as (g1, g2) directions
  bool uniqueness_clause = false;  ///< deg(J h) < 2 min(d1, d2)

  friend bool operator==(const BoundedSolution&, const BoundedSolution&) = default;
};

namespace detail {

/// Monomials of total degree <= bound in {x, y}, descending storage order.
inline std::vector<Monomial> monomials_up_to(int bound) {
  std::vector<Monomial> out;
  for (int d = bound; d >= 0; --d)
    for (int i = d; i >= 0; --i) out.push_back(Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(d - i)});
  return out;
}

}  // namespace detail

/// Exact linear solve over the coefficient space of (g1, g2). When the system
/// is underdetermined the free coefficients are set to zero. With `verify`,
/// h is first checked to vanish on V(f1, f2).
inline BoundedSolution solve_bounded(const MPoly& f1, const MPoly& f2, const MPoly& h, int bound1, int bound2,
                                     bool verify = true) {
  detail::check_pair_inputs(f1, f2);
  if (!(h.ring() == Ring::xy())) throw InputError("h must live in the ring {x, y}");
  if (!quotient_dimension(buchberger({f1, f2})))
    throw PreconditionError("non-discrete intersection: the ideal (f1, f2) is not zero-dimensional");
  if (verify && !radical_member({f1, f2}, h))
    throw PreconditionError("h does not vanish at every intersection point of f1 and f2");

  const Ring& R = Ring::xy();
  const MPoly jh = jacobian2(f1, f2) * h;
  const auto cols1 = detail::monomials_up_to(bound1), cols2 = detail::monomials_up_to(bound2);
  const std::size_t n1 = cols1.size(), ncols = n1 + cols2.size();

  std::map<Monomial, std::size_t, StorageOrderGreater> row_of;
  auto note = [&](const Monomial& m) { row_of.emplace(m, 0); };
  for (const auto& t : jh.terms()) note(t.mono);
  for (const auto& c : cols1)
    for (const auto& t : f1.terms()) note(c * t.mono);
  for (const auto& c : cols2)
    for (const auto& t : f2.terms()) note(c * t.mono);
  std::size_t next = 0;
  for (auto& [m, idx] : row_of) idx = next++;

  RatMatrix a(row_of.size(), ncols);
  std::vector<Rat> b(row_of.size(), Rat(0));
  for (std::size_t j = 0; j < n1; ++j)
    for (const auto& t : f1.terms()) a(row_of[cols1[j] * t.mono], j) += t.coeff;
  for (std::size_t j = 0; j < cols2.size(); ++j)
    for (const auto& t : f2.terms()) a(row_of[cols2[j] * t.mono], n1 + j) += t.coeff;
  for (const auto& t : jh.terms()) b[row_of[t.mono]] = t.coeff;

  const SolveOutcome sol = solve(a, b);
  if (sol.kind == SolveKind::inconsistent)
    throw PreconditionError("no solution with deg g1 <= " + std::to_string(bound1) + " and deg g2 <= " +
                            std::to_string(bound2));

  auto unpack = [&](const std::vector<Rat>& v) {
    std::vector<Term> t1, t2;
    for (std::size_t j = 0; j < n1; ++j)
      if (v[j] != 0) t1.push_back({cols1[j], v[j]});
    for (std::size_t j = n1; j < ncols; ++j)
      if (v[j] != 0) t2.push_back({cols2[j - n1], v[j]});
    return std::pair{MPoly::from_terms(R, std::move(t1)), MPoly::from_terms(R, std::move(t2))};
  };

  BoundedSolution out;
  std::tie(out.g1, out.g2) = unpack(*sol.solution);
  out.bound1 = bound1;
  out.bound2 = bound2;
  for (const auto& v : sol.nullspace_basis) out.nullspace.push_back(unpack(v));
  out.nullspace_dim = out.nullspace.size();
  out.unique = out.nullspace_dim == 0;
  const int dmin = std::min(f1.total_degree().value(), f2.total_degree().value());
  out.uniqueness_clause = jh.total_degree() < Degree(2 * dmin);
  if (!(jh - out.g1 * f1 - out.g2 * f2).is_zero()) throw InternalError("bounded solution has a nonzero residual");
  return out;
}

/// Solves J(f) y = g1 f1 + g2 f2 with deg gi <= n - 1.
inline BoundedSolution solve_y_equation(const PolyPair& pair) {
  require_rc(pair);
  const int b = *pair.n - 1;
  BoundedSolution s = solve_bounded(pair.f1, pair.f2, MPoly::var(Ring::xy(), "y"), b, b, false);
  if (!s.unique) throw InternalError("the y-equation solution is not unique (nullspace dimension " +
                                     std::to_string(s.nullspace_dim) + ")");
  return s;
}

/// Solves J(f) r(x) = k1 f1 + k2 f2 with deg ki <= n + deg r - 2.
inline BoundedSolution solve_r_equation(const PolyPair& pair, const UPoly& r, bool verify = true) {
  require_rc(pair);
  if (r.degree() < 1) throw InputError("r must have positive degree");
  const int b = *pair.n + r.degree().value() - 2;
  return solve_bounded(pair.f1, pair.f2, to_mpoly(r, Ring::xy(), "x"), b, b, verify);
}

}  // namespace jacred

#endif  // JACRED_MEMBERSHIP_HPP
