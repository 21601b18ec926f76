#ifndef JACRED_PAIR_HPP
#define JACRED_PAIR_HPP

#include <optional>

#include "jacred/groebner.hpp"

namespace jacred {

/// A pair (f1, f2) in Q[x, y] with its reduction-condition flags.
struct PolyPair {
  MPoly f1;
  MPoly f2;
  int d1 = 0;
  int d2 = 0;
  std::optional<int> n;  ///< common degree, set when d1 == d2
  MPoly jac;
  bool rc1 = false;      ///< both leading forms equal x^n
  bool rc2 = false;      ///< V(f1, f2) lies on y = 0
  bool discrete = false; ///< (f1, f2) is zero-dimensional

  friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

namespace detail {

inline bool leading_form_is_x_power(const MPoly& f, int n) {
  const MPoly lead = leading_homogeneous_part(f);
  return lead == MPoly::monomial(f.ring(), Monomial{static_cast<std::uint32_t>(n), 0}, 1);
}

inline void check_pair_inputs(const MPoly& f1, const MPoly& f2) {
  if (!(f1.ring() == Ring::xy()) || !(f2.ring() == Ring::xy()))
    throw InputError("pair polynomials must live in the ring {x, y}");
  if (f1.is_zero() || f2.is_zero()) throw InputError("pair polynomials must be nonzero");
}

}  // namespace detail

/// Computes every cached field of the pair, including the Groebner-based flags.
inline PolyPair analyze(const MPoly& f1, const MPoly& f2) {
  detail::check_pair_inputs(f1, f2);
  PolyPair p;
  p.f1 = f1;
  p.f2 = f2;
  p.d1 = f1.total_degree().value();
  p.d2 = f2.total_degree().value();
  if (p.d1 == p.d2) p.n = p.d1;
  p.jac = jacobian2(f1, f2);
  p.rc1 = p.n && *p.n > 0 && detail::leading_form_is_x_power(f1, *p.n) &&
          detail::leading_form_is_x_power(f2, *p.n);
  p.discrete = quotient_dimension(buchberger({f1, f2})).has_value();
  p.rc2 = p.discrete && rc2_check(f1, f2);
  return p;
}

/// Rebuilds a pair from stored fields. Degrees, Jacobian and rc1 are
/// recomputed and must agree; rc2 and discrete are taken as given.
inline PolyPair pair_from_parts(const MPoly& f1, const MPoly& f2, bool rc1, bool rc2, bool discrete) {
  detail::check_pair_inputs(f1, f2);
  PolyPair p;
  p.f1 = f1;
  p.f2 = f2;
  p.d1 = f1.total_degree().value();
  p.d2 = f2.total_degree().value();
  if (p.d1 == p.d2) p.n = p.d1;
  p.jac = jacobian2(f1, f2);
  p.rc1 = p.n && *p.n > 0 && detail::leading_form_is_x_power(f1, *p.n) &&
          detail::leading_form_is_x_power(f2, *p.n);
  if (p.rc1 != rc1) throw InputError("stored rc1 flag disagrees with the polynomials");
  if (rc2 && !discrete) throw InputError("rc2 requires a discrete intersection");
  p.rc2 = rc2;
  p.discrete = discrete;
  return p;
}

inline void require_rc(const PolyPair& p) {
  if (!p.rc1) throw PreconditionError("pair does not satisfy RC1 (leading forms are not both x^n)");
  if (!p.rc2) throw PreconditionError("pair does not satisfy RC2 (some intersection point lies off y = 0)");
}

}  // namespace jacred

#endif  // JACRED_PAIR_HPP
