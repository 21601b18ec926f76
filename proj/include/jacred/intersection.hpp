#ifndef JACRED_INTERSECTION_HPP
#define JACRED_INTERSECTION_HPP

#include <algorithm>
#include <vector>

#include "jacred/groebner.hpp"

namespace jacred {

struct PlanePoint {
  Rat x;
  Rat y;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
  friend bool operator<(const PlanePoint& a, const PlanePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

struct PointMultiplicity {
  PlanePoint point;
  std::size_t multiplicity = 0;

  friend bool operator==(const PointMultiplicity&, const PointMultiplicity&) = default;
};

/// All affine intersection points of a zero-dimensional pair, each rational.
struct RationalIntersection {
  std::vector<PointMultiplicity> points;  ///< sorted by (x, y)
  std::size_t total = 0;                  ///< quotient dimension of (f1, f2)

  friend bool operator==(const RationalIntersection&, const RationalIntersection&) = default;
};

namespace detail {

/// Candidates for the x-coordinates of V(f1, f2).
inline std::vector<Rat> x_candidates(const MPoly& f1, const MPoly& f2) {
  const auto y1 = f1.degree_in(1), y2 = f2.degree_in(1);
  if (y1 > 0 && y2 > 0) {
    const UPoly res = resultant_y(f1, f2);
    if (res.is_zero()) throw PreconditionError("resultant vanishes identically: common factor");
    return rational_roots(res);
  }
  const UPoly a = *to_upoly(y1 > 0 ? f2 : f1, "x");
  if (y1 == 0 && y2 == 0) {
    const UPoly g = gcd(a, *to_upoly(f2, "x"));
    return g.is_zero() ? std::vector<Rat>{} : rational_roots(g);
  }
  return a.is_zero() ? std::vector<Rat>{} : rational_roots(a);
}

inline MPoly at_x(const MPoly& f, const Rat& a) {
  const Ring& R = f.ring();
  return substitute(f, {{"x", MPoly(R, a)}, {"y", MPoly::var(R, "y")}});
}

}  // namespace detail

/// Finds every intersection point with rational coordinates and its local
/// multiplicity. Throws PreconditionError when the intersection is not
/// discrete or when the rational points do not account for the full
/// intersection number (some points are irrational).
inline RationalIntersection rational_intersection(const MPoly& f1, const MPoly& f2) {
  if (!(f1.ring() == Ring::xy()) || !(f2.ring() == Ring::xy()))
    throw InputError("intersection requires polynomials in the ring {x, y}");
  if (f1.is_zero() || f2.is_zero()) throw PreconditionError("non-discrete intersection: zero polynomial");
  const auto dim = quotient_dimension(buchberger({f1, f2}));
  if (!dim) throw PreconditionError("non-discrete intersection: the ideal (f1, f2) is not zero-dimensional");
  RationalIntersection out;
  out.total = *dim;
  if (out.total == 0) return out;

  std::vector<PlanePoint> pts;
  for (const auto& a : detail::x_candidates(f1, f2)) {
    const auto u1 = *to_upoly(detail::at_x(f1, a), "y");
    const auto u2 = *to_upoly(detail::at_x(f2, a), "y");
    const UPoly g = gcd(u1, u2);
    if (g.is_zero()) throw PreconditionError("non-discrete intersection along a vertical line");
    if (g.degree() == 0) continue;
    for (const auto& b : rational_roots(g)) pts.push_back({a, b});
  }
  std::sort(pts.begin(), pts.end());
  std::size_t sum = 0;
  for (const auto& p : pts) {
    const auto mult = local_multiplicity(f1, f2, p.x, p.y, out.total);
    sum += mult;
    out.points.push_back({p, mult});
  }
  if (sum != out.total)
    throw PreconditionError("non-rational intersection points: rational points account for " +
                            std::to_string(sum) + " of " + std::to_string(out.total));
  return out;
}

}  // namespace jacred

#endif  // JACRED_INTERSECTION_HPP
