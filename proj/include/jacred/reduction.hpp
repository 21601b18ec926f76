#ifndef JACRED_REDUCTION_HPP
#define JACRED_REDUCTION_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jacred/intersection.hpp"
#include "jacred/linsolve.hpp"
#include "jacred/pair.hpp"
#include "jacred/textio.hpp"

namespace jacred {

/// Right step f -> f(x + dx, y + dy).
struct Translation {
  Rat dx;
  Rat dy;
  friend bool operator==(const Translation&, const Translation&) = default;
};

/// Right step f -> f(x, y + p(x)).
struct Shear {
  UPoly p;
  friend bool operator==(const Shear& a, const Shear& b) { return a.p == b.p; }
};

enum class Side { left, right };

/// Right: f -> f(a x + b y, c x + d y). Left: (f1, f2) -> M (f1, f2).
struct LinearMap {
  Side side = Side::right;
  std::array<Rat, 4> m{1, 0, 0, 1};  ///< row-major (a, b; c, d)
  Rat det() const { return m[0] * m[3] - m[1] * m[2]; }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// target 1: f1 -> f1 + factor * f2; target 2: f2 -> f2 + factor * f1.
struct GeneratorMix {
  int target = 2;
  Rat factor = 1;
  friend bool operator==(const GeneratorMix&, const GeneratorMix&) = default;
};

struct Swap {
  friend bool operator==(const Swap&, const Swap&) = default;
};

using AutoStep = std::variant<Translation, Shear, LinearMap, GeneratorMix, Swap>;
using AutoChain = std::vector<AutoStep>;

inline bool is_right_step(const AutoStep& s) {
  if (std::holds_alternative<Translation>(s) || std::holds_alternative<Shear>(s)) return true;
  if (const auto* l = std::get_if<LinearMap>(&s)) return l->side == Side::right;
  return false;
}

/// Images of x and y under the coordinate map of a right step.
inline std::pair<MPoly, MPoly> coordinate_map(const AutoStep& s) {
  const Ring& R = Ring::xy();
  const MPoly x = MPoly::var(R, "x"), y = MPoly::var(R, "y");
  if (const auto* t = std::get_if<Translation>(&s)) return {x + MPoly(R, t->dx), y + MPoly(R, t->dy)};
  if (const auto* sh = std::get_if<Shear>(&s)) return {x, y + to_mpoly(sh->p, R, "x")};
  if (const auto* l = std::get_if<LinearMap>(&s); l && l->side == Side::right)
    return {x * l->m[0] + y * l->m[1], x * l->m[2] + y * l->m[3]};
  return {x, y};
}

/// Constant c with J(step(f)) = c * J(f) o phi, phi the step's coordinate map.
inline Rat jacobian_multiplier(const AutoStep& s) {
  if (const auto* l = std::get_if<LinearMap>(&s)) return l->det();
  if (std::holds_alternative<Swap>(s)) return -1;
  return 1;
}

inline std::string step_kind(const AutoStep& s) {
  static const char* names[] = {"translation", "shear", "linear_map", "generator_mix", "swap"};
  return names[s.index()];
}

namespace detail {

inline void check_step(const AutoStep& s) {
  if (const auto* l = std::get_if<LinearMap>(&s); l && l->det() == 0)
    throw InputError("linear map is not invertible");
  if (const auto* g = std::get_if<GeneratorMix>(&s); g && g->target != 1 && g->target != 2)
    throw InputError("generator mix target must be 1 or 2");
  if (const auto* sh = std::get_if<Shear>(&s); sh && sh->p.var() != "x")
    throw InputError("shear polynomial must be in x");
}

inline std::pair<MPoly, MPoly> compose_right(const MPoly& f1, const MPoly& f2, const AutoStep& s) {
  auto [X, Y] = coordinate_map(s);
  const std::map<std::string, MPoly> sub{{"x", X}, {"y", Y}};
  return {substitute(f1, sub), substitute(f2, sub)};
}

}  // namespace detail

inline std::pair<MPoly, MPoly> apply_step(const AutoStep& s, const MPoly& f1, const MPoly& f2) {
  detail::check_step(s);
  if (is_right_step(s)) return detail::compose_right(f1, f2, s);
  if (const auto* l = std::get_if<LinearMap>(&s))
    return {f1 * l->m[0] + f2 * l->m[1], f1 * l->m[2] + f2 * l->m[3]};
  if (const auto* g = std::get_if<GeneratorMix>(&s))
    return g->target == 1 ? std::pair{f1 + f2 * g->factor, f2} : std::pair{f1, f2 + f1 * g->factor};
  return {f2, f1};
}

inline AutoStep inverse(const AutoStep& s) {
  detail::check_step(s);
  if (const auto* t = std::get_if<Translation>(&s)) return Translation{-t->dx, -t->dy};
  if (const auto* sh = std::get_if<Shear>(&s)) return Shear{-sh->p};
  if (const auto* l = std::get_if<LinearMap>(&s)) {
    const Rat d = l->det();
    return LinearMap{l->side, {l->m[3] / d, -l->m[1] / d, -l->m[2] / d, l->m[0] / d}};
  }
  if (const auto* g = std::get_if<GeneratorMix>(&s)) return GeneratorMix{g->target, -g->factor};
  return Swap{};
}

/// Where an intersection point of f goes under the step (the preimage under
/// the coordinate map for right steps; unchanged for left steps).
inline PlanePoint transform_point(const AutoStep& s, const PlanePoint& p) {
  if (const auto* t = std::get_if<Translation>(&s)) return {p.x - t->dx, p.y - t->dy};
  if (const auto* sh = std::get_if<Shear>(&s)) return {p.x, p.y - sh->p.evaluate(p.x)};
  if (const auto* l = std::get_if<LinearMap>(&s); l && l->side == Side::right) {
    const Rat d = l->det();
    return {(l->m[3] * p.x - l->m[1] * p.y) / d, (l->m[0] * p.y - l->m[2] * p.x) / d};
  }
  return p;
}

inline std::pair<MPoly, MPoly> apply_chain(const AutoChain& chain, MPoly f1, MPoly f2) {
  for (const auto& s : chain) std::tie(f1, f2) = apply_step(s, f1, f2);
  return {f1, f2};
}

inline AutoChain inverse_chain(const AutoChain& chain) {
  AutoChain out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

/// p(x) = sum_j c_j x^(m+j), j = 0..N-1, with p(a_i) = b_i. The origin is
/// implicit and must not be listed.
inline UPoly interpolate_shear(const std::vector<PlanePoint>& points, int m) {
  if (m <= 0) throw InputError("shear degree offset m must be positive");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].x == 0) throw InputError("interpolation point with zero x-coordinate");
    for (std::size_t j = 0; j < i; ++j)
      if (points[i].x == points[j].x) throw InputError("repeated x-coordinate " + to_string(points[i].x));
  }
  const std::size_t N = points.size();
  if (N == 0) return UPoly("x");
  RatMatrix a(N, N);
  std::vector<Rat> b(N);
  for (std::size_t i = 0; i < N; ++i) {
    Rat pw = rat_pow(points[i].x, static_cast<unsigned>(m));
    for (std::size_t j = 0; j < N; ++j, pw *= points[i].x) a(i, j) = pw;
    b[i] = points[i].y;
  }
  const SolveOutcome sol = solve(a, b);
  if (sol.kind != SolveKind::unique) throw InternalError("interpolation system is singular");
  std::vector<Rat> c(static_cast<std::size_t>(m) + N, Rat(0));
  for (std::size_t j = 0; j < N; ++j) c[static_cast<std::size_t>(m) + j] = (*sol.solution)[j];
  return UPoly("x", std::move(c));
}

inline PolyPair apply_shear(const PolyPair& pair, const UPoly& p) {
  auto [g1, g2] = apply_step(Shear{p}, pair.f1, pair.f2);
  return analyze(g1, g2);
}

namespace detail {

/// Leading form is c * x^d: returns c.
inline std::optional<Rat> pure_x_leading(const MPoly& f) {
  const MPoly lead = leading_homogeneous_part(f);
  if (lead.term_count() != 1 || lead.terms()[0].mono[1] != 0) return std::nullopt;
  return lead.terms()[0].coeff;
}

inline std::string leading_forms_text(const MPoly& f1, const MPoly& f2) {
  return "'" + print_poly(leading_homogeneous_part(f1)) + "' and '" + print_poly(leading_homogeneous_part(f2)) + "'";
}

struct NormalizeResult {
  MPoly f1;
  MPoly f2;
  AutoChain chain;
};

inline NormalizeResult normalize_leading_raw(MPoly f1, MPoly f2) {
  AutoChain chain;
  auto fail = [&] {
    return PreconditionError("cannot normalize leading forms to x^n with mixes and scalings: " +
                             leading_forms_text(f1, f2));
  };
  if (!pure_x_leading(f1) || !pure_x_leading(f2)) throw fail();
  const int d1 = f1.total_degree().value(), d2 = f2.total_degree().value();
  if (d1 != d2) {
    const AutoStep mix = d1 > d2 ? AutoStep{GeneratorMix{2, 1}} : AutoStep{GeneratorMix{1, 1}};
    std::tie(f1, f2) = apply_step(mix, f1, f2);
    chain.push_back(mix);
  }
  const auto c1 = pure_x_leading(f1), c2 = pure_x_leading(f2);
  if (!c1 || !c2 || f1.total_degree() != f2.total_degree() || f1.total_degree() == 0) throw fail();
  if (*c1 != 1 || *c2 != 1) {
    const AutoStep scale = LinearMap{Side::left, {1 / *c1, 0, 0, 1 / *c2}};
    std::tie(f1, f2) = apply_step(scale, f1, f2);
    chain.push_back(scale);
  }
  return {std::move(f1), std::move(f2), std::move(chain)};
}

}  // namespace detail

/// Degree equalization by a generator mix, then left diagonal scaling.
inline std::pair<PolyPair, AutoChain> normalize_leading(const PolyPair& pair) {
  auto r = detail::normalize_leading_raw(pair.f1, pair.f2);
  return {analyze(r.f1, r.f2), std::move(r.chain)};
}

struct ReductionReport {
  AutoChain chain;
  PolyPair before;
  PolyPair after;
  std::vector<PlanePoint> points_before;
  std::vector<PlanePoint> points_after;
  std::optional<int> shear_offset;   ///< the m used for the interpolation shear
  Rat jacobian_constant = 1;         ///< J(after) = c * J(before) o phi
  MPoly phi_x;                       ///< phi = composite coordinate map
  MPoly phi_y;
  bool jacobian_preserved = false;
  std::size_t intersection_number_before = 0;
  std::size_t intersection_number_after = 0;
};

namespace detail {

/// Checks caller-supplied points: distinct common zeros whose local
/// multiplicities account for the whole intersection number.
inline std::vector<PlanePoint> validate_points(const MPoly& f1, const MPoly& f2, std::vector<PlanePoint> pts,
                                               std::size_t total) {
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) throw InputError("duplicate intersection point");
  std::size_t sum = 0;
  for (const auto& p : pts) {
    const std::array<Rat, 2> at{p.x, p.y};
    if (f1.evaluate(at) != 0 || f2.evaluate(at) != 0)
      throw InputError("point (" + to_string(p.x) + ", " + to_string(p.y) + ") is not a common zero");
    sum += local_multiplicity(f1, f2, p.x, p.y, total);
  }
  if (sum != total)
    throw PreconditionError("supplied points account for " + std::to_string(sum) + " of " +
                            std::to_string(total) + " intersections");
  return pts;
}

inline bool distinct_x(const std::vector<PlanePoint>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (pts[i].x == pts[j].x) return false;
  return true;
}

}  // namespace detail

/// Moves every intersection point onto y = 0 and normalizes leading forms.
/// Points are computed when not supplied (they must all be rational).
inline ReductionReport reduce_full(const PolyPair& pair, std::optional<std::vector<PlanePoint>> points = std::nullopt) {
  ReductionReport rep;
  rep.before = pair;
  const auto total = quotient_dimension(buchberger({pair.f1, pair.f2}));
  if (!total) throw PreconditionError("non-discrete intersection: the ideal (f1, f2) is not zero-dimensional");
  rep.intersection_number_before = *total;
  std::vector<PlanePoint> pts;
  if (points) {
    pts = detail::validate_points(pair.f1, pair.f2, std::move(*points), *total);
  } else {
    for (const auto& pm : rational_intersection(pair.f1, pair.f2).points) pts.push_back(pm.point);
  }
  rep.points_before = pts;

  MPoly f1 = pair.f1, f2 = pair.f2;
  auto push = [&](const AutoStep& s) {
    std::tie(f1, f2) = apply_step(s, f1, f2);
    for (auto& p : pts) p = transform_point(s, p);
    rep.chain.push_back(s);
  };

  const PlanePoint origin{0, 0};
  if (!pts.empty() && std::find(pts.begin(), pts.end(), origin) == pts.end())
    push(Translation{pts.front().x, pts.front().y});

  if (!detail::distinct_x(pts)) {
    bool found = false;
    for (int k = 1; k <= 8 && !found; ++k) {
      for (int c : {k, -k}) {
        std::vector<PlanePoint> moved;
        const LinearMap lm{Side::right, {1, Rat(c), 0, 1}};
        for (const auto& p : pts) moved.push_back(transform_point(lm, p));
        if (detail::distinct_x(moved)) {
          push(lm);
          found = true;
          break;
        }
      }
    }
    if (!found) throw PreconditionError("no coordinate change (x + c*y, y) with |c| <= 8 separates the x-coordinates");
  }

  std::vector<PlanePoint> others;
  bool on_axis = true;
  for (const auto& p : pts) {
    if (p == origin) continue;
    others.push_back(p);
    if (p.y != 0) on_axis = false;
  }
  const bool pure = detail::pure_x_leading(f1) && detail::pure_x_leading(f2);
  if (!(on_axis && pure)) {
    const int dmax = std::max(f1.total_degree().value(), f2.total_degree().value());
    bool done = false;
    for (int m = dmax + 1; m <= dmax + 32 && !done; ++m) {
      UPoly p = interpolate_shear(others, m);
      if (p.is_zero()) {
        p = UPoly::monomial("x", static_cast<std::size_t>(m), 1);
        for (const auto& q : others) p = p * UPoly::linear_factor("x", q.x);
      }
      auto [g1, g2] = apply_step(Shear{p}, f1, f2);
      if (detail::pure_x_leading(g1) && detail::pure_x_leading(g2)) {
        push(Shear{p});
        rep.shear_offset = m;
        done = true;
      }
    }
    if (!done) throw InternalError("no shear degree made the leading forms depend only on x");
  }

  auto norm = detail::normalize_leading_raw(f1, f2);
  for (const auto& s : norm.chain) rep.chain.push_back(s);
  f1 = std::move(norm.f1);
  f2 = std::move(norm.f2);
  rep.points_after = pts;
  std::sort(rep.points_after.begin(), rep.points_after.end());

  rep.after = analyze(f1, f2);
  if (!rep.after.rc1 || !rep.after.rc2) throw InternalError("reduction finished without RC1 and RC2");
  const auto total_after = quotient_dimension(buchberger({f1, f2}));
  rep.intersection_number_after = total_after.value_or(0);
  if (!total_after || *total_after != *total) throw InternalError("reduction changed the intersection number");

  const Ring& R = Ring::xy();
  rep.phi_x = MPoly::var(R, "x");
  rep.phi_y = MPoly::var(R, "y");
  for (const auto& s : rep.chain) {
    rep.jacobian_constant *= jacobian_multiplier(s);
    if (!is_right_step(s)) continue;
    auto [X, Y] = coordinate_map(s);
    const std::map<std::string, MPoly> sub{{"x", X}, {"y", Y}};
    rep.phi_x = substitute(rep.phi_x, sub);
    rep.phi_y = substitute(rep.phi_y, sub);
  }
  const MPoly pulled = substitute(pair.jac, {{"x", rep.phi_x}, {"y", rep.phi_y}});
  rep.jacobian_preserved = rep.after.jac == pulled * rep.jacobian_constant;
  return rep;
}

}  // namespace jacred

#endif  // JACRED_REDUCTION_HPP
