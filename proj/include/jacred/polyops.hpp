#ifndef JACRED_POLYOPS_HPP
#define JACRED_POLYOPS_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jacred/mpoly.hpp"
#include "jacred/upoly.hpp"

namespace jacred {

inline MPoly partial_derivative(const MPoly& f, std::size_t var) {
  if (var >= f.ring().size()) throw InputError("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.mono[var] == 0) continue;
    Monomial m = t.mono;
    const long e = m[var];
    m[var] -= 1;
    terms.push_back({m, t.coeff * Rat(e)});
  }
  return MPoly::from_terms(f.ring(), std::move(terms));
}

inline MPoly partial_derivative(const MPoly& f, std::string_view var) {
  return partial_derivative(f, f.ring().index(var));
}

/// Determinant of the 2x2 Jacobian of (f1, f2) with respect to variables (u, v).
inline MPoly jacobian(const MPoly& f1, const MPoly& f2, std::size_t u, std::size_t v) {
  return partial_derivative(f1, u) * partial_derivative(f2, v) -
         partial_derivative(f1, v) * partial_derivative(f2, u);
}

/// J(f) = d(f1, f2)/d(x, y) for polynomials of the plane ring.
inline MPoly jacobian2(const MPoly& f1, const MPoly& f2) {
  if (!(f1.ring() == Ring::xy()) || !(f2.ring() == Ring::xy()))
    throw InputError("jacobian2 requires polynomials in the ring {x, y}");
  return jacobian(f1, f2, 0, 1);
}

/// Sum of the terms of maximal total degree.
inline MPoly leading_homogeneous_part(const MPoly& f) {
  if (f.is_zero()) throw InputError("leading homogeneous part of the zero polynomial");
  const auto top = f.terms().front().mono.degree();
  std::vector<Term> terms;
  for (const auto& t : f.terms())
    if (t.mono.degree() == top) terms.push_back(t);
  return MPoly::from_terms(f.ring(), std::move(terms));
}

/// X0^d f(X1/X0, X2/X0, ...) in `target`, whose first variable is the new X0.
inline MPoly homogenize(const MPoly& f, int d, const Ring& target) {
  if (target.size() != f.ring().size() + 1)
    throw InputError("homogenization ring must have exactly one extra variable");
  if (!f.is_zero() && f.total_degree().value() > d)
    throw InputError("homogenization degree below total degree");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(target.size());
    m[0] = static_cast<std::uint32_t>(d) - t.mono.degree();
    for (std::size_t i = 0; i < f.ring().size(); ++i) m[i + 1] = t.mono[i];
    terms.push_back({m, t.coeff});
  }
  return MPoly::from_terms(target, std::move(terms));
}

inline MPoly homogenize(const MPoly& f, int d) {
  if (!(f.ring() == Ring::xy())) throw InputError("default homogenization expects the ring {x, y}");
  return homogenize(f, d, Ring::projective());
}

/// Sets the first variable to 1 and renames the rest into `target`.
inline MPoly dehomogenize(const MPoly& F, const Ring& target) {
  if (F.ring().size() != target.size() + 1) throw InputError("dehomogenization ring size mismatch");
  if (!F.is_homogeneous()) throw InputError("dehomogenize requires a homogeneous polynomial");
  std::vector<Term> terms;
  for (const auto& t : F.terms()) {
    Monomial m(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) m[i] = t.mono[i + 1];
    terms.push_back({m, t.coeff});
  }
  return MPoly::from_terms(target, std::move(terms));
}

inline MPoly dehomogenize(const MPoly& F) { return dehomogenize(F, Ring::xy()); }

/// Composition f(images...). Every variable of f's ring needs an image and
/// all images must share a single ring.
inline MPoly substitute(const MPoly& f, const std::map<std::string, MPoly>& assignment) {
  const Ring& src = f.ring();
  std::vector<const MPoly*> images(src.size(), nullptr);
  const Ring* target = nullptr;
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = assignment.find(src.name(i));
    if (it == assignment.end()) throw InputError("substitution has no image for '" + src.name(i) + "'");
    if (target && !(it->second.ring() == *target)) throw InputError("substitution images live in different rings");
    target = &it->second.ring();
    images[i] = &it->second;
  }
  if (!target) {
    if (assignment.empty()) return f;
    target = &assignment.begin()->second.ring();
  }
  // powers[i][e] = images[i]^e, built lazily.
  std::vector<std::vector<MPoly>> powers(src.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly(*target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[i]);
    return cache[e];
  };
  MPoly result(*target);
  for (const auto& t : f.terms()) {
    MPoly term(*target, t.coeff);
    for (std::size_t i = 0; i < src.size(); ++i)
      if (t.mono[i] != 0) term *= power(i, t.mono[i]);
    result += term;
  }
  return result;
}

/// Re-expresses f in a ring that contains all of f's variables (by name).
inline MPoly embed(const MPoly& f, const Ring& target) {
  std::vector<std::size_t> map(f.ring().size());
  for (std::size_t i = 0; i < f.ring().size(); ++i) map[i] = target.index(f.ring().name(i));
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(target.size());
    for (std::size_t i = 0; i < map.size(); ++i) m[map[i]] = t.mono[i];
    terms.push_back({m, t.coeff});
  }
  return MPoly::from_terms(target, std::move(terms));
}

/// f / y for f with no y-free terms.
inline MPoly exact_div_y(const MPoly& f) {
  const std::size_t y = f.ring().index("y");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.mono[y] == 0)
      throw PreconditionError("exact_div_y: polynomial has a nonzero y-free part");
    Monomial m = t.mono;
    m[y] -= 1;
    terms.push_back({m, t.coeff});
  }
  return MPoly::from_terms(f.ring(), std::move(terms));
}

/// f(x, 0) as a univariate polynomial in x.
inline UPoly restrict_to_x_axis(const MPoly& f) {
  const std::size_t x = f.ring().index("x"), y = f.ring().index("y");
  std::vector<Rat> c;
  for (const auto& t : f.terms()) {
    if (t.mono[y] != 0) continue;
    const std::size_t e = t.mono[x];
    if (c.size() <= e) c.resize(e + 1, Rat(0));
    c[e] += t.coeff;
  }
  return UPoly("x", std::move(c));
}

/// Coefficients of f as a polynomial in y over Q[x]; index = power of y.
inline std::vector<UPoly> coefficients_in_y(const MPoly& f) {
  const std::size_t x = f.ring().index("x"), y = f.ring().index("y");
  if (f.ring().size() != 2) throw InputError("expected a polynomial in {x, y}");
  std::vector<std::vector<Rat>> c;
  for (const auto& t : f.terms()) {
    const std::size_t j = t.mono[y], i = t.mono[x];
    if (c.size() <= j) c.resize(j + 1);
    if (c[j].size() <= i) c[j].resize(i + 1, Rat(0));
    c[j][i] += t.coeff;
  }
  std::vector<UPoly> out;
  for (auto& v : c) out.emplace_back("x", std::move(v));
  return out;
}

/// Translation f(x + a, y + b).
inline MPoly translate(const MPoly& f, const Rat& a, const Rat& b) {
  const Ring& R = f.ring();
  return substitute(f, {{"x", MPoly::var(R, "x") + a}, {"y", MPoly::var(R, "y") + b}});
}

/// Determinant of a square matrix over Q[x] by fraction-free (Bareiss) elimination.
inline UPoly determinant(std::vector<std::vector<UPoly>> m, const std::string& var) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly::constant(var, 1);
  bool negate = false;
  UPoly prev = UPoly::constant(var, 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return UPoly(var);
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = UPoly(var);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Sylvester-matrix resultant of f and g with respect to y, as a polynomial in x.
inline UPoly resultant_y(const MPoly& f, const MPoly& g) {
  if (!(f.ring() == Ring::xy()) || !(g.ring() == Ring::xy()))
    throw InputError("resultant_y requires polynomials in the ring {x, y}");
  const auto a = coefficients_in_y(f), b = coefficients_in_y(g);
  if (a.size() < 2 || b.size() < 2) throw InputError("resultant_y needs positive y-degree operands");
  const std::size_t p = a.size() - 1, q = b.size() - 1, n = p + q;
  std::vector<std::vector<UPoly>> syl(n, std::vector<UPoly>(n, UPoly("x")));
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t i = 0; i <= p; ++i) syl[r][r + i] = a[p - i];
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t i = 0; i <= q; ++i) syl[q + r][r + i] = b[q - i];
  return determinant(std::move(syl), "x");
}

}  // namespace jacred

#endif  // JACRED_POLYOPS_HPP
