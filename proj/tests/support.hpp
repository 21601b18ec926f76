#ifndef JACRED_TEST_SUPPORT_HPP
#define JACRED_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "jacred/jacred.hpp"

namespace jt {

using namespace jacred;

inline MPoly P(const char* s) { return parse_poly(s); }
inline UPoly U(const char* s) { return parse_upoly(s); }
inline Rat Q(const char* s) { return *parse_rat(s); }

inline MPoly rand_poly(std::mt19937_64& rng, int max_deg, int bound, double density = 0.6) {
  std::uniform_int_distribution<int> c(-bound, bound);
  std::bernoulli_distribution keep(density);
  std::vector<Term> t;
  for (int d = 0; d <= max_deg; ++d)
    for (int i = 0; i <= d; ++i)
      if (keep(rng)) t.push_back({Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(d - i)}, Rat(c(rng))});
  return MPoly::from_terms(Ring::xy(), std::move(t));
}

inline Rat rand_rat(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> n(-bound, bound), d(1, bound);
  return make_rat(n(rng), d(rng));
}

/// Value of f at (a, b) computed by Horner in y over Horner-in-x coefficient
/// rows; independent of MPoly::evaluate.
inline Rat eval_xy(const MPoly& f, const Rat& a, const Rat& b) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& t : f.terms()) {
    const std::size_t i = t.mono[0], j = t.mono[1];
    if (rows.size() <= j) rows.resize(j + 1);
    if (rows[j].size() <= i) rows[j].resize(i + 1, Rat(0));
    rows[j][i] += t.coeff;
  }
  Rat acc = 0;
  for (auto r = rows.rbegin(); r != rows.rend(); ++r) {
    Rat c = 0;
    for (auto it = r->rbegin(); it != r->rend(); ++it) c = c * a + *it;
    acc = acc * b + c;
  }
  return acc;
}

/// The running example (x + y + x^n, y + x^n).
inline PolyPair example_pair(int n) {
  const MPoly x = MPoly::var(Ring::xy(), "x"), y = MPoly::var(Ring::xy(), "y");
  const MPoly xn = pow(x, static_cast<unsigned>(n));
  return analyze(x + y + xn, y + xn);
}

inline MPoly xpow(int n) { return pow(MPoly::var(Ring::xy(), "x"), static_cast<unsigned>(n)); }

}  // namespace jt

#endif  // JACRED_TEST_SUPPORT_HPP
