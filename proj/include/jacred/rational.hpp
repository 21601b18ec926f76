#ifndef JACRED_RATIONAL_HPP
#define JACRED_RATIONAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jacred/error.hpp"

namespace jacred {

using Int = mpz_class;
/// Exact rational scalar. gmpxx arithmetic keeps results canonical.
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InputError("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

/// Accepts an optional sign, digits, and an optional "/digits" part.
inline std::optional<Rat> parse_rat(std::string_view s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  auto digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    out.assign(s.substr(start, i - start));
    return !out.empty();
  };
  std::string num, den = "1";
  if (!digits(num)) return std::nullopt;
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (!digits(den)) return std::nullopt;
  }
  if (i != s.size()) return std::nullopt;
  Int n(num), d(den);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return make_rat(n, d);
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat result = 1;
  Rat b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

}  // namespace jacred

#endif  // JACRED_RATIONAL_HPP
