#ifndef JACRED_TEXTIO_HPP
#define JACRED_TEXTIO_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "jacred/upoly.hpp"

namespace jacred {

inline constexpr unsigned kMaxExponent = 4096;

namespace detail {

/// Recursive descent over
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | variable | '(' expr ')'
///   rational := ['-'] nat ('/' nat)?
class Parser {
 public:
  Parser(std::string_view src, const Ring& ring) : src_(src), ring_(ring) {}

  MPoly parse() {
    skip_ws();
    MPoly e = expr();
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return e;
  }

 private:
  std::string_view src_;
  const Ring& ring_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    advance();
    return true;
  }

  MPoly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      advance();
    }
    MPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      advance();
      MPoly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        advance();
        acc = acc * factor();
      } else if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '(' || peek() == '_') {
        fail("implicit multiplication is not allowed; use '*'");
      } else {
        break;
      }
    }
    return acc;
  }

  MPoly factor() {
    MPoly b = base();
    if (accept('^')) {
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a natural number exponent");
      const std::size_t l = line_, c = col_;
      const std::string digits = nat();
      if (digits.size() > 6 || std::stoul(digits) > kMaxExponent)
        throw ParseError(l, c, "exponent exceeds " + std::to_string(kMaxExponent));
      b = pow(b, static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  MPoly base() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      advance();
      MPoly e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool neg = false;
      if (c == '-') {
        advance();
        neg = true;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number after '-'");
      }
      Int num(nat());
      Int den = 1;
      if (peek() == '/') {
        advance();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        const std::size_t l = line_, cc = col_;
        den = Int(nat());
        if (den == 0) throw ParseError(l, cc, "zero denominator");
      }
      Rat q = make_rat(num, den);
      return MPoly(ring_, neg ? Rat(-q) : q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t l = line_, cc = col_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        name += peek();
        advance();
      }
      if (!ring_.find(name)) throw ParseError(l, cc, "unknown variable '" + name + "'");
      return MPoly::var(ring_, name);
    }
    if (at_end()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string nat() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      d += peek();
      advance();
    }
    return d;
  }
};

}  // namespace detail

inline MPoly parse_poly(std::string_view src, const Ring& ring = Ring::xy()) {
  return detail::Parser(src, ring).parse();
}

/// Canonical text: terms in storage order, explicit '*' and '^', p/q coefficients.
inline std::string print_poly(const MPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool neg = t.coeff < 0;
    const Rat mag = abs(t.coeff);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < f.ring().size(); ++i) {
      const auto e = t.mono[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += f.ring().name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

inline std::string print_poly(const UPoly& p) { return print_poly(to_mpoly(p, Ring({p.var()}))); }

inline UPoly parse_upoly(std::string_view src, const std::string& var = "x") {
  return *to_upoly(parse_poly(src, Ring({var})), var);
}

}  // namespace jacred

#endif  // JACRED_TEXTIO_HPP
