#ifndef JACRED_MONOMIAL_HPP
#define JACRED_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jacred/error.hpp"

namespace jacred {

/// Total degree with a distinct value for the zero polynomial.
class Degree {
 public:
  constexpr Degree(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_infinity() {
    Degree d(0);
    d.neg_inf_ = true;
    return d;
  }

  constexpr bool is_neg_infinity() const { return neg_inf_; }
  int value() const {
    if (neg_inf_) throw InternalError("degree of the zero polynomial has no integer value");
    return value_;
  }

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.neg_inf_ || b.neg_inf_) return neg_infinity();
    return Degree(a.value_ + b.value_);
  }

  std::string str() const { return neg_inf_ ? "-inf" : std::to_string(value_); }

 private:
  int value_;
  bool neg_inf_ = false;
};

inline constexpr std::size_t kMaxVars = 6;

/// Exponent vector, one entry per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : size_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw InputError("too many variables");
  }
  Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(exps.size()) {
    std::copy(exps.begin(), exps.end(), exps_.begin());
  }

  std::size_t size() const { return size_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return {exps_.data(), size_}; }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < size_; ++i) d += exps_[i];
    return d;
  }
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < size_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
    return m;
  }
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
    return m;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return m;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size_; ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.size_ == b.size_ &&
           std::equal(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin());
  }

 private:
  std::array<std::uint32_t, kMaxVars> exps_{};
  std::uint8_t size_ = 0;
};

/// Storage order: graded, ties broken lexicographically with the first ring
/// variable most significant. Returns true when a sorts before b (a is larger).
struct StorageOrderGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

/// Ordered list of variable names. Cheap to copy.
class Ring {
 public:
  Ring() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Ring(std::vector<std::string> names) {
    if (names.size() > kMaxVars) throw InputError("too many variables in ring");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) throw InputError("empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j]) throw InputError("duplicate variable '" + names[i] + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  /// The plane ring {x, y}.
  static const Ring& xy() {
    static const Ring ring({"x", "y"});
    return ring;
  }
  /// Homogeneous coordinates {X0, X1, X2} of the projective plane.
  static const Ring& projective() {
    static const Ring ring({"X0", "X1", "X2"});
    return ring;
  }

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
      if ((*names_)[i] == name) return i;
    return std::nullopt;
  }
  std::size_t index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw InputError("unknown variable '" + std::string(name) + "'");
  }

  /// Copy of this ring with one more variable appended.
  Ring extended(const std::string& name) const {
    auto names = *names_;
    names.push_back(name);
    return Ring(std::move(names));
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace jacred

#endif  // JACRED_MONOMIAL_HPP
