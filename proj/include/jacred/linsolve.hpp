#ifndef JACRED_LINSOLVE_HPP
#define JACRED_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "jacred/rational.hpp"

namespace jacred {

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw InputError("matrix entry count does not match shape");
  }
  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Rat>& data() const { return data_; }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw InputError("matrix-vector dimension mismatch");
    std::vector<Rat> out(rows_, Rat(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Row echelon form produced by fraction-free elimination.
struct Echelon {
  RatMatrix matrix;                    ///< rows permuted and eliminated
  std::vector<std::size_t> pivot_cols; ///< pivot column of row i, i < rank
  std::vector<std::size_t> row_origin; ///< original index of each echelon row
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Bareiss elimination over the first `elim_cols` columns. Pivot = first
/// nonzero entry at or below the current row. With integer input every
/// intermediate entry is an integer (each is a minor of the input).
inline Echelon bareiss_echelon(RatMatrix m, std::size_t elim_cols) {
  Echelon out;
  out.row_origin.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.row_origin[i] = i;
  Rat prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < elim_cols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
      std::swap(out.row_origin[p], out.row_origin[row]);
    }
    const Rat pivot = m(row, col);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      const Rat lead = m(i, col);
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        if (lead == 0 && pivot == prev) continue;
        m(i, c) = (pivot * m(i, c) - lead * m(row, c)) / prev;
      }
      m(i, col) = 0;
    }
    prev = pivot;
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.matrix = std::move(m);
  return out;
}

inline Echelon bareiss_echelon(RatMatrix m) {
  const std::size_t cols = m.cols();
  return bareiss_echelon(std::move(m), cols);
}

enum class SolveKind { unique, underdetermined, inconsistent };

struct SolveOutcome {
  SolveKind kind = SolveKind::inconsistent;
  std::optional<std::vector<Rat>> solution;   ///< free variables set to zero
  std::vector<std::vector<Rat>> nullspace_basis;
  std::optional<std::size_t> inconsistent_row; ///< original index of a failing row
};

namespace detail {

/// Back substitution on an echelon system; `rhs_col` = nullopt solves the homogeneous one.
inline std::vector<Rat> back_substitute(const Echelon& e, std::size_t ncols, std::optional<std::size_t> rhs_col,
                                        std::optional<std::size_t> free_col) {
  std::vector<Rat> x(ncols, Rat(0));
  if (free_col) x[*free_col] = 1;
  for (std::size_t r = e.rank(); r-- > 0;) {
    const std::size_t pc = e.pivot_cols[r];
    Rat acc = rhs_col ? e.matrix(r, *rhs_col) : Rat(0);
    for (std::size_t c = pc + 1; c < ncols; ++c)
      if (x[c] != 0 && e.matrix(r, c) != 0) acc -= e.matrix(r, c) * x[c];
    x[pc] = acc / e.matrix(r, pc);
  }
  return x;
}

inline std::vector<std::vector<Rat>> nullspace_from(const Echelon& e, std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t c = 0; c < ncols; ++c)
    if (!is_pivot[c]) basis.push_back(back_substitute(e, ncols, std::nullopt, c));
  return basis;
}

}  // namespace detail

inline std::size_t rank(const RatMatrix& a) { return bareiss_echelon(a).rank(); }

inline std::vector<std::vector<Rat>> nullspace(const RatMatrix& a) {
  return detail::nullspace_from(bareiss_echelon(a), a.cols());
}

/// Exact solve of A x = b.
inline SolveOutcome solve(const RatMatrix& a, const std::vector<Rat>& b) {
  if (b.size() != a.rows()) throw InputError("right-hand side length does not match matrix rows");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const Echelon e = bareiss_echelon(std::move(aug), a.cols());
  SolveOutcome out;
  for (std::size_t r = e.rank(); r < a.rows(); ++r) {
    if (e.matrix(r, a.cols()) != 0) {
      out.kind = SolveKind::inconsistent;
      out.inconsistent_row = e.row_origin[r];
      return out;
    }
  }
  out.solution = detail::back_substitute(e, a.cols(), a.cols(), std::nullopt);
  out.nullspace_basis = detail::nullspace_from(e, a.cols());
  out.kind = out.nullspace_basis.empty() ? SolveKind::unique : SolveKind::underdetermined;
  return out;
}

}  // namespace jacred

#endif  // JACRED_LINSOLVE_HPP
