#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "weilgroid/error.hpp"
#include "weilgroid/rational.hpp"

namespace weilgroid {

/// Dense exact rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Rational& v = x(i, k);
        if (weilgroid::is_zero(v)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j)
          if (!weilgroid::is_zero(y(k, j))) r(i, j) += v * y(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!weilgroid::is_zero(v)) return false;
    return true;
  }

  /// Rows of `top` followed by rows of `bottom`.
  static Matrix stack(const Matrix& top, const Matrix& bottom) {
    if (top.rows_ == 0) return bottom;
    if (bottom.rows_ == 0) return top;
    if (top.cols_ != bottom.cols_) fail(ErrorKind::DimensionMismatch, "stacking matrices of different width");
    Matrix r(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.a_.begin(), top.a_.end(), r.a_.begin());
    std::copy(bottom.a_.begin(), bottom.a_.end(), r.a_.begin() + static_cast<std::ptrdiff_t>(top.a_.size()));
    return r;
  }

  /// I_k ⊗ this: k copies on the diagonal.
  Matrix block_diagonal(std::size_t k) const {
    Matrix r(rows_ * k, cols_ * k);
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(b * rows_ + i, b * cols_ + j) = (*this)(i, j);
    return r;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).get_str();
      out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Reduced row echelon form R of A together with an invertible T, T·A = R.
struct RowReduction {
  Matrix reduced;
  Matrix transform;
  std::vector<std::size_t> pivots;  // pivot column of each of the first rank() rows
  std::size_t rank() const { return pivots.size(); }
};

inline RowReduction row_reduce(const Matrix& a) {
  RowReduction out{a, Matrix::identity(a.rows()), {}};
  Matrix& r = out.reduced;
  Matrix& t = out.transform;
  const std::size_t n = r.rows(), m = r.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && is_zero(r(piv, col))) ++piv;
    if (piv == n) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m; ++j) std::swap(r(piv, j), r(row, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(t(piv, j), t(row, j));
    }
    Rational inv = 1 / r(row, col);
    for (std::size_t j = 0; j < m; ++j)
      if (!is_zero(r(row, j))) r(row, j) *= inv;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(t(row, j))) t(row, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || is_zero(r(i, col))) continue;
      Rational f = r(i, col);
      for (std::size_t j = 0; j < m; ++j)
        if (!is_zero(r(row, j))) r(i, j) -= f * r(row, j);
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(t(row, j))) t(i, j) -= f * t(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

inline std::size_t rank(const Matrix& a) { return row_reduce(a).rank(); }

/// Basis of {v : A v = 0}, one column per vector.
inline std::vector<std::vector<Rational>> nullspace(const Matrix& a) {
  auto rr = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < rr.rank(); ++i) v[rr.pivots[i]] = -rr.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solver for P z = v when P has full column rank. The rational transform is
/// applied to right-hand sides over any Q-module S, so one reduction serves
/// both rational and polynomial coefficients.
class FullRankSolver {
 public:
  explicit FullRankSolver(const Matrix& p) : rows_(p.rows()), cols_(p.cols()) {
    auto rr = row_reduce(p);
    rank_ = rr.rank();
    if (rank_ != cols_) return;
    solution_.resize(cols_);
    consistency_.resize(rows_ - cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      auto& dst = i < cols_ ? solution_[i] : consistency_[i - cols_];
      for (std::size_t j = 0; j < rows_; ++j)
        if (!is_zero(rr.transform(i, j))) dst.emplace_back(j, rr.transform(i, j));
    }
  }

  bool injective() const { return rank_ == cols_; }
  std::size_t rank() const { return rank_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Returns false when v is outside the image.
  template <Coefficient S>
  bool solve(const std::vector<S>& v, std::vector<S>& z) const {
    if (!injective()) fail(ErrorKind::NotPerceivedLimit, "system is not injective");
    if (v.size() != rows_) fail(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
    for (const auto& row : consistency_) {
      S acc{};
      for (const auto& [j, q] : row)
        if (!is_zero(v[j])) acc += v[j] * q;
      if (!is_zero(acc)) return false;
    }
    z.assign(cols_, S{});
    for (std::size_t i = 0; i < cols_; ++i)
      for (const auto& [j, q] : solution_[i])
        if (!is_zero(v[j])) z[i] += v[j] * q;
    return true;
  }

 private:
  using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
  std::size_t rows_, cols_, rank_ = 0;
  std::vector<SparseRow> solution_;
  std::vector<SparseRow> consistency_;
};

}  // namespace weilgroid
