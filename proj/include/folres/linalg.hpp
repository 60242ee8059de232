#ifndef FOLRES_LINALG_HPP
#define FOLRES_LINALG_HPP

#include <optional>
#include <vector>

#include "folres/fp.hpp"

namespace folres {

/// Dense matrix over F_p, sized for cotangent actions and truncated
/// monomial bases; plain Gaussian elimination throughout.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, Fp(0, p)) {}

  static FpMatrix identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Fp(1, p);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t p() const { return p_; }

  Fp& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Fp& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const FpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  FpMatrix operator*(const FpMatrix& o) const {
    FpMatrix r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }

  FpMatrix operator*(const Fp& c) const {
    FpMatrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
  }

  FpMatrix operator-(const FpMatrix& o) const {
    FpMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  /// Row echelon form in place; returns the rank.
  std::size_t echelonize() {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      std::size_t pivot = rank;
      while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) continue;
      swap_rows(pivot, rank);
      Fp inv = at(rank, col).inverse();
      for (std::size_t j = col; j < cols_; ++j) at(rank, j) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == rank || at(r, col).is_zero()) continue;
        Fp f = at(r, col);
        for (std::size_t j = col; j < cols_; ++j) at(r, j) -= f * at(rank, j);
      }
      ++rank;
    }
    return rank;
  }

  std::size_t rank() const {
    FpMatrix m = *this;
    return m.echelonize();
  }

  /// Basis of the right kernel, as rows.
  std::vector<std::vector<Fp>> kernel() const {
    FpMatrix m = *this;
    m.echelonize();
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::size_t c = 0;
      while (c < cols_ && m.at(r, c).is_zero()) ++c;
      if (c < cols_) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
      }
    }
    std::vector<std::vector<Fp>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Fp> v(cols_, Fp(0, p_));
      v[free] = Fp(1, p_);
      for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m.at(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::optional<FpMatrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    FpMatrix aug(rows_, 2 * cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = Fp(1, p_);
    }
    if (aug.echelonize() != rows_) return std::nullopt;
    FpMatrix inv(rows_, cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  Fp determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
    FpMatrix m = *this;
    Fp det(1, p_);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t pivot = col;
      while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) return Fp(0, p_);
      if (pivot != col) {
        m.swap_rows(pivot, col);
        det = -det;
      }
      det *= m.at(col, col);
      Fp inv = m.at(col, col).inverse();
      for (std::size_t r = col + 1; r < rows_; ++r) {
        if (m.at(r, col).is_zero()) continue;
        Fp f = m.at(r, col) * inv;
        for (std::size_t j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
      }
    }
    return det;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  std::size_t rows_, cols_;
  std::uint32_t p_;
  std::vector<Fp> data_;
};

}  // namespace folres

#endif
