#pragma once

// Dense exact linear algebra over a prime field GF(p).

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qct/errors.hpp"

namespace qct {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Characteristic of the ground field. All arithmetic is exact modulo `p`.
struct FieldSpec {
  std::uint32_t p = 2;

  FieldSpec() = default;
  explicit FieldSpec(std::uint32_t prime) : p(prime) {
    if (!is_prime(prime) || prime > 2147483647u) {
      throw PreconditionError("field characteristic must be a prime below 2^31, got " +
                              std::to_string(prime));
    }
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + (p - b); }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    assert(a % p != 0);
    return pow(a, p - 2);
  }
  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
      : rows_(rows), cols_(cols), field_(field), a_(rows * cols, 0) {}

  static Matrix identity(std::size_t n, FieldSpec field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix column(std::size_t c) const { return columns(c, c + 1); }

  Matrix columns(std::size_t first, std::size_t last) const {
    Matrix m(rows_, last - first, field_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = first; c < last; ++c) m(r, c - first) = (*this)(r, c);
    return m;
  }

  Matrix rows_range(std::size_t first, std::size_t last) const {
    Matrix m(last - first, cols_, field_);
    for (std::size_t r = first; r < last; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(r - first, c) = (*this)(r, c);
    return m;
  }

  Matrix select_columns(std::span<const std::size_t> idx) const {
    Matrix m(rows_, idx.size(), field_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
    return m;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  void add_block(std::size_t r0, std::size_t c0, const Matrix& b, std::uint32_t scale = 1) {
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) {
        auto& x = (*this)(r0 + r, c0 + c);
        x = field_.add(x, field_.mul(scale, b(r, c)));
      }
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix m(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        std::uint32_t x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          m(i, j) = a.field_.add(m(i, j), a.field_.mul(x, b(k, j)));
      }
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.field_.add(a.a_[i], b.a_[i]);
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.field_.sub(a.a_[i], b.a_[i]);
    return m;
  }

  Matrix scaled(std::uint32_t s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = field_.mul(x, s);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  // Flattens row-major; used to treat morphism spaces as vector spaces.
  const std::vector<std::uint32_t>& data() const noexcept { return a_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_{};
  std::vector<std::uint32_t> a_;
};

inline Matrix hstack(std::span<const Matrix> parts, std::size_t rows, FieldSpec field) {
  std::size_t cols = 0;
  for (const auto& p : parts) cols += p.cols();
  Matrix m(rows, cols, field);
  std::size_t c = 0;
  for (const auto& p : parts) {
    assert(p.rows() == rows || p.cols() == 0);
    if (p.cols() == 0) continue;
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

inline Matrix vstack(std::span<const Matrix> parts, std::size_t cols, FieldSpec field) {
  std::size_t rows = 0;
  for (const auto& p : parts) rows += p.rows();
  Matrix m(rows, cols, field);
  std::size_t r = 0;
  for (const auto& p : parts) {
    if (p.rows() == 0) continue;
    assert(p.cols() == cols);
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline RowEchelon rref(Matrix m) {
  const FieldSpec& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    std::uint32_t inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      std::uint32_t factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return rref(m).pivots.size();
}

/// Basis of the null space {x : m x = 0}, as the columns of the result.
inline Matrix nullspace(const Matrix& m) {
  const FieldSpec& f = m.field();
  if (m.rows() == 0) return Matrix::identity(m.cols(), f);
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(m.cols(), free.size(), f);
  for (std::size_t j = 0; j < free.size(); ++j) {
    basis(free[j], j) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis(pivots[i], j) = f.neg(r(i, free[j]));
  }
  return basis;
}

/// A basis of the column space, chosen among the original columns.
inline Matrix column_space(const Matrix& m) {
  if (m.empty()) return Matrix(m.rows(), 0, m.field());
  auto pivots = rref(m).pivots;
  return m.select_columns(pivots);
}

/// Standard basis vectors that extend the column span of `sub` to the whole
/// space. `sub` must have `dim` rows.
inline Matrix complement_basis(const Matrix& sub, std::size_t dim, FieldSpec field) {
  Matrix aug = hstack(std::vector<Matrix>{sub, Matrix::identity(dim, field)}, dim, field);
  auto pivots = rref(aug).pivots;
  std::vector<std::size_t> picked;
  for (auto p : pivots)
    if (p >= sub.cols()) picked.push_back(p);
  return aug.select_columns(picked);
}

/// Solves a x = b for x (b may have several columns). Returns nullopt when
/// the system is inconsistent.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  const FieldSpec& f = a.field();
  assert(a.rows() == b.rows());
  Matrix x(a.cols(), b.cols(), f);
  if (a.rows() == 0) return x;
  Matrix aug = hstack(std::vector<Matrix>{a, b}, a.rows(), f);
  auto [r, pivots] = rref(aug);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[i], c) = r(i, a.cols() + c);
  }
  return x;
}

}  // namespace qct
