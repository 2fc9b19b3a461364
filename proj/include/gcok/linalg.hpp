#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcok/error.hpp"
#include "gcok/scalar.hpp"

namespace gcok {

/// Coordinate vector over the Gaussian rationals.
using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline bool is_zero(std::span<const Scalar> v) {
  return std::ranges::all_of(v, [](const Scalar& s) { return s.is_zero(); });
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add: size mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sub: size mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

inline Vector operator*(const Scalar& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

/// Dense row-major matrix of Scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    std::vector<Vector> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
  }

  static Matrix from_rows(std::span<const Vector> rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw DimensionMismatch("Matrix::from_rows: ragged rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_columns(std::span<const Vector> cols) { return from_rows(cols).transpose(); }

  /// Column vector times row vector.
  static Matrix outer(const Vector& col, const Vector& row) {
    Matrix m(col.size(), row.size());
    for (std::size_t r = 0; r < col.size(); ++r)
      for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = col[r] * row[c];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  bool is_zero() const { return gcok::is_zero(data_); }
  bool is_real() const {
    return std::ranges::all_of(data_, [](const Scalar& s) { return s.is_real(); });
  }
  bool is_symmetric() const { return is_square() && *this == transpose(); }

  Vector operator*(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector product: size mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a(r, k);
        if (x.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator*(const Scalar& s, Matrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }
  Matrix operator-() const { return Scalar(-1) * *this; }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  std::size_t rank = 0;
  Matrix reduced;                   // rank x cols, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each reduced row
};

/// Unique reduced row-echelon form by Gauss-Jordan elimination.
inline RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != lead)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(lead, k));
    const Scalar inv = Scalar(1) / a(lead, c);
    for (std::size_t k = c; k < a.cols(); ++k) a(lead, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const Scalar f = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (!a(lead, k).is_zero()) a(r, k) -= f * a(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {pivots.size(), a.block(0, 0, pivots.size(), a.cols()), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Linear subspace of Scalar^n stored in canonical (reduced row-echelon) form,
/// so equality of subspaces is equality of stored bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::span<const Vector> generators) {
    Subspace s(ambient_dim);
    if (generators.empty()) return s;
    for (const auto& g : generators)
      if (g.size() != ambient_dim) throw DimensionMismatch("Subspace::span: generator has wrong dimension");
    auto r = rref(Matrix::from_rows(generators));
    s.pivots_ = std::move(r.pivots);
    for (std::size_t k = 0; k < r.rank; ++k) s.basis_.push_back(r.reduced.row(k));
    return s;
  }
  static Subspace span(std::size_t ambient_dim, std::initializer_list<Vector> generators) {
    const std::vector<Vector> g(generators);
    return span(ambient_dim, g);
  }

  static Subspace full(std::size_t n) {
    std::vector<Vector> e;
    for (std::size_t k = 0; k < n; ++k) {
      e.emplace_back(n);
      e.back()[k] = 1;
    }
    return span(n, e);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Membership by elimination against the canonical basis.
  bool contains(const Vector& v) const { return residual(v).empty(); }

  /// Remainder of v after elimination against the basis; empty when v lies in the span.
  Vector residual(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("Subspace::contains: dimension mismatch");
    Vector w = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Scalar f = w[pivots_[k]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < ambient_; ++c)
        if (!basis_[k][c].is_zero()) w[c] -= f * basis_[k][c];
    }
    return gcok::is_zero(w) ? Vector{} : w;
  }

  bool contains(const Subspace& other) const {
    return std::ranges::all_of(other.basis_, [&](const Vector& v) { return contains(v); });
  }

  Subspace operator+(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace sum: dimension mismatch");
    std::vector<Vector> g = basis_;
    g.insert(g.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, g);
  }

  /// Image of the subspace under a linear map.
  Subspace image(const Matrix& m) const {
    if (m.cols() != ambient_) throw DimensionMismatch("Subspace::image: dimension mismatch");
    std::vector<Vector> g;
    for (const auto& b : basis_) g.push_back(m * b);
    return span(m.rows(), g);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0}.
inline Subspace kernel(const Matrix& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivots[k]] = -r.reduced(k, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), gens);
}

/// kernel(m - lambda Id).
inline Subspace eigenspace(const Matrix& m, const Scalar& lambda) {
  if (!m.is_square()) throw DimensionMismatch("eigenspace: matrix is not square");
  return kernel(m - lambda * Matrix::identity(m.rows()));
}

inline Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant: matrix is not square");
  Matrix a = m;
  Scalar det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = Scalar(1) / a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Scalar f = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n));
  const auto r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw Error("inverse: matrix is singular");
  return r.reduced.block(0, n, n, n);
}

/// Sylvester criterion: every leading principal minor is positive.
/// Requires a real symmetric matrix.
inline bool is_positive_definite(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("is_positive_definite: matrix is not square");
  if (!m.is_real()) throw PreconditionFailure("is_positive_definite: matrix has non-real entries");
  if (!m.is_symmetric()) throw PreconditionFailure("is_positive_definite: matrix is not symmetric");
  for (std::size_t k = 1; k <= m.rows(); ++k)
    if (determinant(m.block(0, 0, k, k)).re() <= 0) return false;
  return true;
}

}  // namespace gcok
