#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "fconn/poly.hpp"
#include "fconn/ratfunc.hpp"
#include "fconn/series.hpp"

namespace fconn {

// Dense matrix over an arbitrary commutative ring element type. Entries are
// never default-constructed by the arithmetic (TruncSeries needs a variable
// name and a certified order even when zero), so constructors take a fill.
template <typename E>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols, const E& fill)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(size_t n, const E& zero, const E& one) {
    Matrix m(n, n, zero);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  E& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const E& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.a_[k] + o.a_[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.a_[k] - o.a_[k];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    Matrix r(rows_, o.cols_, a_.empty() ? E() : a_[0]);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < o.cols_; ++j) {
        E acc = at(i, 0) * o.at(0, j);
        for (size_t k = 1; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
        r.at(i, j) = acc;
      }
    return r;
  }

  Matrix scaled(const E& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * s;
    return r;
  }

  Matrix transpose() const {
    if (rows_ == 0 || cols_ == 0) return Matrix();
    Matrix r(cols_, rows_, a_[0]);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  template <typename F>
  auto map(F f) const {
    using R = decltype(f(a_[0]));
    Matrix<R> r(rows_, cols_, f(a_[0]));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(i, j) = f(at(i, j));
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  size_t rows_, cols_;
  std::vector<E> a_;
};

using RMatrix = Matrix<Rational>;

inline RMatrix rmat(size_t rows, size_t cols) { return RMatrix(rows, cols, Rational(0)); }
inline RMatrix rmat(const std::vector<std::vector<Rational>>& rows) {
  RMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), Rational(0));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}
inline RMatrix ridentity(size_t n) { return RMatrix::identity(n, Rational(0), Rational(1)); }

inline bool elem_is_zero(const Rational& x) { return x == 0; }
inline bool elem_is_zero(const RatFunc& x) { return x.is_zero(); }

// Row reduction over a field. Returns the pivot columns; the matrix is left
// in reduced row echelon form.
template <typename E>
std::vector<size_t> rref_inplace(Matrix<E>& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && elem_is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    E inv = m.at(row, col);
    for (size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) / inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || elem_is_zero(m.at(i, col))) continue;
      E f = m.at(i, col);
      for (size_t j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename E>
size_t rank(Matrix<E> m) {
  return rref_inplace(m).size();
}

// Basis of the right kernel, one column vector per free column, with the free
// coordinate normalized to 1. Deterministic: free columns in increasing order.
template <typename E>
std::vector<std::vector<E>> kernel_basis(Matrix<E> m, const E& zero, const E& one) {
  std::vector<size_t> pivots = rref_inplace(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<E>> basis;
  for (size_t col = 0; col < m.cols(); ++col) {
    if (is_pivot[col]) continue;
    std::vector<E> v(m.cols(), zero);
    v[col] = one;
    for (size_t k = 0; k < pivots.size(); ++k)
      if (pivots[k] < col) v[pivots[k]] = -m.at(k, col);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves A x = b over a field; nullopt when inconsistent. Free variables are
// set to zero.
template <typename E>
std::optional<std::vector<E>> solve_linear(const Matrix<E>& a, const std::vector<E>& b,
                                           const E& zero) {
  Matrix<E> aug(a.rows(), a.cols() + 1, zero);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<size_t> pivots = rref_inplace(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<E> x(a.cols(), zero);
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, a.cols());
  return x;
}

template <typename E>
Matrix<E> inverse_field(const Matrix<E>& a, const E& zero, const E& one) {
  size_t n = a.rows();
  Matrix<E> aug(n, 2 * n, zero);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = one;
  }
  std::vector<size_t> pivots = rref_inplace(aug);
  if (pivots.size() != n) throw SingularMatrix();
  Matrix<E> inv(n, n, zero);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

inline Rational trace(const RMatrix& m) {
  Rational t(0);
  for (size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence;
// exact over Q since the only divisions are by integers.
inline Poly charpoly(const RMatrix& a, const std::string& var) {
  size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;  // coefficient of x^n
  RMatrix m = ridentity(n);
  for (size_t k = 1; k <= n; ++k) {
    m = a * m;
    Rational ck = -trace(m) / Rational((long)k);
    c[n - k] = ck;
    for (size_t i = 0; i < n; ++i) m.at(i, i) += ck;
  }
  return Poly(var, c);
}

// Fraction-free determinant (Bareiss) over an integral domain with exact
// division; used for resultants over Q[t].
Poly bareiss_det(Matrix<Poly> m);

// Inverse of a series matrix with entries in Q[[x]] (valuation >= 0) whose
// constant term is invertible; Neumann series around the constant part, so
// certified orders propagate through TruncSeries arithmetic unchanged.
Matrix<TruncSeries> series_matrix_inverse(const Matrix<TruncSeries>& g);

// Coefficient extraction and assembly for matrices of series.
RMatrix series_matrix_coeff(const Matrix<TruncSeries>& m, long exp);
Matrix<TruncSeries> series_matrix_scalar(const RMatrix& m, const std::string& var, long exp,
                                         long certified);
long series_matrix_valuation(const Matrix<TruncSeries>& m);
long series_matrix_certified(const Matrix<TruncSeries>& m);

}  // namespace fconn
