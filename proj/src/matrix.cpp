#include "fconn/matrix.hpp"

#include <algorithm>

namespace fconn {

Poly bareiss_det(Matrix<Poly> m) {
  size_t n = m.rows();
  const std::string var = n > 0 ? m.at(0, 0).var() : "x";
  if (n == 0) return Poly::constant(Rational(1), var);
  Poly prev = Poly::constant(Rational(1), var);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      size_t sel = k + 1;
      while (sel < n && m.at(sel, k).is_zero()) ++sel;
      if (sel == n) return Poly(var);  // zero column below the diagonal
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(sel, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num.divrem(prev).first;  // exact in Bareiss elimination
      }
    prev = m.at(k, k);
  }
  Poly det = m.at(n - 1, n - 1);
  return sign == 1 ? det : -det;
}

Matrix<TruncSeries> series_matrix_inverse(const Matrix<TruncSeries>& g) {
  size_t n = g.rows();
  const std::string& var = g.at(0, 0).var();
  long cert = series_matrix_certified(g);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!g.at(i, j).is_zero() && g.at(i, j).valuation() < 0)
        throw SingularMatrix("series matrix inverse requires valuation >= 0");

  RMatrix c0 = series_matrix_coeff(g, 0);
  RMatrix c0inv = inverse_field(c0, Rational(0), Rational(1));  // throws if singular

  // g = c0 (I + N) with val N >= 1, so g^{-1} = (sum (-N)^k) c0^{-1}
  Matrix<TruncSeries> c0inv_s = series_matrix_scalar(c0inv, var, 0, cert);
  Matrix<TruncSeries> nmat = c0inv_s * g - series_matrix_scalar(ridentity(n), var, 0, cert);
  Matrix<TruncSeries> acc = series_matrix_scalar(ridentity(n), var, 0, cert);
  Matrix<TruncSeries> power = acc;
  for (long k = 1; k < cert; ++k) {
    power = -(power * nmat);
    if (series_matrix_valuation(power) >= cert) break;
    acc = acc + power;
  }
  return acc * c0inv_s;
}

RMatrix series_matrix_coeff(const Matrix<TruncSeries>& m, long exp) {
  RMatrix r = rmat(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).coeff(exp);
  return r;
}

Matrix<TruncSeries> series_matrix_scalar(const RMatrix& m, const std::string& var, long exp,
                                         long certified) {
  Matrix<TruncSeries> r(m.rows(), m.cols(), TruncSeries::zero(var, certified));
  if (certified <= exp) return r;  // the monomial is beyond the certified window
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) {
        std::vector<Rational> c((size_t)(certified - exp), Rational(0));
        c[0] = m.at(i, j);
        r.at(i, j) = TruncSeries(var, exp, std::move(c));
      }
  return r;
}

long series_matrix_valuation(const Matrix<TruncSeries>& m) {
  long v = m.at(0, 0).is_zero() ? m.at(0, 0).certified_order() : m.at(0, 0).valuation();
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      const TruncSeries& e = m.at(i, j);
      v = std::min(v, e.is_zero() ? e.certified_order() : e.valuation());
    }
  return v;
}

long series_matrix_certified(const Matrix<TruncSeries>& m) {
  long c = m.at(0, 0).certified_order();
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) c = std::min(c, m.at(i, j).certified_order());
  return c;
}

}  // namespace fconn
