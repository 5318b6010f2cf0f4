#include "fconn/connection.hpp"

#include <algorithm>

namespace fconn {

namespace {

Poly poly_negate_var(const Poly& p) {
  std::vector<Rational> c = p.coeffs();
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Poly(p.var(), c);
}

RatFunc ratfunc_negate_var(const RatFunc& f) {
  return RatFunc(poly_negate_var(f.num()), poly_negate_var(f.den()));
}

}  // namespace

Matrix<TruncSeries> expand_connection(const RationalConnection& conn, long order) {
  Matrix<TruncSeries> out(conn.rank(), conn.rank(), TruncSeries::zero(conn.var, order));
  for (size_t i = 0; i < conn.rank(); ++i)
    for (size_t j = 0; j < conn.rank(); ++j)
      out.at(i, j) = ratfunc_laurent_expand(conn.a.at(i, j), Rational(0), order);
  return out;
}

Matrix<TruncSeries> apply_gauge(const Matrix<TruncSeries>& a, const GaugeSeries& g,
                                long order) {
  if (g.certified() < order)
    throw InsufficientPrecision("gauge certified to " + std::to_string(g.certified()) +
                                " < requested order " + std::to_string(order));
  Matrix<TruncSeries> ginv = series_matrix_inverse(g.m);
  Matrix<TruncSeries> gprime = g.m.map([](const TruncSeries& s) { return s.derivative(); });
  Matrix<TruncSeries> tilde = ginv * a * g.m + ginv * gprime;
  return tilde.map([order](const TruncSeries& s) { return s.truncated(order); });
}

Matrix<TruncSeries> apply_gauge(const RationalConnection& conn, const GaugeSeries& g,
                                long order) {
  // expand far enough that the product's certification is limited by the
  // gauge, not by the expansion: entries of A can have poles, G' drops one
  Matrix<TruncSeries> a = expand_connection(conn, order + 2);
  long pole = std::max(0L, -series_matrix_valuation(a));
  if (pole > 0) a = expand_connection(conn, order + 2 + 2 * pole);
  return apply_gauge(a, g, order);
}

RationalConnection change_chart(const RationalConnection& conn,
                                const std::string& new_variable) {
  RatFunc scale = -RatFunc::power(conn.var, -2);
  Matrix<RatFunc> out = conn.a.map([&](const RatFunc& e) {
    return (scale * e.substitute_inverse()).with_var(new_variable);
  });
  return RationalConnection{new_variable, out};
}

RationalConnection grading_gauge(const RationalConnection& conn, const GradingVector& gr) {
  for (long d : gr.degrees)
    if (d % 2 != 0) throw OddDegree();
  size_t n = conn.rank();
  Matrix<RatFunc> out(n, n, RatFunc::constant(Rational(0), conn.var));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      long shift = (gr.degrees[i] - gr.degrees[j]) / 2;
      RatFunc e = conn.a.at(i, j);
      if (shift != 0) e = e * RatFunc::power(conn.var, shift);
      if (i == j && gr.degrees[i] != 0)
        e = e - RatFunc::power(conn.var, -1) * Rational(gr.degrees[i] / 2);
      out.at(i, j) = e;
    }
  return RationalConnection{conn.var, out};
}

RationalConnection dualize(const RationalConnection& conn, bool negate_variable) {
  Matrix<RatFunc> out = -conn.a.transpose();
  if (negate_variable) out = out.map(ratfunc_negate_var).map([](const RatFunc& f) { return -f; });
  return RationalConnection{conn.var, out};
}

}  // namespace fconn
