#include "fconn/series.hpp"

namespace fconn {

namespace {

TruncSeries poly_as_series(const Poly& p, long terms) {
  // exact polynomial, certified out to the requested window
  if (terms <= 0) return TruncSeries::zero(p.var(), terms);
  std::vector<Rational> c((size_t)terms, Rational(0));
  for (size_t i = 0; i < c.size() && (long)i <= p.degree(); ++i) c[i] = p.coeff(i);
  return TruncSeries(p.var(), 0, std::move(c));
}

}  // namespace

TruncSeries ratfunc_laurent_expand(const RatFunc& f, const Rational& center, long order) {
  const std::string& var = f.var();
  if (f.is_zero()) return TruncSeries::zero(var, order);

  // recenter: p(u + center) makes u the local coordinate
  Poly n = f.num().shift(center);
  Poly d = f.den().shift(center);
  long vn = n.valuation_at_zero();
  long vd = d.valuation_at_zero();
  long v = vn - vd;  // valuation of f at the center
  long terms = order - v;
  if (terms <= 0) return TruncSeries::zero(var, order);

  std::vector<Rational> nu(n.coeffs().begin() + vn, n.coeffs().end());
  std::vector<Rational> du(d.coeffs().begin() + vd, d.coeffs().end());
  TruncSeries unit_n = poly_as_series(Poly(var, nu), terms);
  TruncSeries unit_d = poly_as_series(Poly(var, du), terms);
  return (unit_n * unit_d.inverse()).shifted(v);
}

TruncSeries ratfunc_laurent_expand_at_infinity(const RatFunc& f, long order) {
  // local coordinate is 1/x; expansion of f(1/u) at u = 0
  return ratfunc_laurent_expand(f.substitute_inverse(), Rational(0), order);
}

}  // namespace fconn
