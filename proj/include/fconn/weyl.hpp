#pragma once

#include <map>
#include <string>
#include <utility>

#include "fconn/series.hpp"

namespace fconn {

// Element of the Weyl algebra in one variable, stored in normal order:
// sum over (j,k) of c_{jk} x^j dx^k with all x to the left of all dx.
struct WeylElement {
  std::string x, dx;
  std::map<std::pair<long, long>, Rational> terms;  // (j,k) -> coefficient

  void add_term(long j, long k, const Rational& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const WeylElement& o) const {
    return x == o.x && dx == o.dx && terms == o.terms;
  }
  std::string str() const;
};

WeylElement weyl_zero(const std::string& x, const std::string& dx);
WeylElement weyl_term(const std::string& x, const std::string& dx, long j, long k,
                      const Rational& c);

WeylElement weyl_add(const WeylElement& a, const WeylElement& b);
WeylElement weyl_scale(const WeylElement& a, const Rational& s);

// Normal-ordered product via dx^k x^j = sum_i C(k,i) j!/(j-i)! x^{j-i} dx^{k-i}.
WeylElement weyl_normalize_and_multiply(const WeylElement& a, const WeylElement& b);

// The Fourier-Laplace identification t -> dq, dt -> -q, renormal-ordered.
WeylElement fl_rename(const WeylElement& w, const std::string& q = "q",
                      const std::string& dq = "dq");

// Apply an operator to a truncated series in its own variable x (dx acts as
// d/dx, x as multiplication).
TruncSeries weyl_apply(const WeylElement& w, const TruncSeries& f);

// Apply an operator in (t, dt) to a series written in the variable s = 1/t:
// t acts as s^{-1}, dt as -s^2 d/ds.
TruncSeries weyl_apply_inverse_chart(const WeylElement& w, const TruncSeries& f);

// Borel transform sum a_m q^m -> sum m! a_m t^{-m-1}, returned in the
// coordinate s = 1/t (coefficient of s^{m+1} is m! a_m). Requires
// valuation >= 0.
TruncSeries formal_borel(const TruncSeries& series, const std::string& s_var = "s");

}  // namespace fconn
