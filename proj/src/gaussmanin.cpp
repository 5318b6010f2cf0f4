#include "fconn/gaussmanin.hpp"

#include <algorithm>

#include "fconn/factor.hpp"
#include "fconn/series.hpp"

namespace fconn {

namespace {

// dense polynomials in z with coefficients in Q(t); index = exponent
using ZPoly = std::vector<RatFunc>;

const std::string kT = "t";

RatFunc rf(const Rational& c) { return RatFunc::constant(c, kT); }

void zp_trim(ZPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long zp_deg(const ZPoly& p) { return (long)p.size() - 1; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, rf(Rational(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  zp_trim(r);
  return r;
}

// field division in Q(t)[z]
std::pair<ZPoly, ZPoly> zp_divrem(ZPoly a, const ZPoly& d) {
  zp_trim(a);
  ZPoly q;
  if (zp_deg(a) >= zp_deg(d)) q.assign((size_t)(zp_deg(a) - zp_deg(d) + 1), rf(Rational(0)));
  while (zp_deg(a) >= zp_deg(d)) {
    size_t k = (size_t)(zp_deg(a) - zp_deg(d));
    RatFunc c = a.back() / d.back();
    q[k] = c;
    for (size_t i = 0; i < d.size(); ++i) a[k + i] = a[k + i] - c * d[i];
    a.pop_back();
    zp_trim(a);
  }
  return {q, a};
}

ZPoly zp_mod(const ZPoly& a, const ZPoly& d) { return zp_divrem(a, d).second; }

// u with u*v == gcd(v, p) mod p; result scaled so the gcd is 1.
// Throws DegenerateDiscriminant when the gcd is nonconstant.
ZPoly invert_mod(const ZPoly& v, const ZPoly& p) {
  ZPoly r0 = p, r1 = v;
  ZPoly u0, u1 = {rf(Rational(1))};
  zp_trim(r1);
  while (!r1.empty()) {
    auto [q, r] = zp_divrem(r0, r1);
    ZPoly qu = zp_mul(q, u1);
    ZPoly nu = u0;
    nu.resize(std::max(nu.size(), qu.size()), rf(Rational(0)));
    for (size_t i = 0; i < qu.size(); ++i) nu[i] = nu[i] - qu[i];
    zp_trim(nu);
    r0 = r1;
    u0 = u1;
    r1 = r;
    u1 = nu;
  }
  if (zp_deg(r0) != 0) throw DegenerateDiscriminant();
  RatFunc lead = r0[0];
  for (auto& c : u0) c = c / lead;
  return zp_mod(u0, p);
}

// z^{-min_exp} (W - t) as a monic-degree-n polynomial in z over Q(t)
ZPoly fiber_polynomial(const LaurentPoly& w) {
  size_t n = (size_t)(w.max_exp() - w.min_exp);
  ZPoly p(n + 1, rf(Rational(0)));
  for (long e = w.min_exp; e <= w.max_exp(); ++e)
    p[(size_t)(e - w.min_exp)] = rf(w.coeff(e));
  p[(size_t)(-w.min_exp)] = p[(size_t)(-w.min_exp)] - RatFunc::variable(kT);
  return p;
}

// W' cleared to a polynomial: z^{1-min_exp} W'(z) in the genuine Laurent
// case. For polynomial W the derivative needs no clearing, and an extra z
// factor would fake a critical value at W(0).
ZPoly cleared_derivative(const LaurentPoly& w) {
  long m = w.min_exp < 0 ? 1 - w.min_exp : 0;
  ZPoly v((size_t)(w.max_exp() - 1 + m) + 1, rf(Rational(0)));
  for (long e = w.min_exp; e <= w.max_exp(); ++e)
    if (e != 0 && w.coeff(e) != 0) v[(size_t)(e - 1 + m)] = rf(Rational(e) * w.coeff(e));
  zp_trim(v);
  return v;
}

std::vector<RatFunc> to_coords(ZPoly r, size_t n) {
  r.resize(n, rf(Rational(0)));
  return r;
}

GMSingularity analyze_local(const Matrix<RatFunc>& a, const Rational& sigma,
                            bool at_infinity) {
  GMSingularity s;
  s.at_infinity = at_infinity;
  s.location = sigma;
  size_t n = a.rows();
  long minval = 0;
  RMatrix res(n, n, Rational(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (a.at(i, j).is_zero()) continue;
      TruncSeries e = ratfunc_laurent_expand(a.at(i, j), sigma, 1);
      minval = std::min(minval, e.valuation());
      res.at(i, j) = e.coeff(-1);
    }
  s.pole_order = (int)std::max(0L, -minval);
  s.residue_trace = trace(res);
  if (s.pole_order > 1) {
    s.pole_reduction_unsupported = true;
    return s;
  }
  s.residue_char = charpoly(res, "x");
  for (const auto& [root, mult] : rational_roots(s.residue_char))
    for (int k = 0; k < mult; ++k) s.exponents.push_back(mod1(root));
  std::sort(s.exponents.begin(), s.exponents.end());
  bool all_half = (s.exponents.size() == n) &&
                  std::all_of(s.exponents.begin(), s.exponents.end(), [](const Rational& e) {
                    return e == 0 || e == Rational(1, 2);
                  });
  if (all_half) {
    for (const auto& e : s.exponents) s.monodromy.push_back(e == 0 ? Rational(1) : Rational(-1));
    std::sort(s.monodromy.begin(), s.monodromy.end(), std::greater<Rational>());
  }
  return s;
}

// multiplicity of the irreducible factor f in num/den of every entry
int pole_order_at_factor(const Matrix<RatFunc>& a, const Poly& f) {
  long worst = 0;
  auto mult_in = [&](Poly p) {
    long m = 0;
    while (!p.is_zero() && f.divides(p)) {
      p = p.divrem(f).first;
      ++m;
    }
    return m;
  };
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      worst = std::min(worst, mult_in(a.at(i, j).num()) - mult_in(a.at(i, j).den()));
    }
  return (int)-worst;
}

}  // namespace

std::string LaurentPoly::str() const {
  std::string out;
  for (long e = max_exp(); e >= min_exp; --e) {
    Rational c = coeff(e);
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Rational mag = abs(c);
    if (mag != 1 || e == 0) out += to_string(mag);
    if (e != 0) {
      if (mag != 1) out += "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out.empty() ? "0" : out;
}

void validate_superpotential(const LaurentPoly& w) {
  if (w.coeffs.size() < 2) throw Error("superpotential must be nonconstant");
  if (w.min_exp > 0 || w.max_exp() < 0)
    throw Error("superpotential exponent range must contain 0");
  if (w.coeffs.back() == 0) throw Error("top coefficient of superpotential is zero");
  if (w.min_exp < 0 && w.coeffs.front() == 0)
    throw Error("bottom coefficient of superpotential is zero");
}

std::vector<long> fiber_basis(const LaurentPoly& w) {
  validate_superpotential(w);
  std::vector<long> basis;
  for (long k = 0; k < w.max_exp() - w.min_exp; ++k) basis.push_back(k);
  return basis;
}

std::vector<RatFunc> gm_reduce(const LaurentPoly& w, long exponent) {
  validate_superpotential(w);
  ZPoly p = fiber_polynomial(w);
  size_t n = (size_t)zp_deg(p);
  if (exponent >= 0) {
    ZPoly m((size_t)exponent + 1, rf(Rational(0)));
    m.back() = rf(Rational(1));
    return to_coords(zp_mod(m, p), n);
  }
  // z is invertible: p(0) = bottom coefficient (or -t), never zero in Q(t)
  ZPoly zinv(p.begin() + 1, p.end());
  for (auto& c : zinv) c = -(c / p[0]);
  ZPoly acc = {rf(Rational(1))};
  for (long k = 0; k < -exponent; ++k) acc = zp_mod(zp_mul(acc, zinv), p);
  return to_coords(acc, n);
}

std::vector<RatFunc> gm_product(const LaurentPoly& w, const std::vector<RatFunc>& x,
                                const std::vector<RatFunc>& y) {
  ZPoly p = fiber_polynomial(w);
  ZPoly a = x, b = y;
  zp_trim(a);
  zp_trim(b);
  return to_coords(zp_mod(zp_mul(a, b), p), (size_t)zp_deg(p));
}

std::vector<RatFunc> gm_wprime_inverse(const LaurentPoly& w) {
  validate_superpotential(w);
  ZPoly p = fiber_polynomial(w);
  ZPoly u = invert_mod(cleared_derivative(w), p);
  long m = w.min_exp < 0 ? 1 - w.min_exp : 0;  // matches cleared_derivative
  ZPoly zm((size_t)m + 1, rf(Rational(0)));
  zm.back() = rf(Rational(1));
  return to_coords(zp_mod(zp_mul(zm, u), p), (size_t)zp_deg(p));
}

RationalConnection gm_connection(const LaurentPoly& w) {
  validate_superpotential(w);
  ZPoly p = fiber_polynomial(w);
  size_t n = (size_t)zp_deg(p);
  ZPoly inv = gm_wprime_inverse(w);
  zp_trim(inv);
  Matrix<RatFunc> a(n, n, rf(Rational(0)));
  for (size_t k = 1; k < n; ++k) {
    ZPoly mono(k, rf(Rational(0)));
    mono.back() = rf(Rational(k));  // k z^{k-1}
    std::vector<RatFunc> col = to_coords(zp_mod(zp_mul(mono, inv), p), n);
    for (size_t i = 0; i < n; ++i) a.at(i, k) = col[i];
  }
  return {kT, a};
}

Poly critical_polynomial(const LaurentPoly& w) {
  validate_superpotential(w);
  // Sylvester resultant of the fiber polynomial and the cleared derivative;
  // both have coefficients in Q[t] (degree <= 1), so Bareiss applies directly.
  ZPoly pz = fiber_polynomial(w), vz = cleared_derivative(w);
  auto as_tpoly = [](const RatFunc& f) {
    // denominators are 1 by construction
    return f.num().with_var(kT);
  };
  long dp = zp_deg(pz), dv = zp_deg(vz);
  size_t nn = (size_t)(dp + dv);
  Matrix<Poly> syl(nn, nn, Poly(kT));
  for (long r = 0; r < dv; ++r)
    for (long i = 0; i <= dp; ++i) syl.at((size_t)r, (size_t)(r + i)) = as_tpoly(pz[(size_t)(dp - i)]);
  for (long r = 0; r < dp; ++r)
    for (long i = 0; i <= dv; ++i)
      syl.at((size_t)(dv + r), (size_t)(r + i)) = as_tpoly(vz[(size_t)(dv - i)]);
  if (nn == 0) return Poly::constant(Rational(1), kT);
  return bareiss_det(syl);
}

GMReport singularity_report(const LaurentPoly& w) {
  GMReport rep;
  rep.w = w;
  rep.connection = gm_connection(w);
  rep.rank = rep.connection.rank();

  Poly crit = critical_polynomial(w);
  if (crit.is_zero()) throw DegenerateDiscriminant();
  if (crit.degree() >= 1) {
    for (const auto& [factor, mult] : factor_over_rationals(crit)) {
      (void)mult;
      if (factor.degree() == 1) {
        Rational sigma = -factor.coeff(0) / factor.coeff(1);
        rep.finite.push_back(analyze_local(rep.connection.a, sigma, false));
      } else {
        GMSingularity s;
        s.rational_location = false;
        s.factor = factor;
        s.pole_order = pole_order_at_factor(rep.connection.a, factor);
        s.pole_reduction_unsupported = s.pole_order > 1;
        rep.finite.push_back(s);
      }
    }
  }

  RationalConnection at_inf = change_chart(rep.connection, "s");
  rep.infinity = analyze_local(at_inf.a, Rational(0), true);

  rep.regular_everywhere = rep.infinity.pole_order <= 1;
  for (const auto& s : rep.finite)
    if (s.pole_order > 1) rep.regular_everywhere = false;
  return rep;
}

}  // namespace fconn
