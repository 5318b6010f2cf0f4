#include "fconn/localmodel.hpp"

#include <algorithm>

namespace fconn {

namespace {

Poly shift_up(const Poly& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> c(p.coeffs().size() + 1, Rational(0));
  for (size_t i = 0; i < p.coeffs().size(); ++i) c[i + 1] = p.coeffs()[i];
  return Poly(p.var(), c);
}

Poly shift_down(const Poly& p) {
  if (p.degree() < 1) return Poly(p.var());
  std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
  return Poly(p.var(), c);
}

// (p(t) - p(sigma)) / (t - sigma), exact
Poly difference_quotient(const Poly& p, const Rational& sigma) {
  Poly num = p - Poly::constant(p.eval(sigma), p.var());
  Poly lin = Poly::variable(p.var()) - Poly::constant(sigma, p.var());
  return num.divrem(lin).first;
}

}  // namespace

ModelElement model_zero(const LocalModel& m) {
  return ModelElement{std::vector<Poly>(m.r(), Poly("t")),
                      std::vector<Poly>(m.s(), Poly("dt"))};
}

ModelElement model_act(const LocalModel& m, ModelGenerator g, const ModelElement& e) {
  size_t r = m.r(), s = m.s();
  ModelElement out = model_zero(m);
  RMatrix vu = m.v * m.u;  // r x r
  RMatrix uv = m.u * m.v;  // s x s

  if (g == ModelGenerator::Dt) {
    // dt(t^m x, 0) = (m t^{m-1} x + sum_{k<m} sigma^{m-1-k} t^k VU x, sigma^m U x)
    // using sum_{k<m} sigma^{m-1-k} t^k = (t^m - sigma^m)/(t - sigma);
    // dt(0, dt^n y) = (0, dt^{n+1} y)
    std::vector<Rational> at_sigma(r);
    for (size_t i = 0; i < r; ++i) at_sigma[i] = e.poly_part[i].eval(m.sigma);
    for (size_t i = 0; i < r; ++i) {
      Poly acc = e.poly_part[i].derivative();
      for (size_t l = 0; l < r; ++l)
        if (vu.at(i, l) != 0)
          acc = acc + difference_quotient(e.poly_part[l], m.sigma) * vu.at(i, l);
      out.poly_part[i] = acc;
    }
    for (size_t j = 0; j < s; ++j) {
      Poly acc = shift_up(e.dpoly_part[j]);
      Rational c(0);
      for (size_t i = 0; i < r; ++i) c += m.u.at(j, i) * at_sigma[i];
      acc = acc + Poly::constant(c, "dt");
      out.dpoly_part[j] = acc;
    }
    return out;
  }

  // t(t^m x, dt^n y) = (t^{m+1} x, sigma dt^n y - n dt^{n-1} y)
  //                    + { (0, dt^{n-1} UV y)  n > 0
  //                      { (V y, 0)            n = 0
  for (size_t i = 0; i < r; ++i) {
    Poly acc = shift_up(e.poly_part[i]);
    Rational c(0);
    for (size_t j = 0; j < s; ++j) c += m.v.at(i, j) * e.dpoly_part[j].coeff(0);
    out.poly_part[i] = acc + Poly::constant(c, "t");
  }
  for (size_t j = 0; j < s; ++j) {
    Poly acc = e.dpoly_part[j] * m.sigma - e.dpoly_part[j].derivative();
    for (size_t l = 0; l < s; ++l)
      if (uv.at(j, l) != 0) acc = acc + shift_down(e.dpoly_part[l]) * uv.at(j, l);
    out.dpoly_part[j] = acc;
  }
  return out;
}

LocalModelConnections local_model_connections(const LocalModel& m) {
  size_t r = m.r(), s = m.s();
  RMatrix vu = m.v * m.u;
  RMatrix uv = m.u * m.v;

  RatFunc t_pole(Poly::constant(Rational(1), "t"),
                 Poly("t", {-m.sigma, Rational(1)}));  // 1/(t - sigma)
  Matrix<RatFunc> at(r, r, RatFunc::constant(Rational(0), "t"));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      if (vu.at(i, j) != 0) at.at(i, j) = t_pole * vu.at(i, j);
  RationalConnection t_side{"t", at};

  Matrix<RatFunc> aq(s, s, RatFunc::constant(Rational(0), "q"));
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) {
      RatFunc e = RatFunc::constant(Rational(0), "q");
      if (uv.at(i, j) != 0) e = e - RatFunc::power("q", -1) * uv.at(i, j);
      if (i == j && m.sigma != 0) e = e + RatFunc::constant(m.sigma, "q");
      aq.at(i, j) = e;
    }
  RationalConnection q_side{"q", aq};

  return {t_side, q_side, change_chart(q_side, "Q")};
}

FlandersReport flanders_compare(const RMatrix& u, const RMatrix& v) {
  FlandersReport rep;
  rep.vu = jordan_data_rational(v * u);
  rep.uv = jordan_data_rational(u * v);

  auto nonzero_blocks = [](const JordanData& jd) {
    std::vector<std::pair<Rational, std::vector<int>>> out;
    for (const auto& [ev, sizes] : jd.blocks)
      if (ev != 0) out.emplace_back(ev, sizes);
    return out;
  };
  rep.nonzero_match = nonzero_blocks(rep.vu) == nonzero_blocks(rep.uv) &&
                      rep.vu.irreducible_part == rep.uv.irreducible_part;

  auto zero_sizes = [](const JordanData& jd) {
    for (const auto& [ev, sizes] : jd.blocks)
      if (ev == 0) return sizes;
    return std::vector<int>{};
  };
  std::vector<int> za = zero_sizes(rep.vu), zb = zero_sizes(rep.uv);
  size_t n = std::max(za.size(), zb.size());
  za.resize(n, 0);  // descending already; missing blocks pair with size 0
  zb.resize(n, 0);
  for (size_t i = 0; i < n; ++i)
    rep.zero_defect = std::max(rep.zero_defect, std::abs(za[i] - zb[i]));
  return rep;
}

}  // namespace fconn
