#include "fconn/weyl.hpp"

#include <functional>

namespace fconn {

void WeylElement::add_term(long j, long k, const Rational& c) {
  if (c == 0) return;
  auto key = std::make_pair(j, k);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string WeylElement::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [jk, c] : terms) {
    if (!out.empty()) out += " + ";
    out += c.get_str();
    if (jk.first > 0) out += "*" + x + (jk.first > 1 ? "^" + std::to_string(jk.first) : "");
    if (jk.second > 0)
      out += "*" + dx + (jk.second > 1 ? "^" + std::to_string(jk.second) : "");
  }
  return out;
}

WeylElement weyl_zero(const std::string& x, const std::string& dx) {
  return WeylElement{x, dx, {}};
}

WeylElement weyl_term(const std::string& x, const std::string& dx, long j, long k,
                      const Rational& c) {
  WeylElement w{x, dx, {}};
  w.add_term(j, k, c);
  return w;
}

WeylElement weyl_add(const WeylElement& a, const WeylElement& b) {
  if (a.x != b.x || a.dx != b.dx)
    throw VariableMismatch("weyl variables (" + a.x + "," + a.dx + ") vs (" + b.x + "," +
                           b.dx + ")");
  WeylElement out = a;
  for (const auto& [jk, c] : b.terms) out.add_term(jk.first, jk.second, c);
  return out;
}

WeylElement weyl_scale(const WeylElement& a, const Rational& s) {
  WeylElement out = weyl_zero(a.x, a.dx);
  if (s == 0) return out;
  for (const auto& [jk, c] : a.terms) out.add_term(jk.first, jk.second, c * s);
  return out;
}

WeylElement weyl_normalize_and_multiply(const WeylElement& a, const WeylElement& b) {
  if (a.x != b.x || a.dx != b.dx)
    throw VariableMismatch("weyl variables (" + a.x + "," + a.dx + ") vs (" + b.x + "," +
                           b.dx + ")");
  WeylElement out = weyl_zero(a.x, a.dx);
  for (const auto& [ab, c1] : a.terms)
    for (const auto& [cd, c2] : b.terms) {
      long j1 = ab.first, k1 = ab.second, j2 = cd.first, k2 = cd.second;
      // x^{j1} (dx^{k1} x^{j2}) dx^{k2}, reordering the middle pair
      long imax = std::min(k1, j2);
      for (long i = 0; i <= imax; ++i) {
        Rational coeff = c1 * c2 * Rational(binomial(k1, i)) * falling(j2, i);
        out.add_term(j1 + j2 - i, k1 + k2 - i, coeff);
      }
    }
  return out;
}

WeylElement fl_rename(const WeylElement& w, const std::string& q, const std::string& dq) {
  // t^j dt^k -> dq^j (-q)^k = (-1)^k dq^j q^k, then normal order
  WeylElement out = weyl_zero(q, dq);
  for (const auto& [jk, c] : w.terms) {
    long j = jk.first, k = jk.second;
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    long imax = std::min(j, k);
    for (long i = 0; i <= imax; ++i)
      out.add_term(k - i, j - i, c * sign * Rational(binomial(j, i)) * falling(k, i));
  }
  return out;
}

namespace {

// Sum without letting an artificial zero accumulator cap the certified order:
// the first real summand seeds the accumulator, later ones narrow it as usual.
TruncSeries weyl_sum_terms(const WeylElement& w, const TruncSeries& f,
                           const std::function<TruncSeries(long, long)>& term) {
  bool seeded = false;
  TruncSeries acc = TruncSeries::zero(f.var(), f.certified_order());
  for (const auto& [jk, c] : w.terms) {
    TruncSeries cur = term(jk.first, jk.second) * c;
    acc = seeded ? acc + cur : cur;
    seeded = true;
  }
  return acc;
}

}  // namespace

TruncSeries weyl_apply(const WeylElement& w, const TruncSeries& f) {
  return weyl_sum_terms(w, f, [&](long j, long k) {
    TruncSeries cur = f;
    for (long d = 0; d < k; ++d) cur = cur.derivative();
    return cur.shifted(j);
  });
}

TruncSeries weyl_apply_inverse_chart(const WeylElement& w, const TruncSeries& f) {
  // t = 1/s, dt = -s^2 d/ds
  return weyl_sum_terms(w, f, [&](long j, long k) {
    TruncSeries cur = f;
    for (long d = 0; d < k; ++d) cur = -(cur.derivative().shifted(2));
    return cur.shifted(-j);
  });
}

TruncSeries formal_borel(const TruncSeries& series, const std::string& s_var) {
  if (!series.is_zero() && series.valuation() < 0) throw NegativeValuation();
  long cert = series.certified_order();
  if (series.is_zero()) return TruncSeries::zero(s_var, cert + 1);
  std::vector<Rational> c;
  long val = series.valuation();
  for (long m = val; m < cert; ++m) c.push_back(series.coeff(m) * Rational(factorial(m)));
  return TruncSeries(s_var, val + 1, std::move(c));
}

}  // namespace fconn
