#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "fconn/rational.hpp"

namespace fconn {

// Dense univariate polynomial over Q. coeffs[i] is the coefficient of x^i;
// the zero polynomial is the empty vector. The variable name participates in
// equality and is checked by binary operations.
class Poly {
 public:
  Poly() : var_("x") {}
  explicit Poly(std::string var) : var_(std::move(var)) {}
  Poly(std::string var, std::vector<Rational> coeffs)
      : var_(std::move(var)), c_(std::move(coeffs)) {
    trim();
  }

  static Poly constant(const Rational& r, const std::string& var = "x") {
    Poly p(var);
    if (r != 0) p.c_ = {r};
    return p;
  }
  static Poly monomial(const Rational& r, size_t deg, const std::string& var = "x") {
    Poly p(var);
    if (r != 0) {
      p.c_.assign(deg + 1, Rational(0));
      p.c_[deg] = r;
    }
    return p;
  }
  // x itself
  static Poly variable(const std::string& var = "x") {
    return monomial(Rational(1), 1, var);
  }

  const std::string& var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention
  long degree() const { return (long)c_.size() - 1; }
  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  // multiplicity of the root 0, i.e. the x-adic valuation; 0 for nonzero
  // constant, meaningless (returns 0) for the zero polynomial
  size_t valuation_at_zero() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return i;
    return 0;
  }

  void check_var(const Poly& other) const {
    if (var_ != other.var_)
      throw VariableMismatch("poly vars '" + var_ + "' vs '" + other.var_ + "'");
  }

  Poly operator-() const {
    Poly r(var_);
    r.c_ = c_;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Poly operator+(const Poly& o) const {
    check_var(o);
    Poly r(var_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    check_var(o);
    if (is_zero() || o.is_zero()) return Poly(var_);
    Poly r(var_);
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
  }

  Poly operator*(const Rational& s) const {
    if (s == 0) return Poly(var_);
    Poly r(var_);
    r.c_ = c_;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  bool operator==(const Poly& o) const { return var_ == o.var_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // lexicographic on (degree, coefficients); used only for deterministic
  // ordering of factor lists
  bool operator<(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;)
      if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    Poly r(var_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational((long)i);
    r.trim();
    return r;
  }

  // quotient and remainder; divisor must be nonzero
  std::pair<Poly, Poly> divrem(const Poly& d) const {
    check_var(d);
    if (d.is_zero()) throw ZeroDenominator();
    Poly q(var_), r = *this;
    if (degree() < d.degree()) return {q, r};
    q.c_.assign(c_.size() - d.c_.size() + 1, Rational(0));
    Rational dlc = d.lc();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      size_t shift = (size_t)(r.degree() - d.degree());
      Rational f = r.lc() / dlc;
      q.c_[shift] = f;
      for (size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] -= f * d.c_[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }

  bool divides(const Poly& p) const { return p.divrem(*this).second.is_zero(); }

  Poly monic() const {
    if (is_zero() || is_monic()) return *this;
    Poly r(var_);
    r.c_ = c_;
    Rational inv = 1 / lc();
    for (auto& x : r.c_) x *= inv;
    return r;
  }

  // p(x + c), used for Laurent expansion at a shifted center
  Poly shift(const Rational& c) const {
    Poly acc(var_);
    Poly xc = variable(var_) + constant(c, var_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * xc + constant(c_[i], var_);
    return acc;
  }

  // x^deg * p(1/x)
  Poly reverse() const {
    Poly r(var_);
    r.c_.assign(c_.rbegin(), c_.rend());
    r.trim();
    return r;
  }

  Poly with_var(const std::string& v) const {
    Poly r(v);
    r.c_ = c_;
    return r;
  }

  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::string var_;
  std::vector<Rational> c_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

inline Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divrem(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

inline Poly pow(const Poly& p, unsigned long e) {
  Poly acc = Poly::constant(Rational(1), p.var());
  Poly b = p;
  while (e) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

inline std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
    bool neg = a < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    Rational mag = neg ? Rational(-a) : a;
    bool unit_coeff = (mag == 1) && i > 0;
    if (!unit_coeff) out += mag.get_str();
    if (i > 0) {
      out += var_;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace fconn
