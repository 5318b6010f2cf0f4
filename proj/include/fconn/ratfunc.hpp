#pragma once

#include <utility>

#include "fconn/poly.hpp"

namespace fconn {

// Rational function num/den over Q, kept reduced with a monic denominator.
class RatFunc {
 public:
  RatFunc() : num_("x"), den_(Poly::constant(Rational(1), "x")) {}
  explicit RatFunc(const std::string& var)
      : num_(var), den_(Poly::constant(Rational(1), var)) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    num_.check_var(den_);
    normalize();
  }
  explicit RatFunc(const Poly& num) : num_(num), den_(Poly::constant(Rational(1), num.var())) {}

  static RatFunc constant(const Rational& r, const std::string& var) {
    return RatFunc(Poly::constant(r, var));
  }
  static RatFunc variable(const std::string& var) { return RatFunc(Poly::variable(var)); }
  // x^k for any sign of k
  static RatFunc power(const std::string& var, long k) {
    if (k >= 0) return RatFunc(Poly::monomial(Rational(1), (size_t)k, var));
    return RatFunc(Poly::constant(Rational(1), var), Poly::monomial(Rational(1), (size_t)(-k), var));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const std::string& var() const { return num_.var(); }
  bool is_zero() const { return num_.is_zero(); }

  void check_var(const RatFunc& o) const { num_.check_var(o.num_); }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc operator+(const RatFunc& o) const {
    check_var(o);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const {
    check_var(o);
    return RatFunc(num_ * o.num_, den_ * o.den_);
  }
  RatFunc operator/(const RatFunc& o) const {
    check_var(o);
    if (o.is_zero()) throw ZeroDenominator();
    return RatFunc(num_ * o.den_, den_ * o.num_);
  }
  RatFunc operator*(const Rational& s) const { return RatFunc(num_ * s, den_); }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  // defined only away from poles
  Rational eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw ZeroDenominator();
    return num_.eval(x) / d;
  }

  bool has_pole_at(const Rational& x) const { return den_.eval(x) == 0; }

  // order of vanishing at the point c (negative at a pole); the zero
  // function has no meaningful valuation and must not be asked
  long valuation_at(const Rational& c) const {
    if (is_zero()) throw Error("valuation of zero function");
    return root_multiplicity(num_, c) - root_multiplicity(den_, c);
  }

  // f(1/x), exact; used by chart changes between 0 and infinity
  RatFunc substitute_inverse() const {
    long dn = num_.degree(), dd = den_.degree();
    if (is_zero()) return *this;
    Poly rn = num_.reverse(), rd = den_.reverse();
    // num(1/x)/den(1/x) = rev(num) x^(dd-dn) / rev(den)
    long k = dd - dn;
    RatFunc r(rn, rd);
    return r * power(var(), k);
  }

  RatFunc with_var(const std::string& v) const {
    return RatFunc(num_.with_var(v), den_.with_var(v));
  }

  std::string str() const {
    if (den_ == Poly::constant(Rational(1), var())) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  static long root_multiplicity(const Poly& p, const Rational& c) {
    if (p.is_zero()) return 0;
    if (c == 0) return (long)p.valuation_at_zero();
    Poly q = p;
    Poly root = Poly(p.var(), {-c, Rational(1)});
    long m = 0;
    while (true) {
      auto [quo, rem] = q.divrem(root);
      if (!rem.is_zero()) break;
      q = quo;
      ++m;
    }
    return m;
  }

  void normalize() {
    if (den_.is_zero()) throw ZeroDenominator();
    if (num_.is_zero()) {
      den_ = Poly::constant(Rational(1), var());
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divrem(g).first;
      den_ = den_.divrem(g).first;
    }
    Rational lc = den_.lc();
    if (lc != 1) {
      Rational inv = 1 / lc;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly num_, den_;
};

inline RatFunc operator*(const Rational& s, const RatFunc& f) { return f * s; }

}  // namespace fconn
