#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "fconn/ratfunc.hpp"

namespace fconn {

// Truncated Laurent series: coefficients are known exactly for exponents in
// [valuation, certified_order). Precision propagates pessimistically through
// arithmetic, so a coefficient is never reported unless it is actually
// determined by the inputs. A zero series stores valuation = certified_order
// and no coefficients.
class TruncSeries {
 public:
  TruncSeries() : var_("x"), val_(0) {}
  TruncSeries(std::string var, long valuation, std::vector<Rational> coeffs)
      : var_(std::move(var)), val_(valuation), c_(std::move(coeffs)) {
    normalize();
  }

  static TruncSeries zero(const std::string& var, long certified) {
    return TruncSeries(var, certified, {});
  }
  static TruncSeries constant(const Rational& r, const std::string& var, long certified) {
    if (certified <= 0) return zero(var, certified);
    std::vector<Rational> c(certified, Rational(0));
    c[0] = r;
    TruncSeries s(var, 0, std::move(c));
    return s;
  }

  const std::string& var() const { return var_; }
  long valuation() const { return val_; }
  long certified_order() const { return val_ + (long)c_.size(); }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational coeff(long exp) const {
    if (exp < val_ || exp >= certified_order()) return Rational(0);
    return c_[(size_t)(exp - val_)];
  }

  void check_var(const TruncSeries& o) const {
    if (var_ != o.var_)
      throw VariableMismatch("series vars '" + var_ + "' vs '" + o.var_ + "'");
  }

  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  TruncSeries operator+(const TruncSeries& o) const {
    check_var(o);
    long cert = std::min(certified_order(), o.certified_order());
    if (is_zero() && o.is_zero()) return zero(var_, cert);
    long lo = std::min(is_zero() ? cert : val_, o.is_zero() ? cert : o.val_);
    if (lo >= cert) return zero(var_, cert);
    std::vector<Rational> c((size_t)(cert - lo), Rational(0));
    for (long e = lo; e < cert; ++e) c[(size_t)(e - lo)] = coeff(e) + o.coeff(e);
    return TruncSeries(var_, lo, std::move(c));
  }
  TruncSeries operator-(const TruncSeries& o) const { return *this + (-o); }

  TruncSeries operator*(const TruncSeries& o) const {
    check_var(o);
    // a zero series of valuation v is O(x^v), so the product is O(x^(v+w))
    long my_val = val_, o_val = o.val_;
    long cert = std::min(certified_order() + o_val, o.certified_order() + my_val);
    if (is_zero() || o.is_zero()) return zero(var_, cert);
    long lo = my_val + o_val;
    if (lo >= cert) return zero(var_, cert);
    std::vector<Rational> c((size_t)(cert - lo), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) {
        long e = val_ + (long)i + o.val_ + (long)j;
        if (e >= cert) break;
        c[(size_t)(e - lo)] += c_[i] * o.c_[j];
      }
    }
    return TruncSeries(var_, lo, std::move(c));
  }

  TruncSeries operator*(const Rational& s) const {
    if (s == 0) return zero(var_, certified_order());
    TruncSeries r = *this;
    for (auto& x : r.c_) x *= s;
    r.normalize();
    return r;
  }

  // multiply by x^k
  TruncSeries shifted(long k) const {
    TruncSeries r = *this;
    r.val_ += k;
    return r;
  }

  TruncSeries truncated(long order) const {
    if (order >= certified_order()) return *this;
    if (order <= val_) return zero(var_, order);
    std::vector<Rational> c(c_.begin(), c_.begin() + (size_t)(order - val_));
    return TruncSeries(var_, val_, std::move(c));
  }

  TruncSeries derivative() const {
    long cert = certified_order() - 1;
    if (is_zero() || (c_.size() == 1 && val_ == 0)) return zero(var_, cert);
    std::vector<Rational> c;
    long lo = (val_ == 0) ? 0 : val_ - 1;
    c.assign((size_t)(cert - lo), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      long e = val_ + (long)i;
      if (e == 0) continue;
      c[(size_t)(e - 1 - lo)] = c_[i] * Rational(e);
    }
    return TruncSeries(var_, lo, std::move(c));
  }

  // requires a nonzero leading coefficient; the inverse of a series with
  // valuation v certified to order c is certified to c - 2v
  TruncSeries inverse() const {
    if (is_zero() || c_[0] == 0) throw SingularMatrix();
    long n = (long)c_.size();  // number of known unit-part coefficients
    std::vector<Rational> inv((size_t)n, Rational(0));
    Rational lead = 1 / c_[0];
    inv[0] = lead;
    for (long k = 1; k < n; ++k) {
      Rational acc(0);
      for (long j = 1; j <= k; ++j) acc += c_[(size_t)j] * inv[(size_t)(k - j)];
      inv[(size_t)k] = -lead * acc;
    }
    return TruncSeries(var_, -val_, std::move(inv));
  }

  TruncSeries operator/(const TruncSeries& o) const { return *this * o.inverse(); }

  // equal as far as both are certified (the honest notion of equality for
  // truncated data); also reports the order up to which that was checked
  bool agrees_with(const TruncSeries& o) const {
    long cert = std::min(certified_order(), o.certified_order());
    long lo = std::min(is_zero() ? cert : val_, o.is_zero() ? cert : o.val_);
    for (long e = lo; e < cert; ++e)
      if (coeff(e) != o.coeff(e)) return false;
    return true;
  }

  bool operator==(const TruncSeries& o) const {
    return var_ == o.var_ && val_ == o.val_ && c_ == o.c_;
  }

  TruncSeries with_var(const std::string& v) const {
    TruncSeries r = *this;
    r.var_ = v;
    return r;
  }

  std::string str() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      long e = val_ + (long)i;
      if (!out.empty()) out += " + ";
      out += c_[i].get_str();
      if (e != 0) out += "*" + var_ + "^" + std::to_string(e);
    }
    if (out.empty()) out = "0";
    out += " + O(" + var_ + "^" + std::to_string(certified_order()) + ")";
    return out;
  }

 private:
  void normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
      val_ += (long)c_.size();
      c_.clear();
    } else if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + (long)lead);
      val_ += (long)lead;
    }
  }

  std::string var_;
  long val_;
  std::vector<Rational> c_;
};

inline TruncSeries operator*(const Rational& s, const TruncSeries& t) { return t * s; }

// Laurent expansion of f at a finite center (local coordinate x - center) or
// at infinity (local coordinate 1/x). Coefficients are certified for
// exponents < order.
TruncSeries ratfunc_laurent_expand(const RatFunc& f, const Rational& center, long order);
TruncSeries ratfunc_laurent_expand_at_infinity(const RatFunc& f, long order);

}  // namespace fconn
