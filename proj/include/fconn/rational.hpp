#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fconn {

// All arithmetic in this library is exact over Q. GMP's mpq_class already
// maintains the canonical form we require (reduced, positive denominator),
// so Rational is an alias plus a few helpers rather than a wrapper class.
using Rational = mpq_class;
using Integer = mpz_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
  ZeroDenominator() : Error("ZeroDenominator") {}
};
struct InsufficientPrecision : Error {
  explicit InsufficientPrecision(const std::string& what)
      : Error("InsufficientPrecision: " + what) {}
};
struct VariableMismatch : Error {
  explicit VariableMismatch(const std::string& what)
      : Error("VariableMismatch: " + what) {}
};
struct FactorizationInconclusive : Error {
  explicit FactorizationInconclusive(const std::string& what)
      : Error("FactorizationInconclusive: " + what) {}
};
struct OddDegree : Error {
  OddDegree() : Error("OddDegree: grading degrees must be even") {}
};
struct NotQuadraticPole : Error {
  explicit NotQuadraticPole(int order)
      : Error("NotQuadraticPole: pole order " + std::to_string(order)) {}
};
struct NonSplitSpectrum : Error {
  NonSplitSpectrum()
      : Error("NonSplitSpectrum: leading coefficient has an irreducible factor of degree >= 2") {}
};
struct NonSemisimpleLeading : Error {
  NonSemisimpleLeading()
      : Error("NonSemisimpleLeading: leading coefficient is not semisimple") {}
};
struct Uncertified : Error {
  Uncertified() : Error("Uncertified: report is not certified") {}
};
struct NegativeValuation : Error {
  NegativeValuation() : Error("NegativeValuation") {}
};
struct DegenerateDiscriminant : Error {
  DegenerateDiscriminant()
      : Error("DegenerateDiscriminant: W' and W-t share a factor over Q(t)") {}
};
struct PoleReductionUnsupported : Error {
  explicit PoleReductionUnsupported(int order)
      : Error("PoleReductionUnsupported: pole order " + std::to_string(order)) {}
};
struct ComplexMismatch : Error {
  explicit ComplexMismatch(const std::string& what) : Error("ComplexMismatch: " + what) {}
};
struct SingularMatrix : Error {
  SingularMatrix() : Error("SingularMatrix") {}
  explicit SingularMatrix(const std::string& what) : Error("SingularMatrix: " + what) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};
struct SchemaError : Error {
  explicit SchemaError(const std::string& what) : Error("SchemaError: " + what) {}
};

inline Rational rational_of(long num, long den = 1) {
  if (den == 0) throw ZeroDenominator();
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q"; rejects anything mpq_set_str does plus q = 0.
inline Rational parse_rational(const std::string& s) {
  mpq_class r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (r.get_den() == 0) throw ZeroDenominator();
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_int(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// Representative of r mod 1 in [0,1); monodromy exponents live here.
inline Rational mod1(const Rational& r) {
  Rational f(floor_int(r));
  Rational out = r - f;
  out.canonicalize();
  return out;
}

inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = base;
  bool inv = e < 0;
  unsigned long n = inv ? -(unsigned long)e : (unsigned long)e;
  if (inv) {
    if (b == 0) throw ZeroDenominator();
    b = 1 / b;
  }
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return Integer(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// j (j-1) ... (j-i+1)
inline Integer falling(long j, unsigned long i) {
  Integer acc(1);
  for (unsigned long m = 0; m < i; ++m) acc *= Integer(j - (long)m);
  return acc;
}

}  // namespace fconn
