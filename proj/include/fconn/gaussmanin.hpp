#pragma once

#include <string>
#include <vector>

#include "fconn/connection.hpp"
#include "fconn/matrix.hpp"
#include "fconn/poly.hpp"
#include "fconn/ratfunc.hpp"
#include "fconn/rational.hpp"

namespace fconn {

// Laurent polynomial superpotential W(z), coefficients on exponents
// min_exp .. min_exp + coeffs.size() - 1 with min_exp <= 0 <= top.
struct LaurentPoly {
  std::string var = "z";
  long min_exp = 0;
  std::vector<Rational> coeffs;

  long max_exp() const { return min_exp + (long)coeffs.size() - 1; }
  Rational coeff(long e) const {
    long i = e - min_exp;
    return (i >= 0 && i < (long)coeffs.size()) ? coeffs[(size_t)i] : Rational(0);
  }
  std::string str() const;
};

// throws Error on a malformed superpotential (constant, zero end coefficients,
// or exponent range not containing 0)
void validate_superpotential(const LaurentPoly& w);

// Basis of the fiber algebra Q(t)[z^{+-1}]/(W - t) after clearing z^{min_exp}:
// the classes of z^0 .. z^{n-1}, n = max_exp - min_exp. Returned as exponents.
std::vector<long> fiber_basis(const LaurentPoly& w);

// Matrix of nabla_{d/dt} f = f'(z)/W'(z) reduced modulo W - t in the
// fiber_basis; entries in Q(t). Throws DegenerateDiscriminant when W' is a
// zero divisor in the fiber algebra.
RationalConnection gm_connection(const LaurentPoly& w);

// Coordinates of the class of z^exponent (any sign) in fiber_basis.
std::vector<RatFunc> gm_reduce(const LaurentPoly& w, long exponent);

// Product of two fiber-algebra elements given in fiber_basis coordinates.
std::vector<RatFunc> gm_product(const LaurentPoly& w, const std::vector<RatFunc>& x,
                                const std::vector<RatFunc>& y);

// Coordinates of the class of 1/W'(z); same degeneracy error as gm_connection.
std::vector<RatFunc> gm_wprime_inverse(const LaurentPoly& w);

struct GMSingularity {
  bool at_infinity = false;
  bool rational_location = true;
  Rational location;   // meaningful when rational_location (0 for infinity)
  Poly factor;         // irreducible factor of the critical polynomial otherwise
  int pole_order = 0;
  bool pole_reduction_unsupported = false;  // pole order exceeds 1
  Poly residue_char;                        // char poly of the residue, simple poles only
  std::vector<Rational> exponents;          // rational residue eigenvalues mod 1, sorted
  std::vector<Rational> monodromy;          // +-1 per eigenvalue when all exponents are in {0, 1/2}
  Rational residue_trace;
};

struct GMReport {
  LaurentPoly w;
  size_t rank = 0;
  RationalConnection connection;
  std::vector<GMSingularity> finite;  // rational critical values first, then
                                      // irreducible factors without residue data
  GMSingularity infinity;
  bool regular_everywhere = false;
};

GMReport singularity_report(const LaurentPoly& w);

// Resultant in z of z^{-min_exp}(W - t) and the cleared derivative; its roots
// in t are the critical values of W.
Poly critical_polynomial(const LaurentPoly& w);

}  // namespace fconn
