#pragma once

#include "fconn/matrix.hpp"
#include "fconn/rational.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace fconn {

// A finite-dimensional graded algebra over Q with a differential and a
// distinguished central degree-zero element W.  Elements are coordinate
// vectors over the chosen basis.  Multiplication is stored as one
// left-multiplication matrix per basis element; the differential as a
// single matrix whose column j is d(basis_j).
//
// Construction validates the full axiom list and throws SchemaError naming
// the first law that fails: d^2 = 0, graded Leibniz rule, associativity,
// two-sided unit, W central, dW = 0, and degree compatibility of all three
// structure tensors.
struct StructureTriple {
    std::size_t i = 0; // left factor
    std::size_t j = 0; // right factor
    std::size_t k = 0; // product component
    Rational c;        // basis_i * basis_j += c * basis_k
};

class FiniteDGA {
  public:
    FiniteDGA(std::vector<std::string> names,
              std::vector<int> degrees,
              std::size_t unit,
              const std::vector<StructureTriple>& products,
              RMatrix differential,
              std::vector<Rational> w);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    int degree(std::size_t i) const { return degrees_[i]; }
    std::size_t unit() const { return unit_; }
    const std::vector<Rational>& w() const { return w_; }
    const RMatrix& differential() const { return d_; }
    const RMatrix& left_mult(std::size_t i) const { return left_mult_[i]; }

    // product of coordinate vectors
    std::vector<Rational> mul(const std::vector<Rational>& a,
                              const std::vector<Rational>& b) const;
    // differential of a coordinate vector
    std::vector<Rational> dif(const std::vector<Rational>& a) const;
    // structure constant c with basis_i * basis_j = sum_k c_ijk basis_k
    Rational product_coeff(std::size_t i, std::size_t j, std::size_t k) const {
        return left_mult_[i].at(k, j);
    }
    bool unital_entry(std::size_t i) const { return i == unit_; }

  private:
    void validate() const;

    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::size_t unit_;
    RMatrix d_;
    std::vector<RMatrix> left_mult_; // left_mult_[i] * coords(b) = coords(basis_i * b)
    std::vector<Rational> w_;
};

// Builtin coefficient algebras used across the identity suites.
FiniteDGA dga_rationals();                     // Q, W = 0
FiniteDGA dga_dual_numbers();                  // Q[x]/x^2, deg x = 0, W = x
FiniteDGA dga_upper_triangular(const Rational& c); // upper triangular 2x2, W = c*1
FiniteDGA dga_exterior();                      // Q[th]/th^2, deg th = 1, W = 0
FiniteDGA dga_small_acyclic();                 // basis e,x,y with dx = y, W = 0
FiniteDGA dga_truncated_de_rham();             // forms on Q[x]/x^3, dx nonzero, W = 0

// --- The extended algebra A_t = A[t, eps] --------------------------------
//
// t has degree 0, eps degree -1 with eps^2 = 0, and the differential is
// d_A + (t - W) d/d(eps).  Monomials are basis_idx * t^tpow * eps^{0,1};
// elements are sparse maps from monomial keys to coefficients.  The
// constructor re-checks d^2 = 0 on every monomial with tpow <= t_bound.

struct ATKey {
    std::size_t idx = 0;
    bool eps = false;
    long tpow = 0;
    auto operator<=>(const ATKey&) const = default;
};

using ATElement = std::map<ATKey, Rational>;

class ATAlgebra {
  public:
    ATAlgebra(const FiniteDGA& base, long t_bound);

    const FiniteDGA& base() const { return *base_; }
    long t_bound() const { return t_bound_; }

    int degree(const ATKey& k) const {
        return base_->degree(k.idx) - (k.eps ? 1 : 0);
    }

    ATElement mul(const ATElement& a, const ATElement& b) const;
    ATElement dif(const ATElement& a) const;
    ATElement deps(const ATElement& a) const; // the odd derivation d/d(eps)

  private:
    const FiniteDGA* base_;
    long t_bound_;
};

ATElement at_monomial(const ATKey& k, const Rational& c = Rational(1));
void at_add_term(ATElement& a, const ATKey& k, const Rational& c);
bool at_is_zero(const ATElement& a);
std::string at_str(const ATAlgebra& at, const ATElement& a);

} // namespace fconn
