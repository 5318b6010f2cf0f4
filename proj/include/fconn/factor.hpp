#pragma once

#include <utility>
#include <vector>

#include "fconn/poly.hpp"

namespace fconn {

// Monic irreducible factors over Q with multiplicities, linear factors first,
// then by increasing degree; deterministic order throughout. The product of
// factor^multiplicity times the leading coefficient of p reproduces p.
//
// Irreducibility is certified by rational-root elimination (degrees 2 and 3),
// and for degree >= 4 by a bounded Kronecker search over interpolated divisor
// combinations. Throws FactorizationInconclusive when the search bound or the
// integer factorization bound is exceeded, never returns an uncertified
// factor.
std::vector<std::pair<Poly, int>> factor_over_rationals(const Poly& p);

// Yun's squarefree decomposition of a monic polynomial: returns g_1, g_2, ...
// with p = prod g_i^i, each g_i squarefree and monic (possibly 1).
std::vector<Poly> yun_squarefree(const Poly& p);

// Rational roots with multiplicity, ascending.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

}  // namespace fconn
