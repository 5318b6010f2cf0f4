#pragma once

#include <utility>
#include <vector>

#include "fconn/connection.hpp"

namespace fconn {

// Monic scalar differential operator sum a_i d^i with a_r = 1, coefficients in
// Q(variable).
struct ScalarOperator {
  std::string var;
  std::vector<RatFunc> coeffs;  // a_0 .. a_r

  size_t order() const { return coeffs.size() - 1; }
};

struct NewtonPolygon {
  std::vector<std::pair<long, long>> points;    // (i, val(a_i) - i), nonzero a_i only
  std::vector<std::pair<long, long>> vertices;  // lower boundary, left to right
  std::vector<std::pair<Rational, long>> slopes;  // (slope, horizontal length)
  bool fuchs_regular = false;         // slopes subset of {0}
  bool unramified_necessary = false;  // slopes subset of {0, 1}
};

// nabla applied to a column vector of rational functions: v' + A v.
std::vector<RatFunc> connection_apply(const RationalConnection& conn,
                                      const std::vector<RatFunc>& v);

// Cyclic-vector reduction. The vector is found by a deterministic ladder
// e1, e1 + x e2, e1 + x e2 + x^2 e3, ... with a seeded small-polynomial
// fallback; the operator satisfies sum_i a_i nabla^i v = 0 exactly.
std::pair<std::vector<RatFunc>, ScalarOperator> cyclic_operator(
    const RationalConnection& conn);

// Lower boundary of the convex hull of the regions {0 <= x <= i, y >= val(a_i) - i}.
NewtonPolygon newton_polygon(const ScalarOperator& op);

// Conjugation by a constant invertible matrix (gauge with G' = 0), exact.
RationalConnection conjugate_constant(const RationalConnection& conn, const RMatrix& g);

}  // namespace fconn
