#pragma once

#include <string>
#include <vector>

#include "fconn/matrix.hpp"

namespace fconn {

// The connection nabla = d/dvar + A acting on column vectors; A is a square
// matrix of rational functions in one named variable.
struct RationalConnection {
  std::string var;
  Matrix<RatFunc> a;

  size_t rank() const { return a.rows(); }
};

inline RationalConnection make_connection(const std::string& var,
                                          const Matrix<RatFunc>& a) {
  return RationalConnection{var, a};
}

// Formal gauge transformation G: invertible matrix of truncated series in the
// connection variable.
struct GaugeSeries {
  Matrix<TruncSeries> m;

  long certified() const { return series_matrix_certified(m); }
};

struct GradingVector {
  std::vector<long> degrees;  // all even
};

// Entrywise Laurent expansion of A at 0, certified to the given order.
Matrix<TruncSeries> expand_connection(const RationalConnection& conn, long order);

// A-tilde = G^{-1} A G + G^{-1} G'. The result is truncated at the requested
// order (or earlier if the inputs cannot certify that far).
Matrix<TruncSeries> apply_gauge(const RationalConnection& conn, const GaugeSeries& g,
                                long order);
Matrix<TruncSeries> apply_gauge(const Matrix<TruncSeries>& a, const GaugeSeries& g,
                                long order);

// Substitute var = 1/new_var: A-tilde(Q) = -Q^{-2} A(1/Q). Involutive.
RationalConnection change_chart(const RationalConnection& conn,
                                const std::string& new_variable);

// Conjugation by diag(q^{delta/2}) in the connection variable q:
// A-tilde = q^{Gr/2} A q^{-Gr/2} - (Gr/2) q^{-1}.
RationalConnection grading_gauge(const RationalConnection& conn, const GradingVector& gr);

// nabla* = d - A^T; with negate_variable set, additionally pulled back along
// q -> -q (combined matrix A^T(-q)).
RationalConnection dualize(const RationalConnection& conn, bool negate_variable = false);

}  // namespace fconn
