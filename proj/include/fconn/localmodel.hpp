#pragma once

#include <vector>

#include "fconn/connection.hpp"
#include "fconn/jordan.hpp"

namespace fconn {

// The explicit holonomic module C[t]^r (+) C[dt]^s attached to linear maps
// U: r -> s, V: s -> r and a singular point sigma.
struct LocalModel {
  RMatrix u;  // s x r
  RMatrix v;  // r x s
  Rational sigma;

  size_t r() const { return u.cols(); }
  size_t s() const { return u.rows(); }
};

// Element (P(t) x-part, D(dt) y-part): one polynomial per coordinate.
struct ModelElement {
  std::vector<Poly> poly_part;   // length r, variable "t"
  std::vector<Poly> dpoly_part;  // length s, variable "dt"

  bool operator==(const ModelElement& o) const {
    return poly_part == o.poly_part && dpoly_part == o.dpoly_part;
  }
};

enum class ModelGenerator { T, Dt };

ModelElement model_zero(const LocalModel& m);

// The W_t-action. The t-action is the displayed one; the dt-action on the
// C[t]^r summand is its unique Leibniz-compatible extension
//   dt(t^m x, 0) = (m t^{m-1} x + sum_{k<m} sigma^{m-1-k} t^k VU x, sigma^m U x),
// which satisfies [dt, t] = id exactly (the bare displayed branch only does at
// sigma = 0).
ModelElement model_act(const LocalModel& m, ModelGenerator g, const ModelElement& e);

struct LocalModelConnections {
  RationalConnection t_side;  // dt + (t-sigma)^{-1} VU, rank r
  RationalConnection q_side;  // dq - q^{-1} UV + sigma, rank s
  RationalConnection Q_side;  // dQ - Q^{-2} sigma + Q^{-1} UV, rank s
};

LocalModelConnections local_model_connections(const LocalModel& m);

// Jordan-level comparison of VU and UV: equal data at every nonzero
// eigenvalue class, and zero-eigenvalue block sizes matching up to 1 after
// descending-sorted pairing against a reservoir of size-0 blocks.
struct FlandersReport {
  JordanData vu;
  JordanData uv;
  bool nonzero_match = false;
  int zero_defect = 0;
};

FlandersReport flanders_compare(const RMatrix& u, const RMatrix& v);

}  // namespace fconn
