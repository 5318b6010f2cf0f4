#pragma once

#include <utility>
#include <vector>

#include "fconn/matrix.hpp"
#include "fconn/poly.hpp"

namespace fconn {

// Jordan-type data of a rational matrix. Rational eigenvalues get exact block
// sizes (descending); eigenvalue classes outside Q are carried symbolically as
// irreducible characteristic-polynomial factors with multiplicities.
struct JordanData {
  std::vector<std::pair<Rational, std::vector<int>>> blocks;  // ascending eigenvalue
  std::vector<std::pair<Poly, int>> irreducible_part;

  size_t dimension_accounted() const {
    size_t n = 0;
    for (const auto& [ev, sizes] : blocks)
      for (int s : sizes) n += (size_t)s;
    for (const auto& [f, m] : irreducible_part) n += (size_t)f.degree() * (size_t)m;
    return n;
  }
};

// Block sizes from ranks of powers: the number of blocks of size >= k for
// eigenvalue v is rank((m - vI)^{k-1}) - rank((m - vI)^k).
JordanData jordan_data_rational(const RMatrix& m);

}  // namespace fconn
