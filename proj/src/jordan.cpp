#include "fconn/jordan.hpp"

#include <algorithm>

#include "fconn/factor.hpp"

namespace fconn {

JordanData jordan_data_rational(const RMatrix& m) {
  JordanData out;
  size_t n = m.rows();
  if (n == 0) return out;
  Poly cp = charpoly(m, "x");

  for (const auto& [f, mult] : factor_over_rationals(cp)) {
    if (f.degree() != 1) {
      out.irreducible_part.emplace_back(f, mult);
      continue;
    }
    Rational ev = -f.coeff(0);  // monic x - ev
    RMatrix shifted = m - ridentity(n).scaled(ev);
    // rank(shifted^k) for k = 0..mult; sizes from consecutive differences
    std::vector<size_t> ranks{n};
    RMatrix power = ridentity(n);
    for (int k = 1; k <= mult; ++k) {
      power = power * shifted;
      ranks.push_back(rank(power));
    }
    std::vector<int> sizes;
    for (int k = 1; k <= mult; ++k) {
      size_t ge_k = ranks[(size_t)k - 1] - ranks[(size_t)k];
      size_t ge_k1 = (k < mult) ? ranks[(size_t)k] - (k + 1 <= mult ? ranks[(size_t)k + 1] : 0)
                                : 0;
      size_t exactly_k = ge_k - std::min(ge_k, ge_k1);
      for (size_t c = 0; c < exactly_k; ++c) sizes.push_back(k);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    out.blocks.emplace_back(ev, std::move(sizes));
  }

  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace fconn
