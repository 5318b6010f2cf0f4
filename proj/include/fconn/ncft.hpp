#pragma once

#include "fconn/cochain.hpp"

#include <string>
#include <vector>

namespace fconn {

// Getzler-Gauss-Manin connection operators on the cyclic complexes: the
// q-side pairs u d/dq with the contraction by W, the t-side pairs u d/dt
// with the contraction by the eps-derivation.
enum class GGMWhich { nabla_q, nabla_t };

TruncatedChain ggm_connection(const TruncatedChain& ch, GGMWhich which);

// Cartan homotopy defect d I_phi x - (-1)^{|phi|} I_phi d x + I_{d phi} x - u L_phi x;
// identically zero on the uncurved complexes
TruncatedChain cartan_defect(const Cochain& phi, const TruncatedChain& ch);
TruncatedChain cartan_defect(const Cochain& phi, const Cochain& dphi, const TruncatedChain& ch);

// component of the chain sitting at one fixed q-exponent
TruncatedChain chain_project_qexp(const TruncatedChain& ch, long qexp);

struct IdentityCheck {
    std::string name;
    bool pass = true;
    long cases = 0;   // certified comparisons performed
    long skipped = 0; // inputs without certification headroom
    std::string counterexample;
};

struct NcftReport {
    std::string algebra;
    Bounds bounds;
    std::vector<IdentityCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// The four commuting-diagram identities for the cyclic shuffle:
//   SH is a chain map; SH intertwines the q-action with -nabla_t; SH
//   intertwines nabla_q with t + d I_{eps e} + I_{eps e} d; and multiplication
//   by t minus the W-contraction complements the t-constant words.
// Identities are compared only on inputs whose full evaluation stays inside
// the bounds; the parallel path shards the input list and must agree with the
// serial one exactly.
NcftReport check_ncft_diagrams(const FiniteDGA& a, const Bounds& b, bool parallel = true);

// d^2 = 0 over every basis chain of the tag with enough headroom; returns the
// first counterexample or the empty string
std::string sweep_d_squared(const FiniteDGA& a, ComplexTag tag, const Bounds& b,
                            bool parallel = false);

} // namespace fconn
