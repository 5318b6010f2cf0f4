#pragma once

#include "fconn/chains.hpp"

#include <map>
#include <vector>

namespace fconn {

// A Hochschild cochain: a finite family of multilinear components phi^l on
// normalized slot entries with values in the coefficient algebra (extended
// by eps and t when on_at is set).  Missing table rows mean zero, so sparse
// cochains like the curvature or the eps-derivation stay one-line tables.
struct CochainValueTerm {
    Entry ent;
    long tpow = 0;
    Rational c;
};
using CochainValue = std::vector<CochainValueTerm>;

struct Cochain {
    const FiniteDGA* alg = nullptr;
    int degree = 0;     // cohomological degree of phi
    bool on_at = false; // arguments and values live in A[t,eps]
    std::map<std::vector<Entry>, CochainValue> table;
};

// arity-0 cochain with value W
Cochain cochain_w(const FiniteDGA& a, bool on_at);
// the arity-1 eps-derivation of A[t,eps], degree 2
Cochain cochain_deps(const FiniteDGA& a);
// arity-0 cochain with value e*eps, degree -1
Cochain cochain_eps_unit(const FiniteDGA& a);

// checks argument normalization and degree homogeneity of every table row
void validate_cochain(const Cochain& phi);

// table lookup; empty value when no component matches
CochainValue cochain_eval(const Cochain& phi, const std::vector<Entry>& args);

// the cochain differential, tabulated on argument tuples up to max_arity
Cochain cochain_differential(const Cochain& phi, long max_arity);

enum class ActMode {
    iota,     // contraction, head absorbs the cochain value
    lie,      // Lie action: wrap terms plus slot insertions
    big_iota, // contraction corrected by the u-weighted rotation terms
};

TruncatedChain cochain_act(const Cochain& phi, const TruncatedChain& ch, ActMode mode);

} // namespace fconn
