#pragma once

#include "fconn/dga.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace fconn {

// Truncated chain complexes attached to a finite dga A with curvature
// element W.  Words are a head entry (arbitrary algebra element) followed
// by slot entries (classes modulo the unit); eps-decorated entries realize
// the extension A[eps] and a global t-exponent carries the polynomial
// variable, so every complex is a finite Q-linear span once the bounds on
// word length and the q, u, t exponents are fixed.
enum class ComplexTag {
    hoch_q,        // Hochschild chains of the curved algebra, q-exponent >= 0
    cyc_q,         // negative cyclic chains of the curved algebra
    q_hoch_t,      // Hochschild chains of A[t,eps] with inverted q, exponent <= 0
    hoch_t,        // Hochschild chains of A[t,eps]
    cyc_t,         // negative cyclic chains of A[t,eps]
    cochain_cx,    // Hochschild cochains (carried by the Cochain type)
    shifted_cyc_q, // cyclic chains tensored to strictly negative q-exponents
};

std::string tag_name(ComplexTag tag);

struct Entry {
    std::size_t idx = 0;
    bool eps = false;
    auto operator<=>(const Entry&) const = default;
};

struct Word {
    Entry head;
    std::vector<Entry> slots;
    auto operator<=>(const Word&) const = default;
};

struct ChainKey {
    Word word;
    long qexp = 0;
    long uexp = 0;
    long texp = 0;
    auto operator<=>(const ChainKey&) const = default;
};

struct Bounds {
    long length = 4;
    long kq = 3;
    long ku = 3;
    long kt = 3;
};

// A chain with exact rational coefficients.  `ok` stays true as long as no
// produced term fell outside the bounds; operations propagate the flag, so
// a result with ok == true is certified exact within the truncation.
struct TruncatedChain {
    const FiniteDGA* alg = nullptr;
    ComplexTag tag = ComplexTag::hoch_q;
    Bounds bounds;
    std::map<ChainKey, Rational> terms;
    bool ok = true;

    TruncatedChain() = default;
    TruncatedChain(const FiniteDGA& a, ComplexTag t, Bounds b) : alg(&a), tag(t), bounds(b) {}

    bool is_zero() const { return terms.empty(); }
};

int entry_degree(const FiniteDGA& a, const Entry& e);

// linear-combination pieces produced by entry products and differentials;
// tshift counts powers of t pulled out to the ambient exponent
struct EntryPiece {
    Entry ent;
    long tshift = 0;
    Rational c;
};

std::vector<EntryPiece> entry_mul(const FiniteDGA& a, const Entry& x, const Entry& y);
// at_ambient selects the full differential of A[t,eps]; otherwise d(eps) = 0
std::vector<EntryPiece> entry_dif(const FiniteDGA& a, const Entry& x, bool at_ambient);
// true when the entry survives reduction modulo the unit
bool entry_is_reduced(const FiniteDGA& a, const Entry& e);

// term insertion with bound clipping; returns false when the term was dropped
bool chain_add_term(TruncatedChain& ch, const ChainKey& key, const Rational& c);
void chain_accumulate(TruncatedChain& acc, const TruncatedChain& more);
TruncatedChain chain_scale(const TruncatedChain& ch, const Rational& c);
TruncatedChain chain_sub(const TruncatedChain& a, const TruncatedChain& b);
bool chain_equal(const TruncatedChain& a, const TruncatedChain& b);
std::string chain_str(const TruncatedChain& ch);
std::string key_str(const FiniteDGA& a, const ChainKey& key);

// checks entry normalization, eps placement and exponent domains for the tag
void validate_chain(const TruncatedChain& ch);

// the differential of the complex named by the tag
TruncatedChain apply_differential(const TruncatedChain& ch);

// shuffle map: inserts all weakly increasing patterns of e*eps slots for the
// inverted q-exponent; lands in the Hochschild complex of A[t,eps]
TruncatedChain shuffle_sh(const TruncatedChain& ch);
// cyclic version with the exponent shift q^{-k-1} -> k insertions
TruncatedChain shuffle_big_sh(const TruncatedChain& ch);

// module actions; boundary exponents die according to the tag
TruncatedChain multiply_q(const TruncatedChain& ch);
TruncatedChain multiply_t(const TruncatedChain& ch);
TruncatedChain multiply_u(const TruncatedChain& ch);

enum class ChainOp { differential, sh, big_sh, mult_q, mult_t, mult_u };

struct Growth {
    long dlen = 0;
    long dq = 0;
    long du = 0;
    long dt = 0;
};

Growth op_growth(ChainOp op, ComplexTag tag, const Bounds& b);
Growth growth_sum(const Growth& a, const Growth& b);
// true when the key plus worst-case growth still fits inside the bounds
bool fits_with_growth(const Bounds& b, const ChainKey& key, const Growth& g);

// all normalized words for the tag with at most max_len slots
std::vector<Word> enumerate_basis_words(const FiniteDGA& a, ComplexTag tag, long max_len);
// all chain keys for the tag within the given bounds
std::vector<ChainKey> enumerate_basis_keys(const FiniteDGA& a, ComplexTag tag, const Bounds& b);

TruncatedChain chain_of_key(const FiniteDGA& a, ComplexTag tag, const Bounds& b,
                            const ChainKey& key, const Rational& c = Rational(1));

} // namespace fconn
