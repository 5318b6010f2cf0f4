#include "fconn/chains.hpp"

#include <algorithm>
#include <sstream>

namespace fconn {

std::string tag_name(ComplexTag tag) {
    switch (tag) {
    case ComplexTag::hoch_q: return "hochschild_q";
    case ComplexTag::cyc_q: return "cyclic_q";
    case ComplexTag::q_hoch_t: return "q_hochschild_t";
    case ComplexTag::hoch_t: return "hochschild_t";
    case ComplexTag::cyc_t: return "cyclic_t";
    case ComplexTag::cochain_cx: return "cochain";
    case ComplexTag::shifted_cyc_q: return "shifted_cyclic_q";
    }
    return "?";
}

namespace {

bool tag_has_u(ComplexTag t) {
    return t == ComplexTag::cyc_q || t == ComplexTag::cyc_t || t == ComplexTag::shifted_cyc_q;
}
bool tag_has_t(ComplexTag t) {
    return t == ComplexTag::q_hoch_t || t == ComplexTag::hoch_t || t == ComplexTag::cyc_t;
}
bool tag_has_curvature(ComplexTag t) {
    return t == ComplexTag::hoch_q || t == ComplexTag::cyc_q || t == ComplexTag::q_hoch_t ||
           t == ComplexTag::shifted_cyc_q;
}
bool tag_has_connes(ComplexTag t) {
    return t == ComplexTag::cyc_q || t == ComplexTag::cyc_t || t == ComplexTag::shifted_cyc_q;
}
bool tag_head_eps(ComplexTag t) {
    return t == ComplexTag::q_hoch_t || t == ComplexTag::hoch_t || t == ComplexTag::cyc_t;
}
bool tag_slot_eps(ComplexTag t) { return t == ComplexTag::hoch_t || t == ComplexTag::cyc_t; }

// q-exponent domain: [lo, hi] intersected with |q| <= kq
void q_domain(ComplexTag t, const Bounds& b, long& lo, long& hi) {
    switch (t) {
    case ComplexTag::hoch_q:
    case ComplexTag::cyc_q: lo = 0, hi = b.kq; break;
    case ComplexTag::q_hoch_t: lo = -b.kq, hi = 0; break;
    case ComplexTag::shifted_cyc_q: lo = -b.kq, hi = -1; break;
    default: lo = 0, hi = 0; break;
    }
}

} // namespace

int entry_degree(const FiniteDGA& a, const Entry& e) { return a.degree(e.idx) - (e.eps ? 1 : 0); }

std::vector<EntryPiece> entry_mul(const FiniteDGA& a, const Entry& x, const Entry& y) {
    std::vector<EntryPiece> out;
    if (x.eps && y.eps) return out;
    Rational sign(1);
    if (x.eps && a.degree(y.idx) % 2 != 0) sign = -1;
    const bool eps = x.eps || y.eps;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const Rational c = a.product_coeff(x.idx, y.idx, k);
        if (c != 0) out.push_back({{k, eps}, 0, sign * c});
    }
    return out;
}

std::vector<EntryPiece> entry_dif(const FiniteDGA& a, const Entry& x, bool at_ambient) {
    std::vector<EntryPiece> out;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const Rational c = a.differential().at(k, x.idx);
        if (c != 0) out.push_back({{k, x.eps}, 0, c});
    }
    if (at_ambient && x.eps) {
        // d(a eps) = (da) eps + (-1)^{|a|} a (t - W)
        const Rational sign = (a.degree(x.idx) % 2 == 0) ? Rational(1) : Rational(-1);
        out.push_back({{x.idx, false}, 1, sign});
        std::vector<Rational> basis(a.dim(), Rational(0));
        basis[x.idx] = 1;
        auto aw = a.mul(basis, a.w());
        for (std::size_t k = 0; k < a.dim(); ++k)
            if (aw[k] != 0) out.push_back({{k, false}, 0, -sign * aw[k]});
    }
    return out;
}

bool entry_is_reduced(const FiniteDGA& a, const Entry& e) { return e.eps || e.idx != a.unit(); }

bool chain_add_term(TruncatedChain& ch, const ChainKey& key, const Rational& c) {
    if (c == 0) return true;
    const Bounds& b = ch.bounds;
    const long aq = key.qexp < 0 ? -key.qexp : key.qexp;
    if ((long)key.word.slots.size() > b.length || aq > b.kq || key.uexp > b.ku ||
        key.texp > b.kt) {
        ch.ok = false;
        return false;
    }
    auto it = ch.terms.find(key);
    if (it == ch.terms.end()) {
        ch.terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) ch.terms.erase(it);
    }
    return true;
}

void chain_accumulate(TruncatedChain& acc, const TruncatedChain& more) {
    if (acc.alg != more.alg || acc.tag != more.tag)
        throw ComplexMismatch("cannot add chains living in different complexes");
    acc.ok = acc.ok && more.ok;
    for (const auto& [k, c] : more.terms) chain_add_term(acc, k, c);
}

TruncatedChain chain_scale(const TruncatedChain& ch, const Rational& c) {
    TruncatedChain out(*ch.alg, ch.tag, ch.bounds);
    out.ok = ch.ok;
    if (c == 0) return out;
    for (const auto& [k, v] : ch.terms) out.terms.emplace(k, v * c);
    return out;
}

TruncatedChain chain_sub(const TruncatedChain& a, const TruncatedChain& b) {
    TruncatedChain out = a;
    chain_accumulate(out, chain_scale(b, Rational(-1)));
    return out;
}

bool chain_equal(const TruncatedChain& a, const TruncatedChain& b) {
    return a.tag == b.tag && a.terms == b.terms;
}

std::string key_str(const FiniteDGA& a, const ChainKey& key) {
    std::ostringstream os;
    auto ent = [&](const Entry& e) {
        std::string s = a.names()[e.idx];
        if (e.eps) s += "*eps";
        return s;
    };
    os << ent(key.word.head) << "(";
    for (std::size_t i = 0; i < key.word.slots.size(); ++i) {
        if (i) os << "|";
        os << ent(key.word.slots[i]);
    }
    os << ")";
    if (key.qexp != 0) os << " q^" << key.qexp;
    if (key.uexp != 0) os << " u^" << key.uexp;
    if (key.texp != 0) os << " t^" << key.texp;
    return os.str();
}

std::string chain_str(const TruncatedChain& ch) {
    if (ch.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : ch.terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")*" << key_str(*ch.alg, k);
    }
    return os.str();
}

void validate_chain(const TruncatedChain& ch) {
    if (ch.alg == nullptr) throw ComplexMismatch("chain has no coefficient algebra");
    if (ch.tag == ComplexTag::cochain_cx)
        throw ComplexMismatch("cochain data does not form a chain complex element");
    long qlo, qhi;
    q_domain(ch.tag, ch.bounds, qlo, qhi);
    for (const auto& [key, c] : ch.terms) {
        (void)c;
        if (key.qexp < qlo || key.qexp > qhi)
            throw ComplexMismatch("q-exponent outside the domain of " + tag_name(ch.tag));
        if (key.uexp < 0 || (!tag_has_u(ch.tag) && key.uexp != 0))
            throw ComplexMismatch("u-exponent not allowed in " + tag_name(ch.tag));
        if (key.texp < 0 || (!tag_has_t(ch.tag) && key.texp != 0))
            throw ComplexMismatch("t-exponent not allowed in " + tag_name(ch.tag));
        if (key.word.head.eps && !tag_head_eps(ch.tag))
            throw ComplexMismatch("eps head not allowed in " + tag_name(ch.tag));
        for (const auto& s : key.word.slots) {
            if (s.eps && !tag_slot_eps(ch.tag))
                throw ComplexMismatch("eps slot not allowed in " + tag_name(ch.tag));
            if (!entry_is_reduced(*ch.alg, s))
                throw ComplexMismatch("slot entry is not reduced modulo the unit");
        }
        if ((long)key.word.slots.size() > ch.bounds.length || key.qexp < -ch.bounds.kq ||
            key.qexp > ch.bounds.kq || key.uexp > ch.bounds.ku || key.texp > ch.bounds.kt)
            throw ComplexMismatch("chain term exceeds the stated bounds");
    }
}

TruncatedChain apply_differential(const TruncatedChain& ch) {
    if (ch.tag == ComplexTag::cochain_cx)
        throw ComplexMismatch("use the cochain differential for cochain data");
    const FiniteDGA& a = *ch.alg;
    const ComplexTag tag = ch.tag;
    TruncatedChain out(a, tag, ch.bounds);
    out.ok = ch.ok;

    const bool at_entries = tag_slot_eps(tag); // hoch_t / cyc_t carry the full A[t,eps]
    auto head_dif = [&](const Entry& e) { return entry_dif(a, e, at_entries); };
    auto slot_dif = [&](const Entry& e) { return entry_dif(a, e, at_entries); };

    for (const auto& [key, coeff] : ch.terms) {
        const Word& w = key.word;
        const std::size_t l = w.slots.size();

        // parity prefixes: bar[j] = |a_0| + ||a_1|| + ... + ||a_j|| mod 2
        //                  rd[j]  = ||a_0|| + ||a_1|| + ... + ||a_j|| mod 2
        std::vector<int> bar(l + 1), rd(l + 1);
        {
            const int hd = entry_degree(a, w.head) & 1;
            bar[0] = hd;
            rd[0] = (hd + 1) & 1;
            for (std::size_t j = 1; j <= l; ++j) {
                const int srd = (entry_degree(a, w.slots[j - 1]) + 1) & 1;
                bar[j] = (bar[j - 1] + srd) & 1;
                rd[j] = (rd[j - 1] + srd) & 1;
            }
        }
        std::vector<int> suf(l + 1, 0); // suf[j] = ||a_{j+1}|| + ... + ||a_l|| mod 2
        for (std::size_t j = l; j-- > 0;)
            suf[j] = (suf[j + 1] + ((entry_degree(a, w.slots[j]) + 1) & 1)) & 1;

        auto emit = [&](const Word& nw, long dq, long du, long dt, const Rational& c) {
            chain_add_term(out, {nw, key.qexp + dq, key.uexp + du, key.texp + dt}, c);
        };

        // differential hitting the head
        for (const auto& piece : head_dif(w.head))
            emit({piece.ent, w.slots}, 0, 0, piece.tshift, coeff * piece.c);

        // differential hitting slot p (the class of a_{p+1})
        for (std::size_t p = 0; p < l; ++p) {
            const Rational sign = rd[p] ? Rational(-1) : Rational(1);
            for (const auto& piece : slot_dif(w.slots[p])) {
                if (!entry_is_reduced(a, piece.ent)) continue;
                Word nw = w;
                nw.slots[p] = piece.ent;
                emit(nw, 0, 0, piece.tshift, coeff * sign * piece.c);
            }
        }

        if (l >= 1) {
            // head times first slot
            {
                const Rational sign = bar[0] ? Rational(-1) : Rational(1);
                for (const auto& piece : entry_mul(a, w.head, w.slots[0])) {
                    Word nw{piece.ent, {w.slots.begin() + 1, w.slots.end()}};
                    emit(nw, 0, 0, piece.tshift, coeff * sign * piece.c);
                }
            }
            // adjacent slot products
            for (std::size_t p = 0; p + 1 < l; ++p) {
                const Rational sign = bar[p + 1] ? Rational(-1) : Rational(1);
                for (const auto& piece : entry_mul(a, w.slots[p], w.slots[p + 1])) {
                    if (!entry_is_reduced(a, piece.ent)) continue;
                    Word nw{w.head, {}};
                    nw.slots.reserve(l - 1);
                    for (std::size_t i = 0; i < l; ++i) {
                        if (i == p + 1) continue;
                        nw.slots.push_back(i == p ? piece.ent : w.slots[i]);
                    }
                    emit(nw, 0, 0, piece.tshift, coeff * sign * piece.c);
                }
            }
            // wrap: last slot multiplies the head from the left
            {
                const int rl = (entry_degree(a, w.slots[l - 1]) + 1) & 1;
                const Rational sign = (rl & bar[l - 1]) ? Rational(1) : Rational(-1);
                for (const auto& piece : entry_mul(a, w.slots[l - 1], w.head)) {
                    Word nw{piece.ent, {w.slots.begin(), w.slots.end() - 1}};
                    emit(nw, 0, 0, piece.tshift, coeff * sign * piece.c);
                }
            }
        }

        // curvature term: -q * sum over insertion points of W
        if (tag_has_curvature(tag)) {
            const bool dies = (tag == ComplexTag::q_hoch_t && key.qexp == 0) ||
                              (tag == ComplexTag::shifted_cyc_q && key.qexp == -1);
            if (!dies) {
                for (std::size_t j = 0; j <= l; ++j) {
                    const Rational sign = bar[j] ? Rational(1) : Rational(-1);
                    for (std::size_t k = 0; k < a.dim(); ++k) {
                        if (a.w()[k] == 0 || k == a.unit()) continue;
                        Word nw{w.head, {}};
                        nw.slots.reserve(l + 1);
                        nw.slots.insert(nw.slots.end(), w.slots.begin(), w.slots.begin() + j);
                        nw.slots.push_back({k, false});
                        nw.slots.insert(nw.slots.end(), w.slots.begin() + j, w.slots.end());
                        emit(nw, 1, 0, 0, coeff * sign * a.w()[k]);
                    }
                }
            }
        }

        // (t e - W) d/d(eps) acting on the head of the inverted-q complex
        if (tag == ComplexTag::q_hoch_t && w.head.eps) {
            const Rational sign = (a.degree(w.head.idx) % 2 == 0) ? Rational(1) : Rational(-1);
            emit({{w.head.idx, false}, w.slots}, 0, 0, 1, coeff * sign);
            std::vector<Rational> basis(a.dim(), Rational(0));
            basis[w.head.idx] = 1;
            auto aw = a.mul(basis, a.w());
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (aw[k] != 0)
                    emit({{k, false}, w.slots}, 0, 0, 0, -coeff * sign * aw[k]);
        }

        // Connes operator scaled by -u
        if (tag_has_connes(tag)) {
            const bool head_dies = !w.head.eps && w.head.idx == a.unit();
            for (std::size_t j = 0; j <= l; ++j) {
                if (head_dies) break;
                const Rational sign = (rd[j] & suf[j]) ? Rational(1) : Rational(-1);
                Word nw{{a.unit(), false}, {}};
                nw.slots.reserve(l + 1);
                nw.slots.insert(nw.slots.end(), w.slots.begin() + j, w.slots.end());
                nw.slots.push_back(w.head);
                nw.slots.insert(nw.slots.end(), w.slots.begin(), w.slots.begin() + j);
                emit(nw, 0, 1, 0, coeff * sign);
            }
        }
    }
    return out;
}

namespace {

// weakly increasing insertion patterns of k unit-eps slots into l+1 gaps
void insertion_patterns(long l, long k, std::vector<std::vector<long>>& out) {
    std::vector<long> cur((std::size_t)k, 0);
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    while (true) {
        out.push_back(cur);
        long m = k - 1;
        while (m >= 0 && cur[(std::size_t)m] == l) --m;
        if (m < 0) break;
        const long v = cur[(std::size_t)m] + 1;
        for (long i = m; i < k; ++i) cur[(std::size_t)i] = v;
    }
}

TruncatedChain shuffle_core(const TruncatedChain& ch, long shift, ComplexTag out_tag) {
    const FiniteDGA& a = *ch.alg;
    TruncatedChain out(a, out_tag, ch.bounds);
    out.ok = ch.ok;
    for (const auto& [key, coeff] : ch.terms) {
        const long k = -key.qexp - shift;
        const long l = (long)key.word.slots.size();
        const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        std::vector<std::vector<long>> pats;
        insertion_patterns(l, k, pats);
        for (const auto& pat : pats) {
            Word nw{key.word.head, {}};
            nw.slots.reserve((std::size_t)(l + k));
            std::size_t m = 0;
            for (long p = 0; p <= l; ++p) {
                if (p >= 1) nw.slots.push_back(key.word.slots[(std::size_t)(p - 1)]);
                while (m < pat.size() && pat[m] == p) {
                    nw.slots.push_back({a.unit(), true});
                    ++m;
                }
            }
            chain_add_term(out, {nw, 0, key.uexp, key.texp}, coeff * sign);
        }
    }
    return out;
}

} // namespace

TruncatedChain shuffle_sh(const TruncatedChain& ch) {
    if (ch.tag != ComplexTag::q_hoch_t)
        throw ComplexMismatch("shuffle map expects the inverted-q Hochschild complex");
    return shuffle_core(ch, 0, ComplexTag::hoch_t);
}

TruncatedChain shuffle_big_sh(const TruncatedChain& ch) {
    if (ch.tag != ComplexTag::shifted_cyc_q)
        throw ComplexMismatch("cyclic shuffle expects the shifted cyclic complex");
    return shuffle_core(ch, 1, ComplexTag::cyc_t);
}

TruncatedChain multiply_q(const TruncatedChain& ch) {
    if (!tag_has_curvature(ch.tag))
        throw ComplexMismatch("no q-action on " + tag_name(ch.tag));
    TruncatedChain out(*ch.alg, ch.tag, ch.bounds);
    out.ok = ch.ok;
    for (const auto& [key, c] : ch.terms) {
        if (ch.tag == ComplexTag::q_hoch_t && key.qexp == 0) continue;
        if (ch.tag == ComplexTag::shifted_cyc_q && key.qexp == -1) continue;
        chain_add_term(out, {key.word, key.qexp + 1, key.uexp, key.texp}, c);
    }
    return out;
}

TruncatedChain multiply_t(const TruncatedChain& ch) {
    if (!tag_has_t(ch.tag)) throw ComplexMismatch("no t-action on " + tag_name(ch.tag));
    TruncatedChain out(*ch.alg, ch.tag, ch.bounds);
    out.ok = ch.ok;
    for (const auto& [key, c] : ch.terms)
        chain_add_term(out, {key.word, key.qexp, key.uexp, key.texp + 1}, c);
    return out;
}

TruncatedChain multiply_u(const TruncatedChain& ch) {
    if (!tag_has_u(ch.tag)) throw ComplexMismatch("no u-action on " + tag_name(ch.tag));
    TruncatedChain out(*ch.alg, ch.tag, ch.bounds);
    out.ok = ch.ok;
    for (const auto& [key, c] : ch.terms)
        chain_add_term(out, {key.word, key.qexp, key.uexp + 1, key.texp}, c);
    return out;
}

Growth op_growth(ChainOp op, ComplexTag tag, const Bounds& b) {
    switch (op) {
    case ChainOp::differential:
        switch (tag) {
        case ComplexTag::hoch_q: return {1, 1, 0, 0};
        case ComplexTag::cyc_q: return {1, 1, 1, 0};
        case ComplexTag::q_hoch_t: return {1, 1, 0, 1};
        case ComplexTag::hoch_t: return {0, 0, 0, 1};
        case ComplexTag::cyc_t: return {1, 0, 1, 1};
        case ComplexTag::shifted_cyc_q: return {1, 1, 1, 0};
        default: return {0, 0, 0, 0};
        }
    case ChainOp::sh:
    case ChainOp::big_sh: return {b.kq, b.kq, 0, 0};
    case ChainOp::mult_q: return {0, 1, 0, 0};
    case ChainOp::mult_t: return {0, 0, 0, 1};
    case ChainOp::mult_u: return {0, 0, 1, 0};
    }
    return {0, 0, 0, 0};
}

Growth growth_sum(const Growth& a, const Growth& b) {
    return {a.dlen + b.dlen, a.dq + b.dq, a.du + b.du, a.dt + b.dt};
}

bool fits_with_growth(const Bounds& b, const ChainKey& key, const Growth& g) {
    const long aq = key.qexp < 0 ? -key.qexp : key.qexp;
    return (long)key.word.slots.size() + g.dlen <= b.length && aq + g.dq <= b.kq &&
           key.uexp + g.du <= b.ku && key.texp + g.dt <= b.kt;
}

std::vector<Word> enumerate_basis_words(const FiniteDGA& a, ComplexTag tag, long max_len) {
    std::vector<Entry> heads, slots;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        heads.push_back({i, false});
        if (tag_head_eps(tag)) heads.push_back({i, true});
        if (i != a.unit()) slots.push_back({i, false});
        if (tag_slot_eps(tag)) slots.push_back({i, true});
    }
    std::vector<Word> out;
    std::vector<std::vector<Entry>> layer = {{}};
    for (long len = 0; len <= max_len; ++len) {
        for (const auto& s : layer)
            for (const auto& h : heads) out.push_back({h, s});
        if (len == max_len) break;
        std::vector<std::vector<Entry>> next;
        next.reserve(layer.size() * slots.size());
        for (const auto& s : layer)
            for (const auto& e : slots) {
                auto t = s;
                t.push_back(e);
                next.push_back(std::move(t));
            }
        layer = std::move(next);
    }
    return out;
}

std::vector<ChainKey> enumerate_basis_keys(const FiniteDGA& a, ComplexTag tag, const Bounds& b) {
    long qlo, qhi;
    q_domain(tag, b, qlo, qhi);
    const long umax = tag_has_u(tag) ? b.ku : 0;
    const long tmax = tag_has_t(tag) ? b.kt : 0;
    std::vector<ChainKey> out;
    for (const auto& w : enumerate_basis_words(a, tag, b.length))
        for (long q = qlo; q <= qhi; ++q)
            for (long u = 0; u <= umax; ++u)
                for (long t = 0; t <= tmax; ++t) out.push_back({w, q, u, t});
    return out;
}

TruncatedChain chain_of_key(const FiniteDGA& a, ComplexTag tag, const Bounds& b,
                            const ChainKey& key, const Rational& c) {
    TruncatedChain ch(a, tag, b);
    chain_add_term(ch, key, c);
    validate_chain(ch);
    return ch;
}

} // namespace fconn
