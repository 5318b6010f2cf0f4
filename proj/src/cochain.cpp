#include "fconn/cochain.hpp"

#include <algorithm>

namespace fconn {

namespace {

void value_add(CochainValue& v, const Entry& ent, long tpow, const Rational& c) {
    if (c == 0) return;
    for (auto& t : v)
        if (t.ent == ent && t.tpow == tpow) {
            t.c += c;
            return;
        }
    v.push_back({ent, tpow, c});
}

void value_prune(CochainValue& v) {
    v.erase(std::remove_if(v.begin(), v.end(), [](const CochainValueTerm& t) { return t.c == 0; }),
            v.end());
    std::sort(v.begin(), v.end(), [](const CochainValueTerm& x, const CochainValueTerm& y) {
        return std::tie(x.ent, x.tpow) < std::tie(y.ent, y.tpow);
    });
}

int rd_of(const FiniteDGA& a, const Entry& e) { return (entry_degree(a, e) + 1) & 1; }

} // namespace

Cochain cochain_w(const FiniteDGA& a, bool on_at) {
    Cochain phi;
    phi.alg = &a;
    phi.degree = 0;
    phi.on_at = on_at;
    CochainValue v;
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.w()[k] != 0) v.push_back({{k, false}, 0, a.w()[k]});
    if (!v.empty()) phi.table.emplace(std::vector<Entry>{}, v);
    return phi;
}

Cochain cochain_deps(const FiniteDGA& a) {
    Cochain phi;
    phi.alg = &a;
    phi.degree = 2;
    phi.on_at = true;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Rational sign = (a.degree(i) % 2 == 0) ? Rational(1) : Rational(-1);
        phi.table.emplace(std::vector<Entry>{{i, true}},
                          CochainValue{{{i, false}, 0, sign}});
    }
    return phi;
}

Cochain cochain_eps_unit(const FiniteDGA& a) {
    Cochain phi;
    phi.alg = &a;
    phi.degree = -1;
    phi.on_at = true;
    phi.table.emplace(std::vector<Entry>{}, CochainValue{{{a.unit(), true}, 0, Rational(1)}});
    return phi;
}

void validate_cochain(const Cochain& phi) {
    const FiniteDGA& a = *phi.alg;
    for (const auto& [args, value] : phi.table) {
        int argsum = 0;
        for (const auto& e : args) {
            if (!entry_is_reduced(a, e))
                throw SchemaError("cochain argument is not reduced modulo the unit");
            if (e.eps && !phi.on_at) throw SchemaError("eps argument in a base cochain");
            argsum += entry_degree(a, e) - 1;
        }
        for (const auto& t : value) {
            if ((t.ent.eps || t.tpow != 0) && !phi.on_at)
                throw SchemaError("base cochain value leaves the base algebra");
            if (entry_degree(a, t.ent) != phi.degree + argsum)
                throw SchemaError("cochain value degree mismatch");
        }
    }
}

CochainValue cochain_eval(const Cochain& phi, const std::vector<Entry>& args) {
    auto it = phi.table.find(args);
    if (it == phi.table.end()) return {};
    return it->second;
}

Cochain cochain_differential(const Cochain& phi, long max_arity) {
    const FiniteDGA& a = *phi.alg;
    Cochain out;
    out.alg = &a;
    out.degree = phi.degree + 1;
    out.on_at = phi.on_at;

    std::vector<Entry> slot_entries;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (i != a.unit()) slot_entries.push_back({i, false});
        if (phi.on_at) slot_entries.push_back({i, true});
    }

    const int dp = phi.degree & 1;
    std::vector<std::vector<Entry>> layer = {{}};
    for (long arity = 0; arity <= max_arity; ++arity) {
        for (const auto& args : layer) {
            const std::size_t l = args.size();
            CochainValue acc;
            // d of the value
            for (const auto& t : cochain_eval(phi, args))
                for (const auto& piece : entry_dif(a, t.ent, phi.on_at))
                    value_add(acc, piece.ent, t.tpow + piece.tshift, t.c * piece.c);
            // d hitting argument j, sign ||a_1|| + ... + ||a_j|| + |phi|
            {
                int pre = dp;
                for (std::size_t j = 0; j < l; ++j) {
                    const Rational sign = pre ? Rational(-1) : Rational(1);
                    for (const auto& piece : entry_dif(a, args[j], phi.on_at)) {
                        if (!entry_is_reduced(a, piece.ent)) continue;
                        auto nargs = args;
                        nargs[j] = piece.ent;
                        for (const auto& t : cochain_eval(phi, nargs))
                            value_add(acc, t.ent, t.tpow + piece.tshift,
                                      sign * piece.c * t.c);
                    }
                    pre = (pre + rd_of(a, args[j])) & 1;
                }
            }
            if (l >= 1) {
                // -(-1)^{|phi| ||a_1||} a_1 phi(a_2, ..., a_l)
                {
                    const Rational sign =
                        (dp & rd_of(a, args[0])) ? Rational(1) : Rational(-1);
                    std::vector<Entry> rest(args.begin() + 1, args.end());
                    for (const auto& t : cochain_eval(phi, rest))
                        for (const auto& piece : entry_mul(a, args[0], t.ent))
                            value_add(acc, piece.ent, t.tpow + piece.tshift,
                                      sign * piece.c * t.c);
                }
                // merge a_{j+1} a_{j+2}, sign ||a_1|| + ... + ||a_{j+1}|| + |phi|, negated
                {
                    int pre = (dp + rd_of(a, args[0])) & 1;
                    for (std::size_t j = 0; j + 1 < l; ++j) {
                        const Rational sign = pre ? Rational(1) : Rational(-1);
                        for (const auto& piece : entry_mul(a, args[j], args[j + 1])) {
                            if (!entry_is_reduced(a, piece.ent)) continue;
                            std::vector<Entry> nargs;
                            nargs.reserve(l - 1);
                            for (std::size_t i = 0; i < l; ++i) {
                                if (i == j + 1) continue;
                                nargs.push_back(i == j ? piece.ent : args[i]);
                            }
                            for (const auto& t : cochain_eval(phi, nargs))
                                value_add(acc, t.ent, t.tpow + piece.tshift,
                                          sign * piece.c * t.c);
                        }
                        pre = (pre + rd_of(a, args[j + 1])) & 1;
                    }
                }
                // +(-1)^{||a_1|| + ... + ||a_{l-1}|| + |phi|} phi(a_1, ..., a_{l-1}) a_l
                {
                    int pre = dp;
                    for (std::size_t j = 0; j + 1 < l; ++j) pre = (pre + rd_of(a, args[j])) & 1;
                    const Rational sign = pre ? Rational(-1) : Rational(1);
                    std::vector<Entry> front(args.begin(), args.end() - 1);
                    for (const auto& t : cochain_eval(phi, front))
                        for (const auto& piece : entry_mul(a, t.ent, args[l - 1]))
                            value_add(acc, piece.ent, t.tpow + piece.tshift,
                                      sign * piece.c * t.c);
                }
            }
            value_prune(acc);
            if (!acc.empty()) out.table.emplace(args, acc);
        }
        if (arity == max_arity) break;
        std::vector<std::vector<Entry>> next;
        next.reserve(layer.size() * slot_entries.size());
        for (const auto& args : layer)
            for (const auto& e : slot_entries) {
                auto t = args;
                t.push_back(e);
                next.push_back(std::move(t));
            }
        layer = std::move(next);
    }
    return out;
}

TruncatedChain cochain_act(const Cochain& phi, const TruncatedChain& ch, ActMode mode) {
    const FiniteDGA& a = *ch.alg;
    if (phi.alg != ch.alg) throw ComplexMismatch("cochain and chain use different algebras");
    const bool at_tag = ch.tag == ComplexTag::hoch_t || ch.tag == ComplexTag::cyc_t;
    if (at_tag != phi.on_at)
        throw ComplexMismatch("cochain ambient does not match " + tag_name(ch.tag));
    const bool has_u = ch.tag == ComplexTag::cyc_q || ch.tag == ComplexTag::cyc_t ||
                       ch.tag == ComplexTag::shifted_cyc_q;
    if (mode == ActMode::big_iota && !has_u)
        throw ComplexMismatch("u-corrected contraction needs a cyclic complex");

    TruncatedChain out(a, ch.tag, ch.bounds);
    out.ok = ch.ok;
    const int dp = phi.degree & 1;   // |phi| mod 2
    const int rp = (dp + 1) & 1;     // ||phi|| mod 2

    for (const auto& [key, coeff] : ch.terms) {
        const Word& w = key.word;
        const std::size_t l = w.slots.size();

        std::vector<int> bar(l + 1), rd(l + 1), suf(l + 1, 0);
        {
            const int hd = entry_degree(a, w.head) & 1;
            bar[0] = hd;
            rd[0] = (hd + 1) & 1;
            for (std::size_t j = 1; j <= l; ++j) {
                const int srd = rd_of(a, w.slots[j - 1]);
                bar[j] = (bar[j - 1] + srd) & 1;
                rd[j] = (rd[j - 1] + srd) & 1;
            }
            for (std::size_t j = l; j-- > 0;) suf[j] = (suf[j + 1] + rd_of(a, w.slots[j])) & 1;
        }

        auto emit = [&](const Word& nw, long du, long dt, const Rational& c) {
            chain_add_term(out, {nw, key.qexp, key.uexp + du, key.texp + dt}, c);
        };

        if (mode == ActMode::iota || mode == ActMode::big_iota) {
            // head contraction: phi^{l-j}(a_{j+1}, ..., a_l) * a_0 (a_1 | ... | a_j)
            for (std::size_t j = 0; j <= l; ++j) {
                std::vector<Entry> args(w.slots.begin() + j, w.slots.end());
                const CochainValue val = cochain_eval(phi, args);
                if (val.empty()) continue;
                const Rational sign = ((dp + (bar[j] & suf[j])) & 1) ? Rational(-1) : Rational(1);
                for (const auto& t : val)
                    for (const auto& piece : entry_mul(a, t.ent, w.head)) {
                        Word nw{piece.ent, {w.slots.begin(), w.slots.begin() + j}};
                        emit(nw, 0, t.tpow + piece.tshift, coeff * sign * t.c * piece.c);
                    }
            }
        }

        if (mode == ActMode::big_iota) {
            // -u e(a_{j+1} | ... | a_i | phi^m(a_{i+1}, ..., a_{i+m}) | ... | a_l | a_0 | ... | a_j)
            if (entry_is_reduced(a, w.head)) {
                for (std::size_t j = 0; j <= l; ++j)
                    for (std::size_t i = j; i <= l; ++i)
                        for (std::size_t m = 0; i + m <= l; ++m) {
                            std::vector<Entry> args(w.slots.begin() + i,
                                                    w.slots.begin() + i + m);
                            const CochainValue val = cochain_eval(phi, args);
                            if (val.empty()) continue;
                            const int mid = (suf[j] + suf[i]) & 1; // ||a_{j+1}||+...+||a_i||
                            const int par = ((rd[j] & suf[j]) + (rp & mid)) & 1;
                            const Rational sign = par ? Rational(1) : Rational(-1);
                            for (const auto& t : val) {
                                if (!entry_is_reduced(a, t.ent)) continue;
                                Word nw{{a.unit(), false}, {}};
                                nw.slots.reserve(l - m + 2);
                                nw.slots.insert(nw.slots.end(), w.slots.begin() + j,
                                                w.slots.begin() + i);
                                nw.slots.push_back(t.ent);
                                nw.slots.insert(nw.slots.end(), w.slots.begin() + i + m,
                                                w.slots.end());
                                nw.slots.push_back(w.head);
                                nw.slots.insert(nw.slots.end(), w.slots.begin(),
                                                w.slots.begin() + j);
                                emit(nw, 1, t.tpow, coeff * sign * t.c);
                            }
                        }
            }
        }

        if (mode == ActMode::lie) {
            // wrap terms: phi(a_{k+1}, ..., a_l, a_0, a_1, ..., a_j) (a_{j+1} | ... | a_k)
            if (entry_is_reduced(a, w.head)) {
                for (std::size_t j = 0; j <= l; ++j)
                    for (std::size_t k = j; k <= l; ++k) {
                        std::vector<Entry> args;
                        args.reserve(l - k + 1 + j);
                        args.insert(args.end(), w.slots.begin() + k, w.slots.end());
                        args.push_back(w.head);
                        args.insert(args.end(), w.slots.begin(), w.slots.begin() + j);
                        const CochainValue val = cochain_eval(phi, args);
                        if (val.empty()) continue;
                        const Rational sign =
                            (rd[k] & suf[k]) ? Rational(-1) : Rational(1);
                        for (const auto& t : val) {
                            Word nw{t.ent, {w.slots.begin() + j, w.slots.begin() + k}};
                            emit(nw, 0, t.tpow, coeff * sign * t.c);
                        }
                    }
            }
            // insertion terms: a_0 (a_1 | ... | a_j | phi^k(a_{j+1}, ..., a_{j+k}) | ... | a_l)
            for (std::size_t j = 0; j <= l; ++j)
                for (std::size_t k = 0; j + k <= l; ++k) {
                    std::vector<Entry> args(w.slots.begin() + j, w.slots.begin() + j + k);
                    const CochainValue val = cochain_eval(phi, args);
                    if (val.empty()) continue;
                    const Rational sign = (rp & rd[j]) ? Rational(-1) : Rational(1);
                    for (const auto& t : val) {
                        if (!entry_is_reduced(a, t.ent)) continue;
                        Word nw{w.head, {}};
                        nw.slots.reserve(l - k + 1);
                        nw.slots.insert(nw.slots.end(), w.slots.begin(), w.slots.begin() + j);
                        nw.slots.push_back(t.ent);
                        nw.slots.insert(nw.slots.end(), w.slots.begin() + j + k, w.slots.end());
                        emit(nw, 0, t.tpow, coeff * sign * t.c);
                    }
                }
        }
    }
    return out;
}

} // namespace fconn
