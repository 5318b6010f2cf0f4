#include "fconn/ncft.hpp"

#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fconn {

TruncatedChain ggm_connection(const TruncatedChain& ch, GGMWhich which) {
    const FiniteDGA& a = *ch.alg;
    TruncatedChain out(a, ch.tag, ch.bounds);
    out.ok = ch.ok;
    if (which == GGMWhich::nabla_q) {
        if (ch.tag != ComplexTag::cyc_q && ch.tag != ComplexTag::shifted_cyc_q)
            throw ComplexMismatch("q-connection needs a cyclic q-complex");
        for (const auto& [key, c] : ch.terms) {
            if (key.qexp == 0) continue;
            chain_add_term(out, {key.word, key.qexp - 1, key.uexp + 1, key.texp},
                           c * Rational(key.qexp));
        }
        chain_accumulate(out, cochain_act(cochain_w(a, false), ch, ActMode::big_iota));
    } else {
        if (ch.tag != ComplexTag::cyc_t)
            throw ComplexMismatch("t-connection needs the cyclic t-complex");
        for (const auto& [key, c] : ch.terms) {
            if (key.texp == 0) continue;
            chain_add_term(out, {key.word, key.qexp, key.uexp + 1, key.texp - 1},
                           c * Rational(key.texp));
        }
        chain_accumulate(out, cochain_act(cochain_deps(a), ch, ActMode::big_iota));
    }
    return out;
}

TruncatedChain cartan_defect(const Cochain& phi, const TruncatedChain& ch) {
    return cartan_defect(phi, cochain_differential(phi, ch.bounds.length), ch);
}

TruncatedChain cartan_defect(const Cochain& phi, const Cochain& dphi, const TruncatedChain& ch) {
    // d I_phi - (-1)^{|phi|} I_phi d + I_{d phi} - u L_phi.  The sign on the
    // I_{d phi} term is forced by the other operator conventions; see the
    // contraction of phi(n,p) = n over the upper triangular algebra, where
    // iota_phi(d x) = iota_{d phi}(x) = -n() on x = e(n|p|p), so only the
    // difference of the two vanishes.
    const Rational sign = (phi.degree % 2 == 0) ? Rational(1) : Rational(-1);
    TruncatedChain defect = apply_differential(cochain_act(phi, ch, ActMode::big_iota));
    chain_accumulate(
        defect, chain_scale(cochain_act(phi, apply_differential(ch), ActMode::big_iota), -sign));
    chain_accumulate(defect, cochain_act(dphi, ch, ActMode::big_iota));
    chain_accumulate(defect,
                     chain_scale(multiply_u(cochain_act(phi, ch, ActMode::lie)), Rational(-1)));
    return defect;
}

TruncatedChain chain_project_qexp(const TruncatedChain& ch, long qexp) {
    TruncatedChain out(*ch.alg, ch.tag, ch.bounds);
    out.ok = ch.ok;
    for (const auto& [key, c] : ch.terms)
        if (key.qexp == qexp) out.terms.emplace(key, c);
    return out;
}

namespace {

enum class CaseState { pass, fail, skip };

struct CaseOutcome {
    CaseState state = CaseState::pass;
    std::string msg;
};

template <typename F> void run_indexed(std::size_t n, bool parallel, F&& f) {
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long i = 0; i < (long)n; ++i) f((std::size_t)i);
        return;
    }
#endif
    (void)parallel;
    for (std::size_t i = 0; i < n; ++i) f(i);
}

IdentityCheck run_identity(const std::string& name, std::size_t n, bool parallel,
                           const std::function<CaseOutcome(std::size_t)>& fn) {
    std::vector<CaseOutcome> results(n);
    run_indexed(n, parallel, [&](std::size_t i) { results[i] = fn(i); });
    IdentityCheck out;
    out.name = name;
    for (const auto& r : results) {
        switch (r.state) {
        case CaseState::pass: ++out.cases; break;
        case CaseState::skip: ++out.skipped; break;
        case CaseState::fail:
            ++out.cases;
            if (out.pass) {
                out.pass = false;
                out.counterexample = r.msg;
            }
            break;
        }
    }
    return out;
}

std::string diff_str(const FiniteDGA& a, const ChainKey& key, const TruncatedChain& lhs,
                     const TruncatedChain& rhs) {
    return "input " + key_str(a, key) + ": lhs = " + chain_str(lhs) +
           ", rhs = " + chain_str(rhs);
}

} // namespace

std::string sweep_d_squared(const FiniteDGA& a, ComplexTag tag, const Bounds& b, bool parallel) {
    const auto keys = enumerate_basis_keys(a, tag, b);
    std::vector<std::string> fails(keys.size());
    run_indexed(keys.size(), parallel, [&](std::size_t i) {
        const auto x = chain_of_key(a, tag, b, keys[i]);
        const auto d2 = apply_differential(apply_differential(x));
        if (d2.ok && !d2.is_zero())
            fails[i] = "d^2 " + key_str(a, keys[i]) + " = " + chain_str(d2);
    });
    for (const auto& f : fails)
        if (!f.empty()) return f;
    return {};
}

NcftReport check_ncft_diagrams(const FiniteDGA& a, const Bounds& b, bool parallel) {
    NcftReport report;
    report.algebra = a.names()[a.unit()];
    {
        std::string label;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (i) label += ",";
            label += a.names()[i];
        }
        report.algebra = label;
    }
    report.bounds = b;

    const auto keys = enumerate_basis_keys(a, ComplexTag::shifted_cyc_q, b);

    // (a) SH is a chain map on the nose
    report.checks.push_back(run_identity(
        "SH_chain_map", keys.size(), parallel, [&](std::size_t i) -> CaseOutcome {
            const auto x = chain_of_key(a, ComplexTag::shifted_cyc_q, b, keys[i]);
            const auto lhs = apply_differential(shuffle_big_sh(x));
            const auto rhs = shuffle_big_sh(apply_differential(x));
            if (!lhs.ok || !rhs.ok) return {CaseState::skip, ""};
            if (chain_equal(lhs, rhs)) return {CaseState::pass, ""};
            return {CaseState::fail, diff_str(a, keys[i], lhs, rhs)};
        }));

    // (b) SH(q x) = -nabla_t(SH x)
    report.checks.push_back(run_identity(
        "SH_q_equals_minus_nabla_t_SH", keys.size(), parallel,
        [&](std::size_t i) -> CaseOutcome {
            const auto x = chain_of_key(a, ComplexTag::shifted_cyc_q, b, keys[i]);
            const auto lhs = shuffle_big_sh(multiply_q(x));
            const auto rhs =
                chain_scale(ggm_connection(shuffle_big_sh(x), GGMWhich::nabla_t), Rational(-1));
            if (!lhs.ok || !rhs.ok) return {CaseState::skip, ""};
            if (chain_equal(lhs, rhs)) return {CaseState::pass, ""};
            return {CaseState::fail, diff_str(a, keys[i], lhs, rhs)};
        }));

    // (c) SH(nabla_q x) = (t - d I_{eps e} - I_{eps e} d)(SH x)
    const Cochain epse = cochain_eps_unit(a);
    report.checks.push_back(run_identity(
        "SH_nabla_q_equals_t_side_SH", keys.size(), parallel,
        [&](std::size_t i) -> CaseOutcome {
            const auto x = chain_of_key(a, ComplexTag::shifted_cyc_q, b, keys[i]);
            const auto lhs = shuffle_big_sh(ggm_connection(x, GGMWhich::nabla_q));
            const auto shx = shuffle_big_sh(x);
            // t plus the homotopy terms d I_{eps e} + I_{eps e} d: the signs
            // follow from SH dq = +L_{eps e} SH together with the Cartan
            // formula (u L = d I + I d + I_{d(eps e)}, and I_{t e - W} = t - I_W).
            TruncatedChain rhs = multiply_t(shx);
            chain_accumulate(rhs,
                             apply_differential(cochain_act(epse, shx, ActMode::big_iota)));
            chain_accumulate(rhs,
                             cochain_act(epse, apply_differential(shx), ActMode::big_iota));
            if (!lhs.ok || !rhs.ok) return {CaseState::skip, ""};
            if (chain_equal(lhs, rhs)) return {CaseState::pass, ""};
            return {CaseState::fail, diff_str(a, keys[i], lhs, rhs)};
        }));

    // (d) images of (t - iota_W) complement the t-constant words
    {
        std::vector<Entry> heads;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            heads.push_back({i, false});
            heads.push_back({i, true});
        }
        std::vector<Entry> slot_entries;
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (i != a.unit()) slot_entries.push_back({i, false});
        std::vector<std::vector<Entry>> slot_sets = {{}};
        {
            std::vector<std::vector<Entry>> layer = {{}};
            for (long len = 1; len <= b.length; ++len) {
                std::vector<std::vector<Entry>> next;
                for (const auto& s : layer)
                    for (const auto& e : slot_entries) {
                        auto t = s;
                        t.push_back(e);
                        next.push_back(t);
                    }
                slot_sets.insert(slot_sets.end(), next.begin(), next.end());
                layer = std::move(next);
            }
        }
        struct Block {
            std::vector<Entry> slots;
            long qexp;
        };
        std::vector<Block> blocks;
        for (const auto& s : slot_sets)
            for (long q = -b.kq; q <= 0; ++q) blocks.push_back({s, q});

        const Cochain wphi = cochain_w(a, false);
        report.checks.push_back(run_identity(
            "t_minus_iota_w_complementary", blocks.size(), parallel,
            [&](std::size_t bi) -> CaseOutcome {
                const auto& blk = blocks[bi];
                const std::size_t nh = heads.size();
                const std::size_t dim = nh * (std::size_t)(b.kt + 1);
                auto coord = [&](const ChainKey& key) -> std::size_t {
                    std::size_t h = 0;
                    while (h < nh && !(heads[h] == key.word.head)) ++h;
                    return h * (std::size_t)(b.kt + 1) + (std::size_t)key.texp;
                };
                RMatrix m = rmat(dim, dim);
                std::size_t col = 0;
                for (std::size_t h = 0; h < nh; ++h)
                    for (long t = 0; t < b.kt; ++t) {
                        const ChainKey key{{heads[h], blk.slots}, blk.qexp, 0, t};
                        auto x = chain_of_key(a, ComplexTag::q_hoch_t, b, key);
                        auto y = multiply_t(x);
                        chain_accumulate(
                            y, chain_scale(cochain_act(wphi, x, ActMode::iota), Rational(-1)));
                        for (const auto& [k, c] : y.terms) m.at(coord(k), col) = c;
                        ++col;
                    }
                for (std::size_t h = 0; h < nh; ++h) {
                    m.at(h * (std::size_t)(b.kt + 1), col) = 1;
                    ++col;
                }
                if (rank(m) == dim) return {CaseState::pass, ""};
                std::string slots_str;
                for (const auto& e : blk.slots) {
                    if (!slots_str.empty()) slots_str += "|";
                    slots_str += a.names()[e.idx];
                }
                return {CaseState::fail, "degenerate block slots (" + slots_str + ") q^" +
                                             std::to_string(blk.qexp)};
            }));
    }
    return report;
}

} // namespace fconn
