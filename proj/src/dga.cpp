#include "fconn/dga.hpp"

#include <sstream>

namespace fconn {

FiniteDGA::FiniteDGA(std::vector<std::string> names,
                     std::vector<int> degrees,
                     std::size_t unit,
                     const std::vector<StructureTriple>& products,
                     RMatrix differential,
                     std::vector<Rational> w)
    : names_(std::move(names)), degrees_(std::move(degrees)), unit_(unit),
      d_(std::move(differential)), w_(std::move(w)) {
    const std::size_t n = names_.size();
    if (degrees_.size() != n || w_.size() != n)
        throw SchemaError("dga: basis, degree and W lists must have equal length");
    if (unit_ >= n) throw SchemaError("dga: unit index out of range");
    if (d_.rows() != n || d_.cols() != n)
        throw SchemaError("dga: differential matrix must be square of basis size");
    left_mult_.assign(n, rmat(n, n));
    for (const auto& t : products) {
        if (t.i >= n || t.j >= n || t.k >= n)
            throw SchemaError("dga: structure constant index out of range");
        left_mult_[t.i].at(t.k, t.j) += t.c;
    }
    validate();
}

std::vector<Rational> FiniteDGA::mul(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) const {
    const std::size_t n = dim();
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
            Rational acc(0);
            for (std::size_t j = 0; j < n; ++j)
                if (b[j] != 0) acc += left_mult_[i].at(k, j) * b[j];
            out[k] += a[i] * acc;
        }
    }
    return out;
}

std::vector<Rational> FiniteDGA::dif(const std::vector<Rational>& a) const {
    const std::size_t n = dim();
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        if (a[j] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) out[k] += d_.at(k, j) * a[j];
    }
    return out;
}

void FiniteDGA::validate() const {
    const std::size_t n = dim();
    auto basis = [&](std::size_t i) {
        std::vector<Rational> v(n, Rational(0));
        v[i] = 1;
        return v;
    };
    auto is_zero = [&](const std::vector<Rational>& v) {
        for (const auto& c : v)
            if (c != 0) return false;
        return true;
    };

    // degree compatibility of the three structure tensors
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (product_coeff(i, j, k) != 0 && degrees_[k] != degrees_[i] + degrees_[j])
                    throw SchemaError("dga: product is not degree additive at " + names_[i] +
                                      "*" + names_[j]);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (d_.at(k, j) != 0 && degrees_[k] != degrees_[j] + 1)
                throw SchemaError("dga: differential does not raise degree by one at d(" +
                                  names_[j] + ")");
    for (std::size_t k = 0; k < n; ++k)
        if (w_[k] != 0 && degrees_[k] != 0)
            throw SchemaError("dga: W has a component outside degree zero");

    // d^2 = 0
    if (!(d_ * d_ == rmat(n, n))) throw SchemaError("dga: differential does not square to zero");

    // two-sided unit
    for (std::size_t j = 0; j < n; ++j) {
        if (!(mul(basis(unit_), basis(j)) == basis(j)))
            throw SchemaError("dga: unit fails from the left at " + names_[j]);
        if (!(mul(basis(j), basis(unit_)) == basis(j)))
            throw SchemaError("dga: unit fails from the right at " + names_[j]);
    }
    if (!is_zero(dif(basis(unit_)))) throw SchemaError("dga: unit is not closed");

    // associativity
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = mul(mul(basis(i), basis(j)), basis(k));
                auto rhs = mul(basis(i), mul(basis(j), basis(k)));
                if (!(lhs == rhs))
                    throw SchemaError("dga: associativity fails at " + names_[i] + "*" +
                                      names_[j] + "*" + names_[k]);
            }

    // graded Leibniz rule
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto lhs = dif(mul(basis(i), basis(j)));
            auto rhs = mul(dif(basis(i)), basis(j));
            auto second = mul(basis(i), dif(basis(j)));
            const Rational sign = (degrees_[i] % 2 == 0) ? Rational(1) : Rational(-1);
            for (std::size_t k = 0; k < n; ++k) rhs[k] += sign * second[k];
            if (!(lhs == rhs))
                throw SchemaError("dga: Leibniz rule fails at d(" + names_[i] + "*" + names_[j] +
                                  ")");
        }

    // W central and closed
    for (std::size_t j = 0; j < n; ++j)
        if (!(mul(w_, basis(j)) == mul(basis(j), w_)))
            throw SchemaError("dga: W is not central against " + names_[j]);
    if (!is_zero(dif(w_))) throw SchemaError("dga: W is not closed");
}

FiniteDGA dga_rationals() {
    return FiniteDGA({"e"}, {0}, 0, {{0, 0, 0, Rational(1)}}, rmat(1, 1), {Rational(0)});
}

FiniteDGA dga_dual_numbers() {
    std::vector<StructureTriple> prod = {
        {0, 0, 0, Rational(1)},
        {0, 1, 1, Rational(1)},
        {1, 0, 1, Rational(1)},
    };
    return FiniteDGA({"e", "x"}, {0, 0}, 0, prod, rmat(2, 2), {Rational(0), Rational(1)});
}

FiniteDGA dga_upper_triangular(const Rational& c) {
    // basis: e = identity, n = E12, p = E22 inside upper triangular 2x2 matrices
    std::vector<StructureTriple> prod = {
        {0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {0, 2, 2, Rational(1)},
        {1, 0, 1, Rational(1)}, {2, 0, 2, Rational(1)},
        {1, 2, 1, Rational(1)}, // E12 * E22 = E12
        {2, 2, 2, Rational(1)}, // E22 * E22 = E22
    };
    return FiniteDGA({"e", "n", "p"}, {0, 0, 0}, 0, prod, rmat(3, 3),
                     {c, Rational(0), Rational(0)});
}

FiniteDGA dga_exterior() {
    std::vector<StructureTriple> prod = {
        {0, 0, 0, Rational(1)},
        {0, 1, 1, Rational(1)},
        {1, 0, 1, Rational(1)},
    };
    return FiniteDGA({"e", "th"}, {0, 1}, 0, prod, rmat(2, 2), {Rational(0), Rational(0)});
}

FiniteDGA dga_small_acyclic() {
    std::vector<StructureTriple> prod = {
        {0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {0, 2, 2, Rational(1)},
        {1, 0, 1, Rational(1)}, {2, 0, 2, Rational(1)},
    };
    RMatrix d = rmat(3, 3);
    d.at(2, 1) = Rational(1); // d(x) = y
    return FiniteDGA({"e", "x", "y"}, {0, 0, 1}, 0, prod, d,
                     {Rational(0), Rational(0), Rational(0)});
}

FiniteDGA dga_truncated_de_rham() {
    // Kaehler forms on Q[x]/x^3: basis e, x, x2 in degree 0 and dx, xdx in
    // degree 1 (d(x^3) = 0 forces x2*dx = 0).  Both the differential and the
    // products between non-unit elements are nonzero, unlike the other
    // builtin test algebras.
    const std::size_t e = 0, x = 1, x2 = 2, dx = 3, xdx = 4;
    std::vector<StructureTriple> prod;
    for (std::size_t i = 0; i < 5; ++i) {
        prod.push_back({e, i, i, Rational(1)});
        if (i != e) prod.push_back({i, e, i, Rational(1)});
    }
    prod.push_back({x, x, x2, Rational(1)});
    prod.push_back({x, dx, xdx, Rational(1)});
    prod.push_back({dx, x, xdx, Rational(1)});
    RMatrix d = rmat(5, 5);
    d.at(dx, x) = Rational(1);
    d.at(xdx, x2) = Rational(2);
    return FiniteDGA({"e", "x", "x2", "dx", "xdx"}, {0, 0, 0, 1, 1}, 0, prod, d,
                     std::vector<Rational>(5, Rational(0)));
}

// --- ATAlgebra -------------------------------------------------------------

ATElement at_monomial(const ATKey& k, const Rational& c) {
    ATElement a;
    if (c != 0) a[k] = c;
    return a;
}

void at_add_term(ATElement& a, const ATKey& k, const Rational& c) {
    if (c == 0) return;
    auto it = a.find(k);
    if (it == a.end()) {
        a[k] = c;
    } else {
        it->second += c;
        if (it->second == 0) a.erase(it);
    }
}

bool at_is_zero(const ATElement& a) { return a.empty(); }

std::string at_str(const ATAlgebra& at, const ATElement& a) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : a) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")*" << at.base().names()[k.idx];
        if (k.tpow != 0) os << "*t^" << k.tpow;
        if (k.eps) os << "*eps";
    }
    return os.str();
}

ATAlgebra::ATAlgebra(const FiniteDGA& base, long t_bound) : base_(&base), t_bound_(t_bound) {
    // re-check d^2 = 0 and the anticommutation of d with d/d(eps) on monomials
    for (std::size_t i = 0; i < base_->dim(); ++i)
        for (int e = 0; e < 2; ++e)
            for (long t = 0; t <= t_bound_; ++t) {
                ATElement m = at_monomial({i, e == 1, t});
                if (!at_is_zero(dif(dif(m))))
                    throw SchemaError("at-algebra: d^2 fails on " + at_str(*this, m));
                ATElement anti = dif(deps(m));
                for (const auto& [k, c] : deps(dif(m))) at_add_term(anti, k, c);
                if (!at_is_zero(anti))
                    throw SchemaError("at-algebra: d and d/d(eps) fail to anticommute on " +
                                      at_str(*this, m));
            }
}

ATElement ATAlgebra::mul(const ATElement& a, const ATElement& b) const {
    const std::size_t n = base_->dim();
    ATElement out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            if (ka.eps && kb.eps) continue;
            // (a*eps)*b = (-1)^{|b|} (a*b)*eps
            Rational sign(1);
            if (ka.eps && base_->degree(kb.idx) % 2 != 0) sign = -1;
            const bool eps = ka.eps || kb.eps;
            const long tp = ka.tpow + kb.tpow;
            for (std::size_t k = 0; k < n; ++k) {
                const Rational c = base_->product_coeff(ka.idx, kb.idx, k);
                if (c != 0) at_add_term(out, {k, eps, tp}, sign * c * ca * cb);
            }
        }
    return out;
}

ATElement ATAlgebra::dif(const ATElement& a) const {
    const std::size_t n = base_->dim();
    ATElement out;
    for (const auto& [k, c] : a) {
        for (std::size_t m = 0; m < n; ++m) {
            const Rational dc = base_->differential().at(m, k.idx);
            if (dc != 0) at_add_term(out, {m, k.eps, k.tpow}, dc * c);
        }
        if (k.eps) {
            // d(a*eps) = (da)*eps + (-1)^{|a|} a*(t - W)
            const Rational sign = (base_->degree(k.idx) % 2 == 0) ? Rational(1) : Rational(-1);
            at_add_term(out, {k.idx, false, k.tpow + 1}, sign * c);
            std::vector<Rational> basis(n, Rational(0));
            basis[k.idx] = 1;
            auto aw = base_->mul(basis, base_->w());
            for (std::size_t m = 0; m < n; ++m)
                if (aw[m] != 0) at_add_term(out, {m, false, k.tpow}, -sign * c * aw[m]);
        }
    }
    return out;
}

ATElement ATAlgebra::deps(const ATElement& a) const {
    ATElement out;
    for (const auto& [k, c] : a)
        if (k.eps) {
            const Rational sign = (base_->degree(k.idx) % 2 == 0) ? Rational(1) : Rational(-1);
            at_add_term(out, {k.idx, false, k.tpow}, sign * c);
        }
    return out;
}

} // namespace fconn
