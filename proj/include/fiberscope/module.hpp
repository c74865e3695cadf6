// Buchberger for submodules of R^k under a position-over-term extension of a
// ring monomial order. Syzygy modules, colon ideals and ideal intersections
// are all read off from module bases with the first position dominant.
#ifndef FIBERSCOPE_MODULE_HPP
#define FIBERSCOPE_MODULE_HPP

#include <set>

#include "polynomial.hpp"

namespace fiberscope {

template <class F>
using ModVec = std::vector<Polynomial<F>>; // fixed component count per computation

namespace detail {

template <class F>
struct ModTerm {
    int pos = -1; // -1 encodes the zero vector
    Monomial m;
    typename F::Elem c;
};

template <class F>
bool mod_is_zero(const ModVec<F>& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

/// Leading module term under POT: smallest position with a nonzero component,
/// then the ring order inside that component.
template <class F>
ModTerm<F> mod_leading(const ModVec<F>& v, const MonomialOrder& ord) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) {
            const auto& lt = (ord.kind == MonomialOrder::Kind::grevlex)
                                 ? v[i].leading_term()
                                 : v[i].leading_term(ord);
            return {static_cast<int>(i), lt.first, lt.second};
        }
    }
    return {};
}

template <class F>
ModVec<F> mod_axpy(const ModVec<F>& u, const typename F::Elem& c, const Monomial& m,
                   const ModVec<F>& v) {
    ModVec<F> r = u;
    for (size_t i = 0; i < r.size(); ++i)
        if (!v[i].is_zero()) r[i] = r[i].axpy(c, m, v[i]);
    return r;
}

template <class F>
ModVec<F> mod_scaled(const ModVec<F>& u, const typename F::Elem& c) {
    ModVec<F> r = u;
    for (auto& p : r) p = p.scaled(c);
    return r;
}

template <class F>
ModVec<F> mod_normalized(const ModVec<F>& u, const MonomialOrder& ord) {
    auto lt = mod_leading(u, ord);
    if (lt.pos < 0) return u;
    if constexpr (std::is_same_v<F, Rationals>) {
        // primitive integer scaling across all components, positive lead
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& p : u)
            for (const auto& t : p.terms()) {
                num_gcd = boost::multiprecision::gcd(num_gcd, Int(boost::multiprecision::numerator(t.second)));
                den_lcm = boost::multiprecision::lcm(den_lcm, Int(boost::multiprecision::denominator(t.second)));
            }
        Rat scale(den_lcm, num_gcd);
        if (lt.c < 0) scale = -scale;
        return mod_scaled(u, scale);
    } else {
        return mod_scaled(u, u[0].field().inv(lt.c));
    }
}

} // namespace detail

/// Full normal form of a module element against a list of module elements
/// (used both inside Buchberger and for membership tests).
template <class F>
ModVec<F> module_normal_form(const ModVec<F>& f, const std::vector<ModVec<F>>& G,
                             const MonomialOrder& ord) {
    using namespace detail;
    if (G.empty() || mod_is_zero(f)) return f;
    const F& field = f[0].field();
    const CtxPtr& ctx = f[0].context();
    const int n = ctx->nvars();
    (void)n;

    std::vector<ModTerm<F>> lts;
    lts.reserve(G.size());
    for (const auto& g : G) lts.push_back(mod_leading(g, ord));

    ModVec<F> h = f;
    ModVec<F> rem(f.size(), Polynomial<F>::zero(field, ctx));
    while (!mod_is_zero(h)) {
        auto lt = mod_leading(h, ord);
        bool reduced = false;
        for (size_t k = 0; k < G.size(); ++k) {
            if (lts[k].pos == lt.pos && divides(lts[k].m, lt.m)) {
                auto c = field.neg(field.div(lt.c, lts[k].c));
                h = mod_axpy(h, c, quotient(lt.m, lts[k].m), G[k]);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move the leading term into the remainder
            auto term = Polynomial<F>::from_terms(field, ctx, {{lt.m, lt.c}});
            rem[static_cast<size_t>(lt.pos)] = rem[static_cast<size_t>(lt.pos)] + term;
            h[static_cast<size_t>(lt.pos)] = h[static_cast<size_t>(lt.pos)] - term;
        }
    }
    return rem;
}

/// Buchberger for a submodule of R^k; returns a minimal, normalized basis.
/// The coprime-product shortcut is not valid for modules, so only the chain
/// criterion is applied.
template <class F>
std::vector<ModVec<F>> module_groebner(std::vector<ModVec<F>> gens, const MonomialOrder& ord) {
    using namespace detail;
    std::vector<ModVec<F>> basis;
    for (auto& g : gens)
        if (!mod_is_zero(g)) basis.push_back(mod_normalized(g, ord));
    if (basis.empty()) return basis;
    const F field = basis[0][0].field();       // copies: push_back below may
    const CtxPtr ctx = basis[0][0].context();  // reallocate the basis vector

    std::vector<ModTerm<F>> lts;
    for (const auto& g : basis) lts.push_back(mod_leading(g, ord));

    struct Pair { uint32_t deg; int i, j; };
    auto cmp = [](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };
    std::vector<Pair> pending;
    std::set<std::pair<int, int>> treated;
    auto push_pairs = [&](int t) {
        for (int i = 0; i < t; ++i)
            if (lts[static_cast<size_t>(i)].pos == lts[static_cast<size_t>(t)].pos)
                pending.push_back({lcm(lts[static_cast<size_t>(i)].m, lts[static_cast<size_t>(t)].m).deg, i, t});
    };
    for (int t = 1; t < static_cast<int>(basis.size()); ++t) push_pairs(t);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), cmp);
        Pair pr = *it;
        pending.erase(it);
        treated.insert({pr.i, pr.j});

        const auto& li = lts[static_cast<size_t>(pr.i)];
        const auto& lj = lts[static_cast<size_t>(pr.j)];
        Monomial L = lcm(li.m, lj.m);

        // chain criterion
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            const auto& lk = lts[static_cast<size_t>(k)];
            if (lk.pos != li.pos || !divides(lk.m, L)) continue;
            auto key1 = std::minmax(pr.i, k), key2 = std::minmax(pr.j, k);
            if (treated.count({key1.first, key1.second}) && treated.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        ModVec<F> u(basis[static_cast<size_t>(pr.i)].size(), Polynomial<F>::zero(field, ctx));
        u = mod_axpy(u, field.inv(li.c), quotient(L, li.m), basis[static_cast<size_t>(pr.i)]);
        u = mod_axpy(u, field.neg(field.inv(lj.c)), quotient(L, lj.m), basis[static_cast<size_t>(pr.j)]);

        auto h = module_normal_form(u, basis, ord);
        if (!mod_is_zero(h)) {
            basis.push_back(mod_normalized(h, ord));
            lts.push_back(mod_leading(basis.back(), ord));
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<ModVec<F>> out;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (lts[j].pos == lts[i].pos && divides(lts[j].m, lts[i].m)) {
                if (lts[i].m == lts[j].m && j > i) continue; // keep the earlier twin
                redundant = true;
            }
        }
        if (!redundant) out.push_back(basis[i]);
    }
    return out;
}

/// Is v in the submodule generated by G (G already a module Groebner basis)?
template <class F>
bool module_member(const ModVec<F>& v, const std::vector<ModVec<F>>& G, const MonomialOrder& ord) {
    return detail::mod_is_zero(module_normal_form(v, G, ord));
}

/// Generators of the syzygy module of (f_1..f_k): module basis of
/// {(f_i, e_i)} in R^{1+k}, restricted to elements with vanishing first
/// component.
template <class F>
std::vector<std::vector<Polynomial<F>>> syzygy_module(const std::vector<Polynomial<F>>& fs) {
    if (fs.empty()) throw std::invalid_argument("syzygy_module: empty input");
    const F& field = fs[0].field();
    const CtxPtr& ctx = fs[0].context();
    const size_t k = fs.size();
    std::vector<ModVec<F>> gens;
    for (size_t i = 0; i < k; ++i) {
        ModVec<F> v(1 + k, Polynomial<F>::zero(field, ctx));
        v[0] = fs[i];
        v[1 + i] = Polynomial<F>::constant(field, ctx, field.one());
        gens.push_back(std::move(v));
    }
    auto G = module_groebner(std::move(gens), MonomialOrder::grevlex());
    std::vector<std::vector<Polynomial<F>>> syz;
    for (const auto& v : G) {
        if (v[0].is_zero()) {
            std::vector<Polynomial<F>> col(v.begin() + 1, v.end());
            syz.push_back(std::move(col));
        }
    }
    return syz;
}

} // namespace fiberscope

#endif
