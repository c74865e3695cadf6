// Buchberger with the normal pair selection strategy and both criteria,
// reduced bases cached per monomial order, and the ideal-theoretic
// operations built on them: quotient, saturation, powers, elimination and
// combinatorial dimension.
#ifndef FIBERSCOPE_GROEBNER_HPP
#define FIBERSCOPE_GROEBNER_HPP

#include <map>
#include <mutex>
#include <set>

#include "module.hpp"

namespace fiberscope {

template <class F>
using PolyVec = std::vector<Polynomial<F>>;

/// The unique remainder of f modulo G. G must be a Groebner basis under ord
/// for the remainder to be canonical; the division itself is total.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const PolyVec<F>& G, const MonomialOrder& ord) {
    if (f.is_zero() || G.empty()) return f;
    const F& field = f.field();
    const CtxPtr& ctx = f.context();
    const bool canonical = (ord.kind == MonomialOrder::Kind::grevlex);

    std::vector<typename Polynomial<F>::Term> glt;
    glt.reserve(G.size());
    for (const auto& g : G)
        glt.push_back(canonical ? g.leading_term() : g.leading_term(ord));

    Polynomial<F> h = f;
    std::vector<typename Polynomial<F>::Term> rem;
    while (!h.is_zero()) {
        const auto lt = canonical ? h.leading_term() : h.leading_term(ord);
        bool reduced = false;
        for (size_t k = 0; k < G.size(); ++k) {
            if (G[k].is_zero()) continue;
            if (divides(glt[k].first, lt.first)) {
                auto c = field.neg(field.div(lt.second, glt[k].second));
                h = h.axpy(c, quotient(lt.first, glt[k].first), G[k]);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(lt);
            h = h - Polynomial<F>::from_terms(field, ctx, {lt});
        }
    }
    return Polynomial<F>::from_terms(field, ctx, std::move(rem));
}

/// Reduced Groebner basis: monic elements, no leading term divides another,
/// every tail fully reduced; sorted with descending leading terms.
template <class F>
PolyVec<F> buchberger(const PolyVec<F>& input, const MonomialOrder& ord) {
    const bool canonical = (ord.kind == MonomialOrder::Kind::grevlex);
    PolyVec<F> basis;
    for (const auto& g : input)
        if (!g.is_zero()) basis.push_back(scalar_normalized(g));
    if (basis.empty()) return basis;
    const F field = basis[0].field();       // copies: push_back below may
    const CtxPtr ctx = basis[0].context();  // reallocate the basis vector
    const int n = ctx->nvars();

    auto lead = [&](const Polynomial<F>& p) {
        return canonical ? p.leading_term() : p.leading_term(ord);
    };

    std::vector<Monomial> lm;
    for (const auto& g : basis) lm.push_back(lead(g).first);

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
            pending.push_back({lcm(lm[static_cast<size_t>(i)], lm[static_cast<size_t>(t)]).deg, i, t});
    };
    for (int t = 1; t < static_cast<int>(basis.size()); ++t) push_pairs(t);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), cmp);
        Pair pr = *it;
        pending.erase(it);
        treated.insert({pr.i, pr.j});

        const Monomial& mi = lm[static_cast<size_t>(pr.i)];
        const Monomial& mj = lm[static_cast<size_t>(pr.j)];
        if (coprime(mi, mj)) continue; // product criterion

        Monomial L = lcm(mi, mj);
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pr.i || k == pr.j || !divides(lm[static_cast<size_t>(k)], L)) continue;
            auto key1 = std::minmax(pr.i, k), key2 = std::minmax(pr.j, k);
            if (treated.count({key1.first, key1.second}) && treated.count({key2.first, key2.second}))
                skip = true; // chain criterion
        }
        if (skip) continue;

        const auto lti = lead(basis[static_cast<size_t>(pr.i)]);
        const auto ltj = lead(basis[static_cast<size_t>(pr.j)]);
        Polynomial<F> s = Polynomial<F>::zero(field, ctx)
                              .axpy(field.inv(lti.second), quotient(L, mi), basis[static_cast<size_t>(pr.i)])
                              .axpy(field.neg(field.inv(ltj.second)), quotient(L, mj), basis[static_cast<size_t>(pr.j)]);
        auto h = normal_form(s, basis, ord);
        if (!h.is_zero()) {
            basis.push_back(scalar_normalized(h));
            lm.push_back(lead(basis.back()).first);
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    // minimalize
    PolyVec<F> minimal;
    std::vector<Monomial> minlm;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(lm[j], lm[i])) {
                if (lm[i] == lm[j] && j > i) continue;
                redundant = true;
            }
        }
        if (!redundant) {
            minimal.push_back(basis[i]);
            minlm.push_back(lm[i]);
        }
    }

    // tail-reduce each element against the others and make monic
    PolyVec<F> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        PolyVec<F> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto r = normal_form(minimal[i], others, ord);
        const auto lt = lead(r);
        out.push_back(r.scaled(field.inv(lt.second)));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
        return ord.cmp(lead(a).first, lead(b).first, n) > 0;
    });
    return out;
}

/// Homogeneous ideal with per-order cached reduced Groebner bases.
/// Generators are immutable; the cache is filled at most once per order
/// under an exclusive lock.
template <class F>
class Ideal {
public:
    Ideal(F field, CtxPtr ctx, PolyVec<F> gens) : d_(std::make_shared<Data>()) {
        d_->field = std::move(field);
        d_->ctx = std::move(ctx);
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (!same_context(g.context(), d_->ctx))
                throw std::invalid_argument("Ideal: generator context mismatch");
            if (!g.is_homogeneous())
                throw std::invalid_argument("Ideal: generators must be homogeneous");
            d_->gens.push_back(std::move(g));
        }
    }

    static Ideal zero(F field, CtxPtr ctx) { return Ideal(std::move(field), std::move(ctx), {}); }

    /// Wrap an already reduced grevlex basis, pre-seeding the cache.
    static Ideal from_groebner(F field, CtxPtr ctx, PolyVec<F> gb) {
        Ideal I(std::move(field), std::move(ctx), gb);
        std::lock_guard<std::mutex> lock(I.d_->mu);
        I.d_->cache[MonomialOrder::grevlex()] = std::move(gb);
        return I;
    }

    const F& field() const { return d_->field; }
    const CtxPtr& context() const { return d_->ctx; }
    const PolyVec<F>& generators() const { return d_->gens; }

    const PolyVec<F>& groebner_basis(const MonomialOrder& ord = MonomialOrder::grevlex()) const {
        std::unique_lock<std::mutex> lock(d_->mu);
        auto it = d_->cache.find(ord);
        if (it != d_->cache.end()) return it->second;
        lock.unlock();
        auto gb = buchberger(d_->gens, ord);
        lock.lock();
        return d_->cache.emplace(ord, std::move(gb)).first->second;
    }

    bool contains(const Polynomial<F>& f) const {
        return normal_form(f, groebner_basis(), MonomialOrder::grevlex()).is_zero();
    }
    bool is_zero_ideal() const { return groebner_basis().empty(); }
    bool is_unit() const {
        const auto& gb = groebner_basis();
        return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
    }
    bool equals(const Ideal& o) const {
        const auto& a = groebner_basis();
        const auto& b = o.groebner_basis();
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

private:
    struct Data {
        F field;
        CtxPtr ctx;
        PolyVec<F> gens;
        mutable std::map<MonomialOrder, PolyVec<F>> cache;
        mutable std::mutex mu;
    };
    std::shared_ptr<Data> d_;
};

/// The irrelevant ideal m generated by the X-block variables.
template <class F>
Ideal<F> irrelevant_ideal(const F& field, const CtxPtr& ctx) {
    PolyVec<F> gens;
    for (int i = ctx->x_begin(); i < ctx->nvars(); ++i)
        gens.push_back(Polynomial<F>::variable(field, ctx, i));
    return Ideal<F>(field, ctx, std::move(gens));
}

/// Ideal sum I + J.
template <class F>
Ideal<F> ideal_sum(const Ideal<F>& I, const Ideal<F>& J) {
    PolyVec<F> gens = I.generators();
    for (const auto& g : J.generators()) gens.push_back(g);
    return Ideal<F>(I.field(), I.context(), std::move(gens));
}

/// Colon ideal I : (g) for a single nonzero element, via the syzygy trick:
/// elements of the module basis of {(f_i, 0), (g, 1)} with vanishing first
/// component carry the colon generators in their second component.
template <class F>
Ideal<F> colon_by_element(const Ideal<F>& I, const Polynomial<F>& g) {
    if (g.is_zero()) throw std::invalid_argument("colon_by_element: zero divisor polynomial");
    const F& field = I.field();
    const CtxPtr& ctx = I.context();
    const auto& fs = I.groebner_basis();
    std::vector<ModVec<F>> gens;
    for (const auto& f : fs) {
        ModVec<F> v(2, Polynomial<F>::zero(field, ctx));
        v[0] = f;
        gens.push_back(std::move(v));
    }
    {
        ModVec<F> v(2, Polynomial<F>::zero(field, ctx));
        v[0] = g;
        v[1] = Polynomial<F>::constant(field, ctx, field.one());
        gens.push_back(std::move(v));
    }
    auto G = module_groebner(std::move(gens), MonomialOrder::grevlex());
    PolyVec<F> out;
    for (const auto& v : G)
        if (v[0].is_zero() && !v[1].is_zero()) out.push_back(v[1]);
    if (out.empty()) return Ideal<F>::zero(field, ctx);
    return Ideal<F>::from_groebner(field, ctx, buchberger(out, MonomialOrder::grevlex()));
}

/// Ideal intersection via the module {(f_i, f_i), (g_j, 0)} in R^2.
template <class F>
Ideal<F> ideal_intersection(const Ideal<F>& I, const Ideal<F>& J) {
    const F& field = I.field();
    const CtxPtr& ctx = I.context();
    std::vector<ModVec<F>> gens;
    for (const auto& f : I.groebner_basis()) {
        ModVec<F> v(2, Polynomial<F>::zero(field, ctx));
        v[0] = f;
        v[1] = f;
        gens.push_back(std::move(v));
    }
    for (const auto& g : J.groebner_basis()) {
        ModVec<F> v(2, Polynomial<F>::zero(field, ctx));
        v[0] = g;
        gens.push_back(std::move(v));
    }
    auto G = module_groebner(std::move(gens), MonomialOrder::grevlex());
    PolyVec<F> out;
    for (const auto& v : G)
        if (v[0].is_zero() && !v[1].is_zero()) out.push_back(v[1]);
    if (out.empty()) return Ideal<F>::zero(field, ctx);
    return Ideal<F>::from_groebner(field, ctx, buchberger(out, MonomialOrder::grevlex()));
}

/// I : J = { g : gJ \subseteq I }, the intersection of the colons by the
/// generators of J. Quotient by the zero ideal is rejected.
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Ideal<F>& J) {
    if (!same_context(I.context(), J.context()))
        throw std::invalid_argument("ideal_quotient: context mismatch");
    if (J.is_zero_ideal())
        throw std::invalid_argument("ideal_quotient: quotient by the zero ideal");
    bool first = true;
    Ideal<F> acc = Ideal<F>::zero(I.field(), I.context());
    for (const auto& g : J.generators()) {
        if (g.is_zero()) continue;
        auto q = colon_by_element(I, g);
        acc = first ? q : ideal_intersection(acc, q);
        first = false;
    }
    return acc;
}

/// Saturation I : J^infinity as the stabilized iterated quotient.
template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Ideal<F>& J) {
    Ideal<F> cur = I;
    for (int iter = 0; iter < 1000; ++iter) {
        auto next = ideal_quotient(cur, J);
        if (next.equals(cur)) return cur;
        cur = std::move(next);
    }
    throw std::runtime_error("saturate: no stabilization");
}

/// I^s, generated by all s-fold products of the generators (naive, then the
/// basis cache interreduces on demand).
template <class F>
Ideal<F> ideal_power(const Ideal<F>& I, int s) {
    if (s < 1) throw std::invalid_argument("ideal_power: exponent must be >= 1");
    if (s == 1) return I;
    const auto& gens = I.generators();
    PolyVec<F> out;
    // multisets of size s over the generators
    std::vector<size_t> idx(static_cast<size_t>(s), 0);
    while (true) {
        auto p = gens[idx[0]];
        for (int i = 1; i < s; ++i) p = p * gens[idx[static_cast<size_t>(i)]];
        out.push_back(std::move(p));
        int i = s - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == gens.size() - 1) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < s; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(i)];
    }
    return Ideal<F>(I.field(), I.context(), std::move(out));
}

/// Elimination ideal: the part of I free of the variables in [lo, hi),
/// read off a block elimination basis.
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, int lo, int hi) {
    auto ord = MonomialOrder::eliminate(lo, hi);
    const auto& gb = I.groebner_basis(ord);
    PolyVec<F> out;
    for (const auto& g : gb) {
        bool free = true;
        for (int v = lo; v < hi && free; ++v)
            if (g.involves(v)) free = false;
        if (free) out.push_back(g);
    }
    return Ideal<F>(I.field(), I.context(), std::move(out));
}

/// Eliminate the X block of a mixed-context ideal.
template <class F>
Ideal<F> eliminate_x_block(const Ideal<F>& I) {
    return eliminate(I, I.context()->x_begin(), I.context()->nvars());
}

/// Krull dimension of R/I (the affine cone), computed combinatorially from
/// the leading-term ideal as the largest set of variables not containing the
/// support of any leading monomial. Unit ideal yields -1.
template <class F>
int dimension(const Ideal<F>& I) {
    const auto& gb = I.groebner_basis();
    const int n = I.context()->nvars();
    if (I.is_unit()) return -1;
    std::vector<Monomial> lms;
    for (const auto& g : gb) lms.push_back(g.leading_term().first);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const auto& m : lms) {
            bool inside = true;
            for (int v = 0; v < n && inside; ++v)
                if (m.e[static_cast<size_t>(v)] > 0 && !(mask & (1u << v))) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

} // namespace fiberscope

#endif
