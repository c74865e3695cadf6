// Fiber classification over points of P^3 and enumeration of the finite set
// of points with one-dimensional fibers. The search intersects three random
// hyperplane sections of the incidence variety, extracts candidate points
// chart by chart from lexicographic bases, verifies every candidate exactly,
// and reruns with fresh randomness to detect misses.
#ifndef FIBERSCOPE_FIBERS_HPP
#define FIBERSCOPE_FIBERS_HPP

#include <random>

#include "gcd.hpp"
#include "syzygy.hpp"

namespace fiberscope {

template <class F>
struct FiberReport {
    enum class Kind { Empty, ZeroDimensional, OneDimensional };
    ProjectivePoint<F> point;
    Kind kind;
    long zero_dim_degree = 0;               // ZeroDimensional only
    std::optional<Polynomial<F>> h;         // OneDimensional only; monic
    int h_degree = 0;
};

template <class F>
struct OneDimLocus {
    std::vector<std::pair<ProjectivePoint<F>, Polynomial<F>>> entries;
    std::optional<Ideal<F>> residual; // unresolved non-rational candidates
    long total_degree = 0;
    uint64_t seed = 0;
};

/// Sigma over the entries of deg h. With a nonempty residual this is only a
/// certified lower bound; callers must check the flag.
template <class F>
long sum_fiber_degrees(const OneDimLocus<F>& L) {
    return L.total_degree;
}

/// The fiber equations over p: each syzygy column contracted against the
/// coordinates of p, in the X-only context.
template <class F>
std::vector<Polynomial<F>> specialize_syzygies(const SyzygyMatrix<F>& M,
                                               const ProjectivePoint<F>& p) {
    if (M.columns.empty()) throw std::invalid_argument("specialize_syzygies: empty matrix");
    std::vector<Polynomial<F>> out;
    for (const auto& col : M.columns) {
        auto ell = col[0].scaled(p.coords[0]);
        for (int i = 1; i < 4; ++i)
            ell = ell + col[static_cast<size_t>(i)].scaled(p.coords[static_cast<size_t>(i)]);
        out.push_back(std::move(ell));
    }
    return out;
}

/// Classify the fiber over p: one-dimensional when the specialized columns
/// share a nonconstant gcd; otherwise empty or zero-dimensional according to
/// the saturation of the specialized ideal.
template <class F>
FiberReport<F> fiber_at_point(const Parameterization<F>& phi, const SyzygyMatrix<F>& M,
                              const ProjectivePoint<F>& p) {
    auto ells = specialize_syzygies(M, p);
    auto g = multivariate_gcd(ells);
    if (g.is_zero())
        throw std::logic_error("fiber_at_point: all fiber equations vanish identically");
    if (!g.is_constant())
        return {p, FiberReport<F>::Kind::OneDimensional, 0, g, g.degree()};
    Ideal<F> Fp(phi.field, phi.ctx, ells);
    auto sat = saturate(Fp, irrelevant_ideal(phi.field, phi.ctx));
    if (sat.is_unit()) return {p, FiberReport<F>::Kind::Empty, 0, std::nullopt, 0};
    return {p, FiberReport<F>::Kind::ZeroDimensional, hilbert_polynomial_constant(sat),
            std::nullopt, 0};
}

template <class F>
FiberReport<F> fiber_at_point(const Parameterization<F>& phi, const ProjectivePoint<F>& p) {
    return fiber_at_point(phi, syzygy_generators(phi), p);
}

// ---------------------------------------------------------------------------
// random elements, field enumeration, root extraction
// ---------------------------------------------------------------------------

namespace detail {

inline Rationals::Elem random_element(const Rationals& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> dist(-997, 997);
    return f.from_int(dist(rng));
}
inline PrimeField::Elem random_element(const PrimeField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> dist(0, f.p - 1);
    return dist(rng);
}
inline ExtensionField::Elem random_element(const ExtensionField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> dist(0, f.order() - 1);
    return f.decode(dist(rng));
}

inline std::vector<PrimeField::Elem> all_elements(const PrimeField& f) {
    std::vector<PrimeField::Elem> v;
    v.reserve(f.p);
    for (uint64_t i = 0; i < f.p; ++i) v.push_back(i);
    return v;
}
inline std::vector<ExtensionField::Elem> all_elements(const ExtensionField& f) {
    std::vector<ExtensionField::Elem> v;
    v.reserve(f.order());
    for (uint64_t i = 0; i < f.order(); ++i) v.push_back(f.decode(i));
    return v;
}

/// Fully factor |m| by trial division; certain=false when the unfactored
/// remainder might be composite (it is then still used as one divisor
/// source, so roots may be missed only in that flagged case).
inline std::vector<Int> divisor_list(Int m, bool& certain) {
    if (m < 0) m = -m;
    std::vector<std::pair<Int, int>> factors;
    for (Int p = 2; p * p <= m && p <= 1000000; p += (p == 2 ? 1 : 2)) {
        int k = 0;
        while (m % p == 0) { m /= p; ++k; }
        if (k) factors.push_back({p, k});
    }
    if (m > 1) {
        if (m > Int(1000000) * Int(1000000)) certain = false;
        factors.push_back({m, 1});
    }
    std::vector<Int> divs{1};
    for (const auto& [p, k] : factors) {
        size_t base = divs.size();
        Int pk = 1;
        for (int i = 0; i < k; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

template <class F>
struct RootList {
    std::vector<typename F::Elem> roots;
    bool complete = true; // false when roots outside the field (or beyond the
                          // factoring budget) may remain
};

/// All roots of a nonzero univariate polynomial in the coefficient field.
/// Finite fields are scanned exhaustively; over the rationals the rational
/// root theorem is applied and the deflated leftover flags incompleteness.
template <class F>
RootList<F> univariate_roots(const Polynomial<F>& u, int var) {
    if (u.is_zero()) throw std::invalid_argument("univariate_roots: zero polynomial");
    RootList<F> out;
    const F& f = u.field();
    if constexpr (F::is_finite) {
        for (const auto& e : all_elements(f))
            if (f.is_zero(u.substitute(var, e).evaluate(
                    std::vector<typename F::Elem>(static_cast<size_t>(u.context()->nvars()), f.zero()))))
                out.roots.push_back(e);
        return out;
    } else {
        const int n = u.degree_in(var);
        std::vector<Rat> cs(static_cast<size_t>(n) + 1, Rat(0));
        for (const auto& t : u.terms()) {
            if (t.first.deg != t.first.e[static_cast<size_t>(var)])
                throw std::invalid_argument("univariate_roots: polynomial is not univariate");
            cs[t.first.e[static_cast<size_t>(var)]] += t.second;
        }
        Int den = 1;
        for (const auto& c : cs) den = boost::multiprecision::lcm(den, Int(boost::multiprecision::denominator(c)));
        std::vector<Int> ic;
        for (const auto& c : cs) ic.push_back(Int(c * Rat(den)));

        Polynomial<F> w = u;
        auto var_poly = Polynomial<F>::variable(f, u.context(), var);
        std::set<Rat> roots;

        size_t low = 0;
        while (low < ic.size() && ic[low] == 0) ++low;
        if (low > 0) {
            roots.insert(Rat(0));
            for (size_t i = 0; i < low; ++i) w = *exact_divide(w, var_poly);
        }
        bool certain = true;
        auto ps = divisor_list(ic[low], certain);
        auto qs = divisor_list(ic.back(), certain);
        for (const auto& p : ps)
            for (const auto& q : qs)
                for (int sign : {1, -1}) {
                    Rat r(sign * p, q);
                    if (roots.count(r)) continue;
                    auto lin = var_poly - Polynomial<F>::constant(f, u.context(), r);
                    if (divides_exactly(lin, w)) roots.insert(r);
                }
        for (const auto& r : roots) {
            auto lin = var_poly - Polynomial<F>::constant(f, u.context(), r);
            while (auto q2 = exact_divide(w, lin)) w = *q2;
        }
        out.complete = certain && w.is_constant();
        out.roots.assign(roots.begin(), roots.end());
        return out;
    }
}

struct ChartNotZeroDim : std::runtime_error {
    ChartNotZeroDim() : std::runtime_error("candidate system is not zero-dimensional") {}
};

/// Back-substitution through lexicographic bases: peel the last free
/// variable via the univariate member of a fresh lex basis, branch on its
/// roots, recurse. Solutions are assignments to the free variables.
template <class F>
void solve_triangular(const PolyVec<F>& gens, std::vector<int> free_vars,
                      std::map<int, typename F::Elem>& asg,
                      std::vector<std::map<int, typename F::Elem>>& out, bool& complete) {
    PolyVec<F> nz;
    for (const auto& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    if (free_vars.empty()) {
        if (nz.empty()) out.push_back(asg);
        return;
    }
    if (nz.empty()) throw ChartNotZeroDim{};

    auto gb = buchberger(nz, MonomialOrder::lex());
    if (gb.size() == 1 && gb[0].is_constant()) return; // inconsistent

    const int v = free_vars.back();
    PolyVec<F> univ;
    for (const auto& g : gb) {
        bool pure = true;
        for (int i = 0; i < g.context()->nvars() && pure; ++i)
            if (i != v && g.involves(i)) pure = false;
        if (pure) univ.push_back(g);
    }
    if (univ.empty()) throw ChartNotZeroDim{};
    auto u = multivariate_gcd(univ);
    if (u.is_constant()) return;

    auto rl = univariate_roots(u, v);
    if (!rl.complete) complete = false;
    free_vars.pop_back();
    for (const auto& r : rl.roots) {
        PolyVec<F> sub;
        for (const auto& g : gb) sub.push_back(g.substitute(v, r));
        asg[v] = r;
        solve_triangular(sub, free_vars, asg, out, complete);
        asg.erase(v);
    }
}

template <class F>
bool locus_entries_equal(const OneDimLocus<F>& a, const OneDimLocus<F>& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (size_t i = 0; i < a.entries.size(); ++i)
        if (!(a.entries[i].first == b.entries[i].first) || a.entries[i].second != b.entries[i].second)
            return false;
    return a.residual.has_value() == b.residual.has_value();
}

} // namespace detail

namespace detail {

/// One randomized enumeration pass; throws ChartNotZeroDim out of the
/// per-attempt loop only after the retry budget is spent.
template <class F>
OneDimLocus<F> locus_run(const Parameterization<F>& phi, const SyzygyMatrix<F>& M,
                         std::mt19937_64& rng) {
    const F& field = phi.field;
    CtxPtr mixed = make_mixed_context();
    const int xb = mixed->x_begin();

    // bihomogeneous fiber equations l_j(X; lambda)
    PolyVec<F> ells;
    for (const auto& col : M.columns) {
        auto ell = Polynomial<F>::zero(field, mixed);
        for (int i = 0; i < 4; ++i)
            ell = ell + col[static_cast<size_t>(i)].lift_to_mixed(mixed) *
                            Polynomial<F>::variable(field, mixed, i);
        ells.push_back(std::move(ell));
    }

    for (int attempt = 0; attempt < 8; ++attempt) {
        // three independent random hyperplanes in the X variables
        PolyVec<F> cgens;
        for (int k = 0; k < 3; ++k) {
            Polynomial<F> h = Polynomial<F>::zero(field, mixed);
            while (h.is_zero()) {
                h = Polynomial<F>::zero(field, mixed);
                for (int i = 0; i < 3; ++i)
                    h = h + Polynomial<F>::variable(field, mixed, xb + i)
                                .scaled(random_element(field, rng));
            }
            PolyVec<F> gens = ells;
            gens.push_back(h);
            // saturate by the X variables first: the X = 0 stratum of the
            // affine cone would otherwise project onto all of lambda-space
            // and wipe out the elimination ideal
            auto satk = saturate(Ideal<F>(field, mixed, std::move(gens)),
                                 irrelevant_ideal(field, mixed));
            auto Ek = eliminate_x_block(satk);
            for (const auto& g : Ek.generators()) cgens.push_back(g);
        }

        try {
            OneDimLocus<F> L;
            bool complete = true;
            std::vector<ProjectivePoint<F>> candidates;
            for (int c = 0; c < 4; ++c) {
                PolyVec<F> chart;
                for (const auto& g : cgens) {
                    auto s = g;
                    for (int j = 0; j < c; ++j) s = s.substitute(j, field.zero());
                    s = s.substitute(c, field.one());
                    chart.push_back(std::move(s));
                }
                std::vector<int> free_vars;
                for (int j = c + 1; j < 4; ++j) free_vars.push_back(j);
                std::map<int, typename F::Elem> asg;
                std::vector<std::map<int, typename F::Elem>> sols;
                solve_triangular(chart, free_vars, asg, sols, complete);
                for (const auto& s : sols) {
                    std::array<typename F::Elem, 4> coords{field.zero(), field.zero(),
                                                           field.zero(), field.zero()};
                    coords[static_cast<size_t>(c)] = field.one();
                    for (const auto& [j, val] : s) coords[static_cast<size_t>(j)] = val;
                    candidates.emplace_back(field, coords);
                }
            }
            for (const auto& p : candidates) {
                auto rep = fiber_at_point(phi, M, p);
                if (rep.kind == FiberReport<F>::Kind::OneDimensional)
                    L.entries.push_back({p, *rep.h});
            }
            std::sort(L.entries.begin(), L.entries.end(), [](const auto& a, const auto& b) {
                return a.first.str() < b.first.str();
            });
            for (const auto& e : L.entries) L.total_degree += e.second.degree();
            if (!complete) L.residual = Ideal<F>(field, mixed, cgens);
            return L;
        } catch (const ChartNotZeroDim&) {
            continue; // fresh hyperplanes
        }
    }
    throw std::runtime_error("one_dim_locus: candidate systems stayed positive-dimensional");
}

} // namespace detail

/// All points of P^3 with one-dimensional fiber, each with its (monic)
/// unmixed-component equation h_p. Two independently randomized passes must
/// agree; every returned entry is verified exactly at the point.
template <class F>
OneDimLocus<F> one_dim_locus(const Parameterization<F>& phi, uint64_t seed) {
    auto M = syzygy_generators(phi);
    std::mt19937_64 rng1(seed), rng2(seed ^ 0x9e3779b97f4a7c15ull);
    auto L1 = detail::locus_run(phi, M, rng1);
    auto L2 = detail::locus_run(phi, M, rng2);
    if (!detail::locus_entries_equal(L1, L2))
        throw std::runtime_error("one_dim_locus: independent runs disagree (randomness exhaustion)");
    L1.seed = seed;
    return L1;
}

/// Brute-force oracle over a finite field: classify every point of P^3 by
/// the gcd of its specialized syzygies, in the canonical chart-by-chart,
/// coordinate-lexicographic order.
template <class F>
OneDimLocus<F> exhaustive_scan(const Parameterization<F>& phi) {
    static_assert(F::is_finite, "exhaustive_scan requires a finite coefficient field");
    auto M = syzygy_generators(phi);
    auto elems = detail::all_elements(phi.field);
    const F& field = phi.field;
    OneDimLocus<F> L;
    for (int c = 0; c < 4; ++c) {
        const int nfree = 3 - c;
        std::vector<size_t> odo(static_cast<size_t>(nfree), 0);
        while (true) {
            std::array<typename F::Elem, 4> coords{field.zero(), field.zero(), field.zero(),
                                                   field.zero()};
            coords[static_cast<size_t>(c)] = field.one();
            for (int j = 0; j < nfree; ++j)
                coords[static_cast<size_t>(c + 1 + j)] = elems[odo[static_cast<size_t>(j)]];
            ProjectivePoint<F> p(field, coords);
            auto ells = specialize_syzygies(M, p);
            auto g = multivariate_gcd(ells);
            if (g.is_zero())
                throw std::logic_error("exhaustive_scan: all fiber equations vanish");
            if (!g.is_constant()) {
                L.total_degree += g.degree();
                L.entries.push_back({p, std::move(g)});
            }
            int j = nfree - 1;
            while (j >= 0 && odo[static_cast<size_t>(j)] + 1 == elems.size()) {
                odo[static_cast<size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
            ++odo[static_cast<size_t>(j)];
        }
    }
    return L;
}

/// Same forms viewed over an extension of their prime field.
inline Parameterization<ExtensionField> extend_parameterization(
    const Parameterization<PrimeField>& phi, const ExtensionField& ext) {
    std::array<Polynomial<ExtensionField>, 4> fs{
        lift_coefficients(phi.f[0], ext), lift_coefficients(phi.f[1], ext),
        lift_coefficients(phi.f[2], ext), lift_coefficients(phi.f[3], ext)};
    return Parameterization<ExtensionField>::make(ext, phi.ctx, std::move(fs));
}

} // namespace fiberscope

#endif
