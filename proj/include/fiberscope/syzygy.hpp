// First syzygies of the four parameterizing forms, minimal presentations,
// Fitting minors, and the standing-hypothesis check on the base locus.
#ifndef FIBERSCOPE_SYZYGY_HPP
#define FIBERSCOPE_SYZYGY_HPP

#include "hilbert.hpp"

namespace fiberscope {

/// A rational map P^2 --> P^3 given by four forms of one degree d over the
/// X-only context.
template <class F>
struct Parameterization {
    F field;
    CtxPtr ctx;
    int d = 0;
    std::array<Polynomial<F>, 4> f;

    static Parameterization make(F field, CtxPtr ctx, std::array<Polynomial<F>, 4> forms) {
        Parameterization phi{std::move(field), std::move(ctx), 0, std::move(forms)};
        if (phi.ctx->lambda_count != 0)
            throw std::invalid_argument("Parameterization: forms must live in the X-only context");
        int d = -1;
        for (const auto& g : phi.f) {
            if (!same_context(g.context(), phi.ctx))
                throw std::invalid_argument("Parameterization: context mismatch");
            if (g.is_zero()) continue;
            if (!g.is_homogeneous())
                throw std::invalid_argument("Parameterization: forms must be homogeneous");
            if (d < 0) d = static_cast<int>(g.degree());
            else if (d != static_cast<int>(g.degree()))
                throw std::invalid_argument("Parameterization: forms must share one degree");
        }
        if (d < 1) throw std::invalid_argument("Parameterization: forms are all zero or constant");
        phi.d = d;
        return phi;
    }

    Ideal<F> ideal() const {
        return Ideal<F>(field, ctx, {f[0], f[1], f[2], f[3]});
    }
};

/// 4 x r matrix of homogeneous forms whose columns are syzygies of
/// (f0..f3); columns are kept in a canonical order (by degree, then by a
/// deterministic textual comparison of the entries).
template <class F>
struct SyzygyMatrix {
    std::vector<std::array<Polynomial<F>, 4>> columns;
    std::vector<int> column_degrees;

    size_t width() const { return columns.size(); }
};

namespace detail {

template <class F>
bool column_less(const std::array<Polynomial<F>, 4>& a, int da,
                 const std::array<Polynomial<F>, 4>& b, int db) {
    if (da != db) return da < db;
    for (int i = 0; i < 4; ++i) {
        auto sa = a[static_cast<size_t>(i)].str();
        auto sb = b[static_cast<size_t>(i)].str();
        if (sa != sb) return sa < sb;
    }
    return false;
}

template <class F>
int column_degree(const std::array<Polynomial<F>, 4>& col) {
    int deg = -1;
    for (const auto& e : col) {
        if (e.is_zero()) continue;
        if (!e.is_homogeneous())
            throw std::logic_error("syzygy column entry is not homogeneous");
        if (deg < 0) deg = static_cast<int>(e.degree());
        else if (deg != static_cast<int>(e.degree()))
            throw std::logic_error("syzygy column entries have mixed degrees");
    }
    if (deg < 0) throw std::logic_error("syzygy column is zero");
    return deg;
}

template <class F>
void sort_columns(SyzygyMatrix<F>& M) {
    std::vector<size_t> order(M.columns.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return column_less(M.columns[a], M.column_degrees[a], M.columns[b], M.column_degrees[b]);
    });
    SyzygyMatrix<F> out;
    for (size_t i : order) {
        out.columns.push_back(M.columns[i]);
        out.column_degrees.push_back(M.column_degrees[i]);
    }
    M = std::move(out);
}

} // namespace detail

/// Generators of the first syzygy module of (f0..f3). Every column
/// annihilates f exactly; together the columns generate the whole module.
template <class F>
SyzygyMatrix<F> syzygy_generators(const Parameterization<F>& phi) {
    std::vector<Polynomial<F>> fs(phi.f.begin(), phi.f.end());
    auto syz = syzygy_module(fs);
    SyzygyMatrix<F> M;
    for (auto& col : syz) {
        std::array<Polynomial<F>, 4> c{col[0], col[1], col[2], col[3]};
        auto check = c[0] * phi.f[0] + c[1] * phi.f[1] + c[2] * phi.f[2] + c[3] * phi.f[3];
        if (!check.is_zero()) throw std::logic_error("syzygy_generators: column fails to annihilate f");
        M.column_degrees.push_back(detail::column_degree(c));
        M.columns.push_back(std::move(c));
    }
    detail::sort_columns(M);
    return M;
}

/// Drop columns expressible over R by the remaining ones, working degree by
/// degree so the result is a minimal generating set (graded Nakayama).
template <class F>
SyzygyMatrix<F> minimalize(const SyzygyMatrix<F>& M) {
    if (M.columns.empty()) return M;
    const F& field = M.columns[0][0].field();
    const CtxPtr& ctx = M.columns[0][0].context();
    SyzygyMatrix<F> sorted = M;
    detail::sort_columns(sorted);

    SyzygyMatrix<F> out;
    std::vector<ModVec<F>> kept_gb;
    for (size_t j = 0; j < sorted.columns.size(); ++j) {
        ModVec<F> v(sorted.columns[j].begin(), sorted.columns[j].end());
        if (!kept_gb.empty() && module_member(v, kept_gb, MonomialOrder::grevlex())) continue;
        out.columns.push_back(sorted.columns[j]);
        out.column_degrees.push_back(sorted.column_degrees[j]);
        std::vector<ModVec<F>> gens;
        for (const auto& c : out.columns) gens.emplace_back(c.begin(), c.end());
        (void)field; (void)ctx;
        kept_gb = module_groebner(std::move(gens), MonomialOrder::grevlex());
    }
    return out;
}

namespace detail {

template <class F>
Polynomial<F> determinant(const std::vector<std::vector<Polynomial<F>>>& A,
                          const F& field, const CtxPtr& ctx) {
    const size_t n = A.size();
    if (n == 1) return A[0][0];
    Polynomial<F> det = Polynomial<F>::zero(field, ctx);
    for (size_t i = 0; i < n; ++i) {
        if (A[i][0].is_zero()) continue;
        std::vector<std::vector<Polynomial<F>>> minor;
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<Polynomial<F>> row(A[r].begin() + 1, A[r].end());
            minor.push_back(std::move(row));
        }
        auto term = A[i][0] * determinant(minor, field, ctx);
        det = (i % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace detail

/// Ideal of all t x t minors of M.
template <class F>
Ideal<F> minors_ideal(const SyzygyMatrix<F>& M, int t) {
    if (M.columns.empty()) throw std::invalid_argument("minors_ideal: empty matrix");
    const F& field = M.columns[0][0].field();
    const CtxPtr& ctx = M.columns[0][0].context();
    const int r = static_cast<int>(M.width());
    if (t < 1 || t > std::min(4, r))
        throw std::invalid_argument("minors_ideal: minor size out of range");

    PolyVec<F> gens;
    std::vector<int> rows(static_cast<size_t>(t)), cols(static_cast<size_t>(t));
    std::function<void(int, int)> pick_cols = [&](int start, int k) {
        if (k == t) {
            std::vector<std::vector<Polynomial<F>>> A(static_cast<size_t>(t));
            for (int a = 0; a < t; ++a)
                for (int b = 0; b < t; ++b)
                    A[static_cast<size_t>(a)].push_back(
                        M.columns[static_cast<size_t>(cols[static_cast<size_t>(b)])]
                                 [static_cast<size_t>(rows[static_cast<size_t>(a)])]);
            auto det = detail::determinant(A, field, ctx);
            if (!det.is_zero()) gens.push_back(std::move(det));
            return;
        }
        for (int c = start; c < r; ++c) {
            cols[static_cast<size_t>(k)] = c;
            pick_cols(c + 1, k + 1);
        }
    };
    std::function<void(int, int)> pick_rows = [&](int start, int k) {
        if (k == t) { pick_cols(0, 0); return; }
        for (int rr = start; rr < 4; ++rr) {
            rows[static_cast<size_t>(k)] = rr;
            pick_rows(rr + 1, k + 1);
        }
    };
    pick_rows(0, 0);
    return Ideal<F>(field, ctx, std::move(gens));
}

/// Verdicts on the base locus of the parameterization against the standing
/// hypotheses: finite, locally a complete intersection, and
/// indeg(I^sat) = indeg(I) = d.
struct BaseLocusReport {
    bool is_finite = false;
    long degP = 0;
    bool is_lci = false;
    bool is_saturated = false;
    int indeg_sat = 0;
    bool hypotheses_pass = false;
    bool base_locus_empty = false;
};

template <class F>
BaseLocusReport check_base_locus(const Parameterization<F>& phi) {
    BaseLocusReport rep;
    auto I = phi.ideal();
    auto m = irrelevant_ideal(phi.field, phi.ctx);

    rep.is_finite = dimension(I) <= 1; // affine cone over a finite set
    if (!rep.is_finite) return rep;

    auto Isat = saturate(I, m);
    rep.is_saturated = Isat.equals(I);
    if (Isat.is_unit()) {
        rep.base_locus_empty = true;
        rep.indeg_sat = 0;
        return rep; // degenerate: no base points, hypotheses fail by convention
    }
    rep.degP = hilbert_polynomial_constant(Isat);
    rep.indeg_sat = initial_degree(Isat);

    auto M = syzygy_generators(phi);
    rep.is_lci = saturate(ideal_sum(I, minors_ideal(M, 2)), m).is_unit();

    rep.hypotheses_pass = rep.is_finite && rep.is_lci && rep.indeg_sat == phi.d &&
                          initial_degree(I) == phi.d;
    return rep;
}

} // namespace fiberscope

#endif
