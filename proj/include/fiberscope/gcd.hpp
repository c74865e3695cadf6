// Exact division and multivariate gcd by primitive polynomial remainder
// sequences, recursing on the variable of highest degree.
#ifndef FIBERSCOPE_GCD_HPP
#define FIBERSCOPE_GCD_HPP

#include "polynomial.hpp"

namespace fiberscope {

/// Exact quotient a / b, or nullopt when b does not divide a.
template <class F>
std::optional<Polynomial<F>> exact_divide(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_zero()) return std::nullopt;
    const F& f = a.field();
    const int n = a.context()->nvars();
    MonomialOrder ord = MonomialOrder::grevlex();
    (void)n; (void)ord;
    Polynomial<F> r = a;
    Polynomial<F> q = Polynomial<F>::zero(f, a.context());
    const auto& blt = b.leading_term();
    while (!r.is_zero()) {
        const auto& rlt = r.leading_term();
        if (!divides(blt.first, rlt.first)) return std::nullopt;
        Monomial m = quotient(rlt.first, blt.first);
        auto c = f.div(rlt.second, blt.second);
        q = q + Polynomial<F>::from_terms(f, a.context(), {{m, c}});
        r = r.axpy(f.neg(c), m, b);
    }
    return q;
}

template <class F>
bool divides_exactly(const Polynomial<F>& b, const Polynomial<F>& a) {
    if (a.is_zero()) return true;
    return exact_divide(a, b).has_value();
}

namespace detail {

/// View p as a univariate polynomial in var with Polynomial coefficients.
template <class F>
std::vector<Polynomial<F>> coefficients_wrt(const Polynomial<F>& p, int var) {
    std::vector<Polynomial<F>> cs(static_cast<size_t>(p.degree_in(var)) + 1,
                                  Polynomial<F>::zero(p.field(), p.context()));
    for (const auto& t : p.terms()) {
        uint16_t k = t.first.e[static_cast<size_t>(var)];
        Monomial m = t.first;
        m.e[static_cast<size_t>(var)] = 0;
        m.deg -= k;
        cs[k] = cs[k] + Polynomial<F>::from_terms(p.field(), p.context(), {{m, t.second}});
    }
    return cs;
}

template <class F>
Polynomial<F> from_coefficients(const std::vector<Polynomial<F>>& cs, int var,
                                const F& f, const CtxPtr& ctx) {
    Polynomial<F> r = Polynomial<F>::zero(f, ctx);
    for (size_t k = 0; k < cs.size(); ++k)
        r = r + cs[k].mono_multiple(Monomial::var(var, static_cast<uint16_t>(k)));
    return r;
}

template <class F>
Polynomial<F> leading_coeff_wrt(const Polynomial<F>& p, int var) {
    auto cs = coefficients_wrt(p, var);
    return cs.back();
}

/// Iterative pseudo-remainder of a by b with respect to var.
template <class F>
Polynomial<F> pseudo_remainder(Polynomial<F> a, const Polynomial<F>& b, int var) {
    const int db = b.degree_in(var);
    Polynomial<F> lb = leading_coeff_wrt(b, var);
    while (!a.is_zero()) {
        int da = a.degree_in(var);
        if (da < db) break;
        Polynomial<F> la = leading_coeff_wrt(a, var);
        a = a * lb - (la * b).mono_multiple(Monomial::var(var, static_cast<uint16_t>(da - db)));
        // degree in var strictly drops each round
    }
    return a;
}

} // namespace detail

template <class F>
Polynomial<F> multivariate_gcd(const Polynomial<F>& a, const Polynomial<F>& b);

namespace detail {

/// gcd of the var-coefficients of p (the content of p with respect to var).
template <class F>
Polynomial<F> content_wrt(const Polynomial<F>& p, int var) {
    auto cs = coefficients_wrt(p, var);
    Polynomial<F> c = Polynomial<F>::zero(p.field(), p.context());
    for (const auto& ci : cs) {
        c = multivariate_gcd(c, ci);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

} // namespace detail

/// gcd normalized so its grevlex-leading coefficient is 1; gcd with zero is
/// the monic normalization of the other argument.
template <class F>
Polynomial<F> multivariate_gcd(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const F& f = a.field();
    const CtxPtr& ctx = a.context();
    if (a.is_constant() || b.is_constant())
        return Polynomial<F>::constant(f, ctx, f.one());

    // main variable: highest degree occurring in either argument
    int var = -1, best = 0;
    for (int i = 0; i < ctx->nvars(); ++i) {
        int d = std::max(a.degree_in(i), b.degree_in(i));
        if (d > best) { best = d; var = i; }
    }

    auto ca = detail::content_wrt(a, var);
    auto cb = detail::content_wrt(b, var);
    auto pa = scalar_normalized(*exact_divide(a, ca));
    auto pb = scalar_normalized(*exact_divide(b, cb));
    auto cont = multivariate_gcd(ca, cb);

    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    while (true) {
        Polynomial<F> r = detail::pseudo_remainder(pa, pb, var);
        if (r.is_zero()) break;
        r = scalar_normalized(*exact_divide(r, detail::content_wrt(r, var)));
        pa = std::move(pb);
        pb = std::move(r);
        if (pb.degree_in(var) == 0) {
            pb = Polynomial<F>::constant(f, ctx, f.one());
            break;
        }
    }
    auto g = pb;
    if (!g.is_constant())
        g = scalar_normalized(*exact_divide(g, detail::content_wrt(g, var)));
    return (cont * g).monic();
}

/// gcd of a list; zeros are allowed and ignored; the gcd of an all-zero list
/// is the zero polynomial.
template <class F>
Polynomial<F> multivariate_gcd(const std::vector<Polynomial<F>>& ps) {
    if (ps.empty()) throw std::invalid_argument("multivariate_gcd: empty list");
    Polynomial<F> g = Polynomial<F>::zero(ps[0].field(), ps[0].context());
    for (const auto& p : ps) {
        g = multivariate_gcd(g, p);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

} // namespace fiberscope

#endif
