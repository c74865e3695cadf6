// Graded dimensions: Hilbert function by standard-monomial counting, the
// eventual constant of the Hilbert polynomial for zero-dimensional schemes,
// initial degree, deficiency, and the derived invariants (n, m, l).
#ifndef FIBERSCOPE_HILBERT_HPP
#define FIBERSCOPE_HILBERT_HPP

#include <functional>
#include <limits>
#include <map>

#include "groebner.hpp"

namespace fiberscope {

inline long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// dim_k R_mu for the polynomial ring on the ideal's context.
inline long ring_dim(int nvars, int mu) {
    if (mu < 0) return 0;
    return binomial(mu + nvars - 1, nvars - 1);
}

namespace detail {

/// Visit every exponent tuple of total degree mu on nvars variables.
inline void for_each_monomial(int nvars, int mu, const std::function<void(const Monomial&)>& fn) {
    Monomial m;
    m.deg = static_cast<uint32_t>(mu);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            m.e[static_cast<size_t>(var)] = static_cast<uint16_t>(left);
            fn(m);
            m.e[static_cast<size_t>(var)] = 0;
            return;
        }
        for (int k = 0; k <= left; ++k) {
            m.e[static_cast<size_t>(var)] = static_cast<uint16_t>(k);
            rec(var + 1, left - k);
        }
        m.e[static_cast<size_t>(var)] = 0;
    };
    rec(0, mu);
}

} // namespace detail

/// HF_{R/I}(mu): standard monomials of degree mu outside the leading-term
/// ideal of a grevlex basis.
template <class F>
long hilbert_function(const Ideal<F>& I, int mu) {
    if (mu < 0) return 0;
    const auto& gb = I.groebner_basis();
    std::vector<Monomial> lms;
    for (const auto& g : gb) lms.push_back(g.leading_term().first);
    long count = 0;
    detail::for_each_monomial(I.context()->nvars(), mu, [&](const Monomial& m) {
        for (const auto& lt : lms)
            if (divides(lt, m)) return;
        ++count;
    });
    return count;
}

/// dim_k I_mu, complementary to the Hilbert function.
template <class F>
long ideal_graded_dim(const Ideal<F>& I, int mu) {
    if (mu < 0) return 0;
    return ring_dim(I.context()->nvars(), mu) - hilbert_function(I, mu);
}

/// Tabulated graded dimensions of R/I with the first stabilization point
/// (three consecutive equal values) if one occurs inside the window.
struct GradedDims {
    std::map<int, long> table;
    std::optional<int> stabilization;
};

template <class F>
GradedDims hilbert_table(const Ideal<F>& I, int lo, int hi) {
    GradedDims g;
    for (int mu = lo; mu <= hi; ++mu) g.table[mu] = hilbert_function(I, mu);
    for (int mu = lo; mu + 2 <= hi; ++mu) {
        if (g.table[mu] == g.table[mu + 1] && g.table[mu] == g.table[mu + 2]) {
            g.stabilization = mu;
            break;
        }
    }
    return g;
}

inline constexpr int kInfiniteDegree = std::numeric_limits<int>::max();

/// indeg(I): smallest degree with a nonzero element; +infinity (represented
/// by kInfiniteDegree) for the zero ideal; 0 for the unit ideal.
template <class F>
int initial_degree(const Ideal<F>& I) {
    const auto& gb = I.groebner_basis();
    if (gb.empty()) return kInfiniteDegree;
    int best = kInfiniteDegree;
    for (const auto& g : gb) best = std::min(best, static_cast<int>(g.degree()));
    return best;
}

/// The eventual constant of HF_{R/I} for a zero-dimensional projective
/// scheme (its degree). The input is saturated internally, after which the
/// Hilbert function is weakly increasing, so three consecutive equal values
/// past the top basis degree certify the constant. The empty scheme (unit
/// saturation) yields 0; positive-dimensional input is an error.
template <class F>
long hilbert_polynomial_constant(const Ideal<F>& I) {
    auto J = saturate(I, irrelevant_ideal(I.field(), I.context()));
    if (J.is_unit()) return 0;
    if (dimension(J) > 1)
        throw std::invalid_argument("hilbert_polynomial_constant: scheme is positive-dimensional");
    int start = 0;
    for (const auto& g : J.groebner_basis())
        start = std::max(start, static_cast<int>(g.degree()));
    long a = hilbert_function(J, start);
    long b = hilbert_function(J, start + 1);
    for (int mu = start; mu < start + 4000; ++mu) {
        long c = hilbert_function(J, mu + 2);
        if (a == b && b == c) return a;
        a = b;
        b = c;
    }
    throw std::runtime_error("hilbert_polynomial_constant: no stabilization");
}

/// dim_k H^1_m(R/I_sat)_mu = HP - HF for a saturated zero-dimensional ideal.
template <class F>
long deficiency(const Ideal<F>& I_sat, int mu) {
    auto J = saturate(I_sat, irrelevant_ideal(I_sat.field(), I_sat.context()));
    if (!J.equals(I_sat))
        throw std::invalid_argument("deficiency: input ideal is not saturated");
    long hp = hilbert_polynomial_constant(I_sat);
    long hf = hilbert_function(I_sat, mu);
    long def = hp - hf;
    if (def < 0) throw std::logic_error("deficiency: negative gap (hypotheses violated)");
    return def;
}

/// The three local-cohomology dimension counts tied to a parameterization
/// ideal of degree d, computable by two independent routes that must agree:
///   closed form:  n = degP - d(d+1)/2,  m = degP - d,       l = d(d-1)/2
///   direct:       n = degP - C(d+1,2),  m = 4 dim R_{d-2} - dim I_{2d-2}
/// where degP is the degree of the (finite) base locus.
struct NmlInvariants {
    long n = 0, m = 0, l = 0;
    long degP = 0;
    int d = 0;
    enum class Route { closed_form, direct } route = Route::closed_form;
};

template <class F>
NmlInvariants nml_invariants(const Ideal<F>& I, int d, NmlInvariants::Route route) {
    NmlInvariants r;
    r.d = d;
    r.route = route;
    r.degP = hilbert_polynomial_constant(I);
    long n_closed = r.degP - static_cast<long>(d) * (d + 1) / 2;
    long m_closed = r.degP - d;
    long l_closed = static_cast<long>(d) * (d - 1) / 2;
    long n_direct = r.degP - binomial(d + 1, 2);
    long m_direct = 4 * ring_dim(I.context()->nvars(), d - 2) - ideal_graded_dim(I, 2 * d - 2);
    long l_direct = binomial(d, 2);
    if (n_closed != n_direct || m_closed != m_direct || l_closed != l_direct)
        throw std::runtime_error("nml_invariants: closed-form and direct routes disagree");
    r.n = n_closed;
    r.m = m_closed;
    r.l = l_closed;
    return r;
}

} // namespace fiberscope

#endif
