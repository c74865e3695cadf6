// Randomized finite-field instance generation and degree sweeps. Uniform
// coefficient draws almost never have base points, so a second sampler
// builds the forms inside the linear system through k random points of P^2;
// both run through the same acceptance gates.
#ifndef FIBERSCOPE_EXPERIMENT_HPP
#define FIBERSCOPE_EXPERIMENT_HPP

#include <sstream>

#include "bounds.hpp"

namespace fiberscope {

enum class Sampler { uniform, base_points };

struct RandomInstance {
    std::optional<Parameterization<PrimeField>> phi;
    std::string rejected_at; // empty when accepted; otherwise the failed gate
    BaseLocusReport hypotheses;
};

namespace detail {

/// Rank of a small matrix over a prime field by Gaussian elimination.
inline int matrix_rank(std::vector<std::vector<uint64_t>> A, const PrimeField& f) {
    const size_t rows = A.size();
    if (rows == 0) return 0;
    const size_t cols = A[0].size();
    int rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && f.is_zero(A[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        auto inv = f.inv(A[r][c]);
        for (auto& x : A[r]) x = f.mul(x, inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(A[i][c])) continue;
            auto factor = A[i][c];
            for (size_t j = 0; j < cols; ++j)
                A[i][j] = f.sub(A[i][j], f.mul(factor, A[r][j]));
        }
        ++r;
        ++rank;
    }
    return rank;
}

/// Nullspace basis of a matrix over a prime field.
inline std::vector<std::vector<uint64_t>> nullspace(std::vector<std::vector<uint64_t>> A,
                                                    const PrimeField& f) {
    const size_t rows = A.size();
    const size_t cols = A.empty() ? 0 : A[0].size();
    std::vector<int> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && f.is_zero(A[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        auto inv = f.inv(A[r][c]);
        for (auto& x : A[r]) x = f.mul(x, inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(A[i][c])) continue;
            auto factor = A[i][c];
            for (size_t j = 0; j < cols; ++j)
                A[i][j] = f.sub(A[i][j], f.mul(factor, A[r][j]));
        }
        pivot_of_col[c] = static_cast<int>(r);
        ++r;
    }
    std::vector<std::vector<uint64_t>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<uint64_t> v(cols, 0);
        v[c] = 1;
        for (size_t c2 = 0; c2 < cols; ++c2)
            if (pivot_of_col[c2] >= 0)
                v[c2] = f.neg(A[static_cast<size_t>(pivot_of_col[c2])][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Degree-d monomials of the X-only context in a fixed order.
inline std::vector<Monomial> degree_monomials(int d) {
    std::vector<Monomial> ms;
    for_each_monomial(3, d, [&](const Monomial& m) { ms.push_back(m); });
    return ms;
}

/// Does the differential of phi have the full rank 3 (affine cone) at some
/// random point off the base locus? Heuristic for a 2-dimensional image.
inline bool generically_finite(const Parameterization<PrimeField>& phi, std::mt19937_64& rng) {
    const PrimeField& f = phi.field;
    std::array<std::array<Polynomial<PrimeField>, 3>, 4> jac;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j)
            jac[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                phi.f[static_cast<size_t>(i)].derivative(j);
    std::uniform_int_distribution<uint64_t> dist(0, f.p - 1);
    for (int tries = 0; tries < 25; ++tries) {
        std::vector<uint64_t> pt{dist(rng), dist(rng), dist(rng)};
        bool off_base = false;
        for (const auto& g : phi.f)
            if (!f.is_zero(g.evaluate(pt))) off_base = true;
        if (!off_base) continue;
        std::vector<std::vector<uint64_t>> A(4, std::vector<uint64_t>(3, 0));
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 3; ++j)
                A[i][j] = jac[i][j].evaluate(pt);
        if (matrix_rank(std::move(A), f) == 3) return true;
    }
    return false;
}

} // namespace detail

/// Draw four degree-d forms over F_p, deterministically in (p, d, seed,
/// sampler). The uniform sampler draws every coefficient independently; the
/// base-point sampler first fixes k random simple points of P^2 and draws the
/// forms from the linear system through them, which is what makes nonempty
/// base loci reachable. Acceptance requires the standing hypotheses and the
/// generic-finiteness heuristic; rejections carry the gate that failed.
inline RandomInstance random_parameterization(uint64_t p, int d, uint64_t seed,
                                              Sampler sampler = Sampler::base_points) {
    PrimeField f(p);
    if (p < 5) throw std::invalid_argument("random_parameterization: requires p >= 5");
    CtxPtr ctx = make_x_context();
    std::mt19937_64 rng((p * 1000003ull + static_cast<uint64_t>(d)) ^
                        (seed * 0x9e3779b97f4a7c15ull + 0x6a09e667f3bcc909ull));
    std::uniform_int_distribution<uint64_t> dist(0, p - 1);

    auto ms = detail::degree_monomials(d);
    RandomInstance inst;
    std::array<Polynomial<PrimeField>, 4> forms{
        Polynomial<PrimeField>::zero(f, ctx), Polynomial<PrimeField>::zero(f, ctx),
        Polynomial<PrimeField>::zero(f, ctx), Polynomial<PrimeField>::zero(f, ctx)};

    if (sampler == Sampler::uniform) {
        for (auto& g : forms) {
            std::vector<Polynomial<PrimeField>::Term> ts;
            for (const auto& m : ms) {
                auto c = dist(rng);
                if (c) ts.push_back({m, c});
            }
            g = Polynomial<PrimeField>::from_terms(f, ctx, std::move(ts));
        }
    } else {
        // k simple base points inside the degree window, leaving >= 4
        // dimensions in the linear system through them
        const int lo = d * (d + 1) / 2;
        const int hi = std::min(d * d - 2 * d + 3,
                                static_cast<int>(binomial(d + 2, 2)) - 4);
        if (hi < lo) throw std::logic_error("random_parameterization: empty base-point window");
        std::uniform_int_distribution<int> kdist(lo, hi);
        const int k = kdist(rng);

        std::vector<std::array<uint64_t, 3>> pts;
        while (static_cast<int>(pts.size()) < k) {
            std::array<uint64_t, 3> q{dist(rng), dist(rng), dist(rng)};
            if (f.is_zero(q[0]) && f.is_zero(q[1]) && f.is_zero(q[2])) continue;
            // projective normalization for the distinctness check
            for (auto& x : q)
                if (!f.is_zero(x)) {
                    auto s = f.inv(x);
                    for (auto& y : q) y = f.mul(y, s);
                    break;
                }
            if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
        }
        std::vector<std::vector<uint64_t>> A;
        for (const auto& q : pts) {
            std::vector<uint64_t> row;
            for (const auto& m : ms) {
                uint64_t v = 1;
                for (int j = 0; j < 3; ++j)
                    for (uint16_t e = 0; e < m.e[static_cast<size_t>(j)]; ++e)
                        v = f.mul(v, q[static_cast<size_t>(j)]);
                row.push_back(v);
            }
            A.push_back(std::move(row));
        }
        auto basis = detail::nullspace(std::move(A), f);
        if (basis.size() < 4) {
            inst.rejected_at = "base-point system too small";
            return inst;
        }
        for (auto& g : forms) {
            std::vector<uint64_t> coeffs(ms.size(), 0);
            for (const auto& v : basis) {
                auto c = dist(rng);
                if (f.is_zero(c)) continue;
                for (size_t j = 0; j < coeffs.size(); ++j)
                    coeffs[j] = f.add(coeffs[j], f.mul(c, v[j]));
            }
            std::vector<Polynomial<PrimeField>::Term> ts;
            for (size_t j = 0; j < ms.size(); ++j)
                if (!f.is_zero(coeffs[j])) ts.push_back({ms[j], coeffs[j]});
            g = Polynomial<PrimeField>::from_terms(f, ctx, std::move(ts));
        }
    }

    for (const auto& g : forms)
        if (g.is_zero() || g.degree() != d) {
            inst.rejected_at = "degenerate form drawn";
            return inst;
        }
    auto phi = Parameterization<PrimeField>::make(f, ctx, std::move(forms));

    inst.hypotheses = check_base_locus(phi);
    if (!inst.hypotheses.hypotheses_pass) {
        inst.rejected_at = inst.hypotheses.base_locus_empty ? "empty base locus"
                          : !inst.hypotheses.is_finite     ? "base locus not finite"
                          : !inst.hypotheses.is_lci        ? "base locus not LCI"
                                                           : "initial degree condition";
        return inst;
    }
    if (!detail::generically_finite(phi, rng)) {
        inst.rejected_at = "generic finiteness heuristic";
        return inst;
    }
    inst.phi = std::move(phi);
    return inst;
}

struct SweepRow {
    int d = 0;
    int attempted = 0;
    int accepted = 0;
    long max_sum = 0;
    long bound = 0;
    uint64_t seed = 0;
    bool falsified = false; // max_sum > bound: to be treated as a bug
};

/// One row per degree: draw `samples` instances, scan accepted ones
/// exhaustively over F_{p^e} and record the largest total fiber degree.
inline std::vector<SweepRow> sweep(uint64_t p, int d_lo, int d_hi, int samples, uint64_t seed,
                                   int ext_e = 1, Sampler sampler = Sampler::base_points) {
    if (ext_e < 1) throw std::invalid_argument("sweep: extension exponent must be >= 1");
    std::vector<SweepRow> rows;
    for (int d = d_lo; d <= d_hi; ++d) {
        SweepRow row;
        row.d = d;
        row.bound = theorem_bound(d);
        row.seed = seed;
        for (int i = 0; i < samples; ++i) {
            ++row.attempted;
            auto inst = random_parameterization(p, d, seed + static_cast<uint64_t>(i), sampler);
            if (!inst.phi) continue;
            ++row.accepted;
            long total = 0;
            if (ext_e == 1) {
                total = sum_fiber_degrees(exhaustive_scan(*inst.phi));
            } else {
                auto ext = ExtensionField::make(p, ext_e);
                total = sum_fiber_degrees(exhaustive_scan(extend_parameterization(*inst.phi, ext)));
            }
            row.max_sum = std::max(row.max_sum, total);
        }
        row.falsified = row.max_sum > row.bound;
        rows.push_back(row);
    }
    return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "d,attempted,accepted,max_sum,bound,seed\n";
    for (const auto& r : rows)
        os << r.d << "," << r.attempted << "," << r.accepted << "," << r.max_sum << ","
           << r.bound << "," << r.seed << "\n";
    return os.str();
}

} // namespace fiberscope

#endif
