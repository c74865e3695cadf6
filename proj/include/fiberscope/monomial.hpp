// Variable contexts (lambda-block then X-block), exponent tuples and
// monomial orders (grevlex, lex, block elimination).
#ifndef FIBERSCOPE_MONOMIAL_HPP
#define FIBERSCOPE_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiberscope {

inline constexpr int kMaxVars = 7;

/// Ordered variable names. The lambda block (projective coordinates of P^3,
/// 4 names) precedes the X block (3 names) so block elimination orders are
/// contiguous index ranges.
struct VariableContext {
    std::vector<std::string> names;
    int lambda_count = 0; // 0 or 4; lambda variables occupy indices [0, lambda_count)

    int nvars() const { return static_cast<int>(names.size()); }
    int x_count() const { return nvars() - lambda_count; }
    int x_begin() const { return lambda_count; }

    bool operator==(const VariableContext& o) const {
        return names == o.names && lambda_count == o.lambda_count;
    }
};

using CtxPtr = std::shared_ptr<const VariableContext>;

inline CtxPtr make_x_context() {
    auto c = std::make_shared<VariableContext>();
    c->names = {"X1", "X2", "X3"};
    c->lambda_count = 0;
    return c;
}

inline CtxPtr make_mixed_context() {
    auto c = std::make_shared<VariableContext>();
    c->names = {"L0", "L1", "L2", "L3", "X1", "X2", "X3"};
    c->lambda_count = 4;
    return c;
}

inline bool same_context(const CtxPtr& a, const CtxPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Exponent tuple with cached total degree. Entries beyond the context's
/// variable count stay zero.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint32_t deg = 0;

    static Monomial one() { return Monomial{}; }
    static Monomial var(int i, uint16_t k = 1) {
        Monomial m;
        m.e[static_cast<size_t>(i)] = k;
        m.deg = k;
        return m;
    }

    uint32_t degree_range(int lo, int hi) const {
        uint32_t d = 0;
        for (int i = lo; i < hi; ++i) d += e[static_cast<size_t>(i)];
        return d;
    }

    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i)
        m.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
    m.deg = a.deg + b.deg;
    return m;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    // a | b
    if (a.deg > b.deg) return false;
    for (size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i)
        m.e[i] = static_cast<uint16_t>(b.e[i] - a.e[i]);
    m.deg = b.deg - a.deg;
    return m;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    uint32_t d = 0;
    for (size_t i = 0; i < kMaxVars; ++i) {
        m.e[i] = std::max(a.e[i], b.e[i]);
        d += m.e[i];
    }
    m.deg = d;
    return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

namespace detail {
/// grevlex comparison restricted to the index range [lo, hi).
/// Returns +1 if a > b, -1 if a < b, 0 if the restrictions agree.
inline int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    uint32_t da = a.degree_range(lo, hi), db = b.degree_range(lo, hi);
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
        uint16_t xa = a.e[static_cast<size_t>(i)], xb = b.e[static_cast<size_t>(i)];
        if (xa != xb) return xa < xb ? 1 : -1;
    }
    return 0;
}

inline int cmp_lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
        uint16_t xa = a.e[static_cast<size_t>(i)], xb = b.e[static_cast<size_t>(i)];
        if (xa != xb) return xa > xb ? 1 : -1;
    }
    return 0;
}
} // namespace detail

/// Monomial orders used across the toolkit. grevlex is the canonical storage
/// order; block elimination orders compare the eliminated block first so that
/// any monomial meeting an eliminated variable beats every monomial free of
/// them; lex feeds the triangular back-substitution solver.
struct MonomialOrder {
    enum class Kind { grevlex, block_elim, lex };

    Kind kind = Kind::grevlex;
    int elim_lo = 0, elim_hi = 0; // block compared first, block_elim only

    static MonomialOrder grevlex() { return MonomialOrder{}; }
    static MonomialOrder lex() { return MonomialOrder{Kind::lex, 0, 0}; }
    static MonomialOrder eliminate(int lo, int hi) {
        return MonomialOrder{Kind::block_elim, lo, hi};
    }
    /// Order eliminating the X block of a mixed context.
    static MonomialOrder eliminate_x(const VariableContext& ctx) {
        return eliminate(ctx.x_begin(), ctx.nvars());
    }

    int cmp(const Monomial& a, const Monomial& b, int nvars) const {
        switch (kind) {
        case Kind::grevlex:
            return detail::cmp_grevlex_range(a, b, 0, nvars);
        case Kind::lex:
            return detail::cmp_lex_range(a, b, 0, nvars);
        case Kind::block_elim: {
            if (int c = detail::cmp_grevlex_range(a, b, elim_lo, elim_hi)) return c;
            // remaining indices: [0, elim_lo) and [elim_hi, nvars) as one grevlex block
            uint32_t da = a.deg - a.degree_range(elim_lo, elim_hi);
            uint32_t db = b.deg - b.degree_range(elim_lo, elim_hi);
            if (da != db) return da > db ? 1 : -1;
            for (int i = nvars - 1; i >= elim_hi; --i) {
                uint16_t xa = a.e[static_cast<size_t>(i)], xb = b.e[static_cast<size_t>(i)];
                if (xa != xb) return xa < xb ? 1 : -1;
            }
            for (int i = elim_lo - 1; i >= 0; --i) {
                uint16_t xa = a.e[static_cast<size_t>(i)], xb = b.e[static_cast<size_t>(i)];
                if (xa != xb) return xa < xb ? 1 : -1;
            }
            return 0;
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b, int nvars) const {
        return cmp(a, b, nvars) < 0;
    }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && elim_lo == o.elim_lo && elim_hi == o.elim_hi;
    }
    bool operator<(const MonomialOrder& o) const {
        if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
        if (elim_lo != o.elim_lo) return elim_lo < o.elim_lo;
        return elim_hi < o.elim_hi;
    }
};

} // namespace fiberscope

#endif
