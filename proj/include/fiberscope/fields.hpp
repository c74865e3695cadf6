// Exact coefficient fields: the rationals, prime fields F_p, and small
// extensions F_{p^e} used by the exhaustive point scanner.
#ifndef FIBERSCOPE_FIELDS_HPP
#define FIBERSCOPE_FIELDS_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiberscope {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Field of rational numbers with arbitrary-precision coefficients.
/// mpq_rational keeps values canonical (lowest terms, positive denominator).
struct Rationals {
    using Elem = Rat;

    static constexpr bool is_finite = false;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("Rationals: inverse of zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string to_string(const Elem& a) const { return a.str(); }
    bool operator==(const Rationals&) const { return true; }
};

namespace detail {
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}
} // namespace detail

/// Prime field F_p, p an odd prime below 2^31 so products fit in 64 bits.
struct PrimeField {
    using Elem = uint64_t;

    static constexpr bool is_finite = true;

    uint64_t p = 0;

    PrimeField() = default;
    explicit PrimeField(uint64_t modulus) : p(modulus) {
        if (p < 3 || p >= (uint64_t(1) << 31) || !detail::is_prime_u64(p))
            throw std::invalid_argument("PrimeField: modulus must be an odd prime < 2^31");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended Euclid on (a, p)
        int64_t t = 0, newt = 1;
        int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a);
        while (newr != 0) {
            int64_t q = r / newr;
            t -= q * newt; std::swap(t, newt);
            r -= q * newr; std::swap(r, newr);
        }
        if (t < 0) t += static_cast<int64_t>(p);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string to_string(Elem a) const { return std::to_string(a); }
    bool operator==(const PrimeField& o) const { return p == o.p; }
};

/// F_{p^e} represented as F_p[t] modulo a fixed monic irreducible of degree e.
/// Elements are coefficient vectors of length e (constant term first).
struct ExtensionField {
    using Elem = std::vector<uint64_t>;

    static constexpr bool is_finite = true;

    PrimeField base;
    std::vector<uint64_t> modpoly; // monic, length e+1, modpoly[e] == 1

    ExtensionField() = default;
    ExtensionField(PrimeField b, std::vector<uint64_t> m) : base(b), modpoly(std::move(m)) {}

    int ext_degree() const { return static_cast<int>(modpoly.size()) - 1; }

    /// Deterministic choice: the first monic irreducible of degree e under
    /// lexicographic enumeration of the low coefficients.
    static ExtensionField make(uint64_t p, int e) {
        PrimeField k(p);
        if (e < 1) throw std::invalid_argument("ExtensionField: degree must be >= 1");
        std::vector<uint64_t> m(static_cast<size_t>(e) + 1, 0);
        m[static_cast<size_t>(e)] = 1;
        if (e == 1) { return ExtensionField(k, m); } // t itself; F_{p^1} = F_p
        while (true) {
            if (irreducible(k, m)) return ExtensionField(k, m);
            // increment the low e coefficients as a base-p counter
            int i = 0;
            while (i < e && ++m[static_cast<size_t>(i)] == p) { m[static_cast<size_t>(i)] = 0; ++i; }
            if (i == e) throw std::runtime_error("ExtensionField: no irreducible found");
        }
    }

    Elem zero() const { return Elem(static_cast<size_t>(ext_degree()), 0); }
    Elem one() const { Elem r = zero(); r[0] = 1; return r; }
    Elem from_int(long long v) const { Elem r = zero(); r[0] = base.from_int(v); return r; }
    Elem from_base(uint64_t v) const { Elem r = zero(); r[0] = v % base.p; return r; }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (size_t i = 0; i < r.size(); ++i) r[i] = base.add(r[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (size_t i = 0; i < r.size(); ++i) r[i] = base.sub(r[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& c : r) c = base.neg(c);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        const int e = ext_degree();
        std::vector<uint64_t> prod(static_cast<size_t>(2 * e - 1), 0);
        for (int i = 0; i < e; ++i) {
            if (a[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < e; ++j)
                prod[static_cast<size_t>(i + j)] =
                    base.add(prod[static_cast<size_t>(i + j)],
                             base.mul(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]));
        }
        // reduce modulo the monic modpoly
        for (int i = 2 * e - 2; i >= e; --i) {
            uint64_t c = prod[static_cast<size_t>(i)];
            if (c == 0) continue;
            prod[static_cast<size_t>(i)] = 0;
            for (int j = 0; j < e; ++j)
                prod[static_cast<size_t>(i - e + j)] =
                    base.sub(prod[static_cast<size_t>(i - e + j)],
                             base.mul(c, modpoly[static_cast<size_t>(j)]));
        }
        prod.resize(static_cast<size_t>(e));
        return prod;
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("ExtensionField: inverse of zero");
        // extended Euclid in F_p[t] on (a, modpoly)
        std::vector<uint64_t> r0 = modpoly, r1 = a, s0 = {0}, s1 = {1};
        trim(r1);
        while (!r1.empty()) {
            auto [q, r2] = updivmod(r0, r1);
            auto s2 = upsub(s0, upmul(q, s1));
            r0 = std::move(r1); r1 = std::move(r2);
            s0 = std::move(s1); s1 = std::move(s2);
        }
        // r0 is a nonzero constant gcd
        uint64_t c = base.inv(r0[0]);
        Elem out = zero();
        for (size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = base.mul(s0[i], c);
        return out;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const {
        for (auto c : a) if (c != 0) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string to_string(const Elem& a) const {
        std::string s = "[";
        for (size_t i = 0; i < a.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s + "]";
    }
    bool operator==(const ExtensionField& o) const {
        return base == o.base && modpoly == o.modpoly;
    }

    /// Canonical integer encoding for deterministic point enumeration.
    uint64_t encode(const Elem& a) const {
        uint64_t v = 0;
        for (size_t i = a.size(); i-- > 0;) v = v * base.p + a[i];
        return v;
    }
    Elem decode(uint64_t v) const {
        Elem r = zero();
        for (size_t i = 0; i < r.size(); ++i) { r[i] = v % base.p; v /= base.p; }
        return r;
    }
    uint64_t order() const {
        uint64_t q = 1;
        for (int i = 0; i < ext_degree(); ++i) q *= base.p;
        return q;
    }

private:
    // dense univariate helpers over F_p, little-endian, trimmed
    static void trim(std::vector<uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    std::vector<uint64_t> upmul(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) const {
        if (a.empty() || b.empty()) return {};
        std::vector<uint64_t> r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = base.add(r[i + j], base.mul(a[i], b[j]));
        trim(r);
        return r;
    }
    std::vector<uint64_t> upsub(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) const {
        std::vector<uint64_t> r = a;
        if (r.size() < b.size()) r.resize(b.size(), 0);
        for (size_t i = 0; i < b.size(); ++i) r[i] = base.sub(r[i], b[i]);
        trim(r);
        return r;
    }
    std::pair<std::vector<uint64_t>, std::vector<uint64_t>>
    updivmod(std::vector<uint64_t> a, const std::vector<uint64_t>& b) const {
        trim(a);
        std::vector<uint64_t> q;
        if (a.size() < b.size()) return {q, a};
        q.assign(a.size() - b.size() + 1, 0);
        uint64_t linv = base.inv(b.back());
        for (int i = static_cast<int>(a.size() - b.size()); i >= 0; --i) {
            uint64_t c = base.mul(a[static_cast<size_t>(i) + b.size() - 1], linv);
            if (c != 0) {
                q[static_cast<size_t>(i)] = c;
                for (size_t j = 0; j < b.size(); ++j)
                    a[static_cast<size_t>(i) + j] = base.sub(a[static_cast<size_t>(i) + j], base.mul(c, b[j]));
            }
        }
        trim(a);
        return {q, a};
    }

    static bool irreducible(const PrimeField& k, const std::vector<uint64_t>& m) {
        const int e = static_cast<int>(m.size()) - 1;
        // no roots rules out linear factors; enough for e = 2, 3
        for (uint64_t x = 0; x < k.p; ++x) {
            uint64_t v = 0;
            for (size_t i = m.size(); i-- > 0;) v = (v * x + m[i]) % k.p;
            if (v == 0) return false;
        }
        if (e <= 3) return true;
        // trial division by monic polynomials of degree 2..e/2
        ExtensionField tmp(k, m);
        for (int dd = 2; dd <= e / 2; ++dd) {
            uint64_t count = 1;
            for (int i = 0; i < dd; ++i) count *= k.p;
            for (uint64_t code = 0; code < count; ++code) {
                std::vector<uint64_t> g(static_cast<size_t>(dd) + 1, 0);
                uint64_t v = code;
                for (int i = 0; i < dd; ++i) { g[static_cast<size_t>(i)] = v % k.p; v /= k.p; }
                g[static_cast<size_t>(dd)] = 1;
                auto rem = tmp.updivmod(m, g).second;
                if (rem.empty()) return false;
            }
        }
        return true;
    }
};

} // namespace fiberscope

#endif
