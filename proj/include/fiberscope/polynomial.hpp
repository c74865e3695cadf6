// Sparse multivariate polynomials with exact coefficients over a field F,
// plus projective points of P^3 and specialization of the lambda block.
#ifndef FIBERSCOPE_POLYNOMIAL_HPP
#define FIBERSCOPE_POLYNOMIAL_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "fields.hpp"
#include "monomial.hpp"

namespace fiberscope {

template <class F>
class Polynomial;

/// Point of P^3 with exact coordinates, kept in the canonical representative
/// whose first nonzero coordinate is 1.
template <class F>
struct ProjectivePoint {
    F field;
    std::array<typename F::Elem, 4> coords;

    ProjectivePoint(F f, std::array<typename F::Elem, 4> c) : field(f), coords(std::move(c)) {
        normalize();
    }

    void normalize() {
        for (auto& c : coords) {
            if (!field.is_zero(c)) {
                auto s = field.inv(c);
                for (auto& x : coords) x = field.mul(x, s);
                return;
            }
        }
        throw std::invalid_argument("ProjectivePoint: all coordinates are zero");
    }

    bool operator==(const ProjectivePoint& o) const {
        for (int i = 0; i < 4; ++i)
            if (!field.eq(coords[static_cast<size_t>(i)], o.coords[static_cast<size_t>(i)])) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < 4; ++i) {
            if (i) s += ":";
            s += field.to_string(coords[static_cast<size_t>(i)]);
        }
        return s;
    }
};

/// Sparse polynomial; terms are kept grevlex-descending with no zero
/// coefficients and no duplicate monomials.
template <class F>
class Polynomial {
public:
    using Elem = typename F::Elem;
    using Term = std::pair<Monomial, Elem>;

    Polynomial() = default;
    Polynomial(F field, CtxPtr ctx) : field_(std::move(field)), ctx_(std::move(ctx)) {}

    static Polynomial zero(const F& f, const CtxPtr& c) { return Polynomial(f, c); }
    static Polynomial constant(const F& f, const CtxPtr& c, Elem v) {
        Polynomial p(f, c);
        if (!f.is_zero(v)) p.terms_.push_back({Monomial::one(), std::move(v)});
        return p;
    }
    static Polynomial variable(const F& f, const CtxPtr& c, int i, uint16_t k = 1) {
        if (i < 0 || i >= c->nvars()) throw std::out_of_range("variable index");
        Polynomial p(f, c);
        if (k > 0) p.terms_.push_back({Monomial::var(i, k), f.one()});
        else p.terms_.push_back({Monomial::one(), f.one()});
        return p;
    }
    static Polynomial from_terms(const F& f, const CtxPtr& c, std::vector<Term> ts) {
        Polynomial p(f, c);
        p.terms_ = std::move(ts);
        p.canonicalize();
        return p;
    }

    const F& field() const { return field_; }
    const CtxPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.deg == 0);
    }
    size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.deg));
        return d;
    }
    int degree_in(int var) const {
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.e[static_cast<size_t>(var)]));
        return d;
    }
    bool involves(int var) const {
        for (const auto& t : terms_)
            if (t.first.e[static_cast<size_t>(var)] > 0) return true;
        return false;
    }

    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.first.deg != terms_[0].first.deg) return false;
        return true;
    }
    /// Checks bihomogeneity with respect to the (lambda, X) block split;
    /// reports the bidegree of a nonzero bihomogeneous polynomial.
    bool is_bihomogeneous(int* xdeg = nullptr, int* ldeg = nullptr) const {
        const int lb = ctx_->lambda_count, n = ctx_->nvars();
        if (terms_.empty()) return true;
        uint32_t l0 = terms_[0].first.degree_range(0, lb);
        uint32_t x0 = terms_[0].first.deg - l0;
        for (const auto& t : terms_) {
            uint32_t l = t.first.degree_range(0, lb);
            if (l != l0 || t.first.deg - l != x0) return false;
        }
        (void)n;
        if (xdeg) *xdeg = static_cast<int>(x0);
        if (ldeg) *ldeg = static_cast<int>(l0);
        return true;
    }

    const Term& leading_term() const { return terms_.front(); } // canonical grevlex
    /// Leading term under an arbitrary monomial order (linear scan).
    const Term& leading_term(const MonomialOrder& ord) const {
        const int n = ctx_->nvars();
        size_t best = 0;
        for (size_t i = 1; i < terms_.size(); ++i)
            if (ord.cmp(terms_[i].first, terms_[best].first, n) > 0) best = i;
        return terms_[best];
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.second = field_.neg(t.second);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_ctx(o);
        Polynomial r(field_, ctx_);
        merge_into(r.terms_, terms_, o.terms_, field_, ctx_->nvars(), field_.one());
        return r;
    }
    Polynomial operator-(const Polynomial& o) const {
        check_ctx(o);
        Polynomial r(field_, ctx_);
        merge_into(r.terms_, terms_, o.terms_, field_, ctx_->nvars(), field_.neg(field_.one()));
        return r;
    }
    Polynomial operator*(const Polynomial& o) const {
        check_ctx(o);
        Polynomial r(field_, ctx_);
        if (is_zero() || o.is_zero()) return r;
        r.terms_.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_)
                r.terms_.push_back({a.first * b.first, field_.mul(a.second, b.second)});
        r.canonicalize();
        return r;
    }

    Polynomial scaled(const Elem& c) const {
        Polynomial r(field_, ctx_);
        if (field_.is_zero(c)) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second = field_.mul(t.second, c);
        return r;
    }
    Polynomial mono_multiple(const Monomial& m) const {
        Polynomial r(field_, ctx_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.first = t.first * m;
        return r;
    }

    /// this + c * (m * o), the reduction workhorse; all orders in play are
    /// monomial orders so the shift preserves sortedness.
    Polynomial axpy(const Elem& c, const Monomial& m, const Polynomial& o) const {
        check_ctx(o);
        Polynomial r(field_, ctx_);
        std::vector<Term> shifted;
        shifted.reserve(o.terms_.size());
        for (const auto& t : o.terms_) shifted.push_back({t.first * m, field_.mul(t.second, c)});
        merge_sorted(r.terms_, terms_, shifted, field_, ctx_->nvars());
        return r;
    }

    Polynomial pow(unsigned k) const {
        Polynomial r = constant(field_, ctx_, field_.one());
        Polynomial b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    /// Divide every coefficient so the grevlex-leading coefficient becomes 1.
    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(terms_.front().second));
    }

    Elem evaluate(const std::vector<Elem>& point) const {
        Elem acc = field_.zero();
        for (const auto& t : terms_) {
            Elem v = t.second;
            for (int i = 0; i < ctx_->nvars(); ++i)
                for (uint16_t k = 0; k < t.first.e[static_cast<size_t>(i)]; ++k)
                    v = field_.mul(v, point[static_cast<size_t>(i)]);
            acc = field_.add(acc, v);
        }
        return acc;
    }

    Polynomial derivative(int var) const {
        Polynomial r(field_, ctx_);
        for (const auto& t : terms_) {
            uint16_t k = t.first.e[static_cast<size_t>(var)];
            if (k == 0) continue;
            Monomial m = t.first;
            m.e[static_cast<size_t>(var)] = static_cast<uint16_t>(k - 1);
            m.deg -= 1;
            r.terms_.push_back({m, field_.mul(t.second, field_.from_int(k))});
        }
        r.canonicalize();
        return r;
    }

    /// Substitute one variable by a constant (context unchanged).
    Polynomial substitute(int var, const Elem& value) const {
        Polynomial r(field_, ctx_);
        for (const auto& t : terms_) {
            uint16_t k = t.first.e[static_cast<size_t>(var)];
            Elem c = t.second;
            for (uint16_t i = 0; i < k; ++i) c = field_.mul(c, value);
            if (field_.is_zero(c)) continue;
            Monomial m = t.first;
            m.e[static_cast<size_t>(var)] = 0;
            m.deg -= k;
            r.terms_.push_back({m, c});
        }
        r.canonicalize();
        return r;
    }

    /// Substitute the lambda block by the coordinates of a point of P^3;
    /// the result lives in the given X-only context. A ring homomorphism.
    Polynomial specialize(const ProjectivePoint<F>& pt, const CtxPtr& xctx) const {
        if (ctx_->lambda_count != 4)
            throw std::invalid_argument("specialize: context has no lambda block");
        Polynomial r(field_, xctx);
        const int lb = ctx_->lambda_count;
        for (const auto& t : terms_) {
            Elem c = t.second;
            for (int i = 0; i < lb; ++i)
                for (uint16_t k = 0; k < t.first.e[static_cast<size_t>(i)]; ++k)
                    c = field_.mul(c, pt.coords[static_cast<size_t>(i)]);
            if (field_.is_zero(c)) continue;
            Monomial m;
            for (int i = lb; i < ctx_->nvars(); ++i) {
                m.e[static_cast<size_t>(i - lb)] = t.first.e[static_cast<size_t>(i)];
                m.deg += t.first.e[static_cast<size_t>(i)];
            }
            r.terms_.push_back({m, c});
        }
        r.canonicalize();
        return r;
    }

    /// Embed an X-only polynomial into a mixed context (indices shift past
    /// the lambda block).
    Polynomial lift_to_mixed(const CtxPtr& mixed) const {
        if (ctx_->lambda_count != 0 || mixed->lambda_count != 4)
            throw std::invalid_argument("lift_to_mixed: context mismatch");
        Polynomial r(field_, mixed);
        const int lb = mixed->lambda_count;
        r.terms_ = terms_;
        for (auto& t : r.terms_) {
            Monomial m;
            for (int i = 0; i < ctx_->nvars(); ++i)
                m.e[static_cast<size_t>(i + lb)] = t.first.e[static_cast<size_t>(i)];
            m.deg = t.first.deg;
            t.first = m;
        }
        r.canonicalize();
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (!same_context(ctx_, o.ctx_) || !(field_ == o.field_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].first != o.terms_[i].first ||
                !field_.eq(terms_[i].second, o.terms_[i].second))
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& t : terms_) {
            std::string c = field_.to_string(t.second);
            bool negative = !c.empty() && c[0] == '-';
            if (first) {
                if (negative) { s += "-"; c = c.substr(1); }
            } else {
                s += negative ? "-" : "+";
                if (negative) c = c.substr(1);
            }
            first = false;
            std::string mono = mono_str(t.first);
            if (mono.empty()) {
                s += c;
            } else if (c == "1") {
                s += mono;
            } else {
                s += c + "*" + mono;
            }
        }
        return s;
    }

    /// Re-sorts terms under the canonical grevlex order, merging duplicates
    /// and dropping zeros. Public so low-level builders can fix up raw lists.
    void canonicalize() {
        const int n = ctx_->nvars();
        MonomialOrder ord = MonomialOrder::grevlex();
        std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
            return ord.cmp(a.first, b.first, n) > 0;
        });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first) {
                out.back().second = field_.add(out.back().second, t.second);
                if (field_.is_zero(out.back().second)) out.pop_back();
            } else if (!field_.is_zero(t.second)) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

private:
    F field_{};
    CtxPtr ctx_{};
    std::vector<Term> terms_{};

    void check_ctx(const Polynomial& o) const {
        if (!same_context(ctx_, o.ctx_) || !(field_ == o.field_))
            throw std::invalid_argument("polynomial context mismatch");
    }

    std::string mono_str(const Monomial& m) const {
        std::string s;
        for (int i = 0; i < ctx_->nvars(); ++i) {
            uint16_t k = m.e[static_cast<size_t>(i)];
            if (k == 0) continue;
            if (!s.empty()) s += "*";
            s += ctx_->names[static_cast<size_t>(i)];
            if (k > 1) s += "^" + std::to_string(k);
        }
        return s;
    }

    static void merge_into(std::vector<Term>& out, const std::vector<Term>& a,
                           const std::vector<Term>& b, const F& f, int n, const typename F::Elem& scale) {
        std::vector<Term> bs;
        bs.reserve(b.size());
        for (const auto& t : b) bs.push_back({t.first, f.mul(t.second, scale)});
        merge_sorted(out, a, bs, f, n);
    }

    static void merge_sorted(std::vector<Term>& out, const std::vector<Term>& a,
                             const std::vector<Term>& b, const F& f, int n) {
        MonomialOrder ord = MonomialOrder::grevlex();
        out.clear();
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            int c = ord.cmp(a[i].first, b[j].first, n);
            if (c > 0) {
                out.push_back(a[i++]);
            } else if (c < 0) {
                out.push_back(b[j++]);
            } else {
                auto s = f.add(a[i].second, b[j].second);
                if (!f.is_zero(s)) out.push_back({a[i].first, std::move(s)});
                ++i; ++j;
            }
        }
        while (i < a.size()) out.push_back(a[i++]);
        while (j < b.size()) out.push_back(b[j++]);
    }
};

/// Map a prime-field polynomial into an extension of the same prime field.
inline Polynomial<ExtensionField> lift_coefficients(const Polynomial<PrimeField>& p,
                                                    const ExtensionField& ext) {
    if (!(p.field() == ext.base))
        throw std::invalid_argument("lift_coefficients: base field mismatch");
    std::vector<typename Polynomial<ExtensionField>::Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) ts.push_back({t.first, ext.from_base(t.second)});
    return Polynomial<ExtensionField>::from_terms(ext, p.context(), std::move(ts));
}

/// Content/sign normalization: over Q rescale to primitive integer
/// coefficients with positive leading coefficient; over a finite field make
/// the polynomial monic. Keeps intermediate results small and canonical.
template <class F>
inline Polynomial<F> scalar_normalized(const Polynomial<F>& p) {
    if (p.is_zero()) return p;
    if constexpr (std::is_same_v<F, Rationals>) {
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& t : p.terms()) {
            num_gcd = boost::multiprecision::gcd(num_gcd, Int(boost::multiprecision::numerator(t.second)));
            den_lcm = boost::multiprecision::lcm(den_lcm, Int(boost::multiprecision::denominator(t.second)));
        }
        Rat scale(den_lcm, num_gcd);
        if (p.terms().front().second < 0) scale = -scale;
        return p.scaled(scale);
    } else {
        return p.monic();
    }
}

} // namespace fiberscope

#endif
