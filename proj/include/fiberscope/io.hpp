// Input-file grammar (`field ...`, `degree d`, `f0..f3 <expr>`) and a
// recursive-descent expression parser over X1..X3 with line/column
// diagnostics.
#ifndef FIBERSCOPE_IO_HPP
#define FIBERSCOPE_IO_HPP

#include <cctype>

#include "syzygy.hpp"

namespace fiberscope {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) +
                             ": " + msg),
          line(l), column(c) {}
};

struct InputSpec {
    bool rational = true;
    uint64_t prime = 0;
    int degree = 0;
    std::array<std::string, 4> exprs{};
    std::array<bool, 4> have{false, false, false, false};
};

namespace detail {

struct Token {
    enum class Kind { integer, variable, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    long long value = 0; // integer
    int var = -1;        // variable index
    int column = 0;
};

template <class F>
class ExprParser {
public:
    ExprParser(const std::string& text, const F& field, const CtxPtr& ctx, int line)
        : text_(text), field_(field), ctx_(ctx), line_(line) {
        tokenize();
    }

    Polynomial<F> parse() {
        auto p = parse_expr();
        if (peek().kind != Token::Kind::end)
            throw ParseError(line_, peek().column, "unexpected trailing input");
        return p;
    }

private:
    const std::string& text_;
    const F& field_;
    const CtxPtr& ctx_;
    int line_;
    std::vector<Token> toks_;
    size_t pos_ = 0;

    void tokenize() {
        size_t i = 0;
        while (i < text_.size()) {
            char c = text_[i];
            int col = static_cast<int>(i) + 1;
            if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t j = i;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
                if (j - i > 18) throw ParseError(line_, col, "integer literal too large");
                toks_.push_back({Token::Kind::integer, std::stoll(text_.substr(i, j - i)), -1, col});
                i = j;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                size_t j = i;
                while (j < text_.size() &&
                       std::isalnum(static_cast<unsigned char>(text_[j]))) ++j;
                std::string name = text_.substr(i, j - i);
                int var = -1;
                for (int v = 0; v < ctx_->nvars(); ++v)
                    if (ctx_->names[static_cast<size_t>(v)] == name) var = v;
                if (var < 0) throw ParseError(line_, col, "unknown variable '" + name + "'");
                toks_.push_back({Token::Kind::variable, 0, var, col});
                i = j;
                continue;
            }
            Token::Kind k;
            switch (c) {
            case '+': k = Token::Kind::plus; break;
            case '-': k = Token::Kind::minus; break;
            case '*': k = Token::Kind::star; break;
            case '^': k = Token::Kind::caret; break;
            case '(': k = Token::Kind::lparen; break;
            case ')': k = Token::Kind::rparen; break;
            default:
                throw ParseError(line_, col, std::string("unexpected character '") + c + "'");
            }
            toks_.push_back({k, 0, -1, col});
            ++i;
        }
        toks_.push_back({Token::Kind::end, 0, -1, static_cast<int>(text_.size()) + 1});
    }

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    Polynomial<F> parse_expr() {
        bool negate = false;
        if (peek().kind == Token::Kind::minus) { next(); negate = true; }
        else if (peek().kind == Token::Kind::plus) { next(); }
        auto acc = parse_term();
        if (negate) acc = -acc;
        while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
            bool minus = (next().kind == Token::Kind::minus);
            auto t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial<F> parse_term() {
        auto acc = parse_factor();
        while (peek().kind == Token::Kind::star) {
            next();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial<F> parse_factor() {
        auto base = parse_base();
        if (peek().kind == Token::Kind::caret) {
            next();
            if (peek().kind != Token::Kind::integer)
                throw ParseError(line_, peek().column, "exponent must be an integer literal");
            long long e = next().value;
            if (e < 0 || e > 60) throw ParseError(line_, peek().column, "exponent out of range");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial<F> parse_base() {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::integer:
            return Polynomial<F>::constant(field_, ctx_, field_.from_int(next().value));
        case Token::Kind::variable:
            return Polynomial<F>::variable(field_, ctx_, next().var);
        case Token::Kind::lparen: {
            next();
            auto p = parse_expr();
            if (peek().kind != Token::Kind::rparen)
                throw ParseError(line_, peek().column, "expected ')'");
            next();
            return p;
        }
        case Token::Kind::minus: {
            next();
            return -parse_base();
        }
        default:
            throw ParseError(line_, t.column, "expected a number, variable or '('");
        }
    }
};

} // namespace detail

template <class F>
Polynomial<F> parse_polynomial(const std::string& text, const F& field, const CtxPtr& ctx,
                               int line = 0) {
    return detail::ExprParser<F>(text, field, ctx, line).parse();
}

/// Parse the declarative input format. Field/degree lines must precede use;
/// `#` starts a comment; exactly f0..f3 are accepted.
inline InputSpec parse_input(const std::string& text) {
    InputSpec spec;
    bool have_field = false, have_degree = false;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "field") {
            std::string kind;
            if (!(ls >> kind)) throw ParseError(line_no, 1, "expected 'rational' or 'prime <p>'");
            if (kind == "rational") {
                spec.rational = true;
            } else if (kind == "prime") {
                unsigned long long p = 0;
                if (!(ls >> p)) throw ParseError(line_no, 1, "expected a prime after 'prime'");
                spec.rational = false;
                spec.prime = p;
            } else {
                throw ParseError(line_no, 1, "unknown field kind '" + kind + "'");
            }
            have_field = true;
        } else if (head == "degree") {
            if (!(ls >> spec.degree) || spec.degree < 1)
                throw ParseError(line_no, 1, "expected a positive degree");
            have_degree = true;
        } else if (head.size() == 2 && head[0] == 'f' && head[1] >= '0' && head[1] <= '3') {
            int i = head[1] - '0';
            std::string expr;
            std::getline(ls, expr);
            if (expr.find_first_not_of(" \t") == std::string::npos)
                throw ParseError(line_no, 1, "empty polynomial expression for " + head);
            spec.exprs[static_cast<size_t>(i)] = expr;
            spec.have[static_cast<size_t>(i)] = true;
        } else {
            throw ParseError(line_no, 1, "unknown directive '" + head + "'");
        }
    }
    if (!have_field) throw ParseError(line_no, 1, "missing 'field' line");
    if (!have_degree) throw ParseError(line_no, 1, "missing 'degree' line");
    for (int i = 0; i < 4; ++i)
        if (!spec.have[static_cast<size_t>(i)])
            throw ParseError(line_no, 1, "missing polynomial f" + std::to_string(i));
    return spec;
}

/// Build the parameterization, enforcing homogeneity and the declared degree.
template <class F>
Parameterization<F> make_parameterization(const InputSpec& spec, const F& field) {
    CtxPtr ctx = make_x_context();
    std::array<Polynomial<F>, 4> fs{
        Polynomial<F>::zero(field, ctx), Polynomial<F>::zero(field, ctx),
        Polynomial<F>::zero(field, ctx), Polynomial<F>::zero(field, ctx)};
    for (int i = 0; i < 4; ++i) {
        auto p = parse_polynomial(spec.exprs[static_cast<size_t>(i)], field, ctx, i);
        if (!p.is_homogeneous() || (!p.is_zero() && p.degree() != spec.degree))
            throw std::invalid_argument("f" + std::to_string(i) +
                                        " is not homogeneous of the declared degree");
        fs[static_cast<size_t>(i)] = std::move(p);
    }
    auto phi = Parameterization<F>::make(field, ctx, std::move(fs));
    if (phi.d != spec.degree)
        throw std::invalid_argument("declared degree does not match the forms");
    return phi;
}

/// Parse a colon-separated projective point such as "1:0:1:0" or "1:2/3:0:1"
/// (rationals only in the rational field).
template <class F>
ProjectivePoint<F> parse_point(const std::string& text, const F& field) {
    std::array<typename F::Elem, 4> coords{field.zero(), field.zero(), field.zero(),
                                           field.zero()};
    std::istringstream is(text);
    std::string part;
    int i = 0;
    while (std::getline(is, part, ':')) {
        if (i >= 4) throw std::invalid_argument("point has more than four coordinates");
        bool neg = !part.empty() && part[0] == '-';
        std::string body = neg ? part.substr(1) : part;
        auto slash = body.find('/');
        typename F::Elem v = field.zero();
        if (slash == std::string::npos) {
            if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad point coordinate '" + part + "'");
            v = field.from_int(std::stoll(body));
        } else {
            auto num = body.substr(0, slash), den = body.substr(slash + 1);
            if (num.empty() || den.empty() ||
                num.find_first_not_of("0123456789") != std::string::npos ||
                den.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad point coordinate '" + part + "'");
            v = field.div(field.from_int(std::stoll(num)), field.from_int(std::stoll(den)));
        }
        if (neg) v = field.neg(v);
        coords[static_cast<size_t>(i)] = v;
        ++i;
    }
    if (i != 4) throw std::invalid_argument("point needs exactly four coordinates");
    return ProjectivePoint<F>(field, coords);
}

} // namespace fiberscope

#endif
