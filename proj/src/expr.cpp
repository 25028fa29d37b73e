#include "umbra/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

#include "umbra/errors.hpp"
#include "umbra/fps.hpp"
#include "umbra/operators.hpp"

namespace umbra {

bool operator==(const Ast& a, const Ast& b) {
    return a.kind == b.kind && a.value == b.value && a.var == b.var && a.args == b.args;
}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '^': k = Tok::caret; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            default:
                throw SyntaxError(start, {"number", "x", "D", "function", "operator"},
                                  std::string("'") + c + "'");
        }
        out.push_back({k, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    Ast parse_all() {
        Ast a = expr();
        if (peek().kind != Tok::end) fail({"operator", "end of input"});
        return a;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        throw SyntaxError(t.offset, std::move(expected), t.kind == Tok::end ? "end of input" : "'" + t.text + "'");
    }

    void expect(Tok k, const char* what) {
        if (peek().kind != k) fail({what});
        next();
    }

    static Ast binary(Ast::Kind k, Ast l, Ast r) {
        Ast a;
        a.kind = k;
        a.offset = l.offset;
        a.args.push_back(std::move(l));
        a.args.push_back(std::move(r));
        return a;
    }

    Ast expr() {
        Ast l = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            Ast::Kind k = next().kind == Tok::plus ? Ast::Kind::add : Ast::Kind::sub;
            l = binary(k, std::move(l), term());
        }
        return l;
    }

    Ast term() {
        Ast l = unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            Ast::Kind k = next().kind == Tok::star ? Ast::Kind::mul : Ast::Kind::div;
            l = binary(k, std::move(l), unary());
        }
        return l;
    }

    Ast unary() {
        if (peek().kind == Tok::minus) {
            Ast a;
            a.kind = Ast::Kind::neg;
            a.offset = next().offset;
            a.args.push_back(unary());
            return a;
        }
        return factor();
    }

    Ast factor() {
        Ast b = base();
        if (peek().kind != Tok::caret) return b;
        next();
        Ast a;
        a.kind = Ast::Kind::pow;
        a.offset = b.offset;
        a.value = exponent();
        a.args.push_back(std::move(b));
        return a;
    }

    Rat integer() {
        if (peek().kind != Tok::number) fail({"integer"});
        return Rat::parse(next().text);
    }

    Rat exponent() {
        Rat e;
        if (peek().kind == Tok::lparen) {
            next();
            bool neg = peek().kind == Tok::minus;
            if (neg) next();
            e = integer();
            if (peek().kind == Tok::slash) {
                next();
                std::size_t at = peek().offset;
                Rat d = integer();
                if (d.is_zero()) throw SyntaxError(at, {"nonzero denominator"}, "0");
                e /= d;
            }
            if (neg) e = -e;
            expect(Tok::rparen, "')'");
        } else {
            bool neg = peek().kind == Tok::minus;
            if (neg) next();
            if (peek().kind != Tok::number) fail({"integer", "'('"});
            e = integer();
            if (neg) e = -e;
        }
        if (peek().kind == Tok::caret) {
            next();
            std::size_t at = peek().offset;
            Rat outer = exponent();
            if (!outer.is_integer()) throw SyntaxError(at, {"integer exponent of an exponent"}, outer.to_string());
            if (e.is_zero() && outer.sign() < 0) throw SyntaxError(at, {"nonzero base"}, "0^" + outer.to_string());
            e = pow(e, outer.to_long());
        }
        return e;
    }

    Ast base() {
        const Token& t = peek();
        Ast a;
        a.offset = t.offset;
        switch (t.kind) {
            case Tok::number: {
                a.kind = Ast::Kind::number;
                a.value = integer();
                if (peek().kind == Tok::slash && peek(1).kind == Tok::number) {
                    next();
                    std::size_t at = peek().offset;
                    Rat d = integer();
                    if (d.is_zero()) throw SyntaxError(at, {"nonzero denominator"}, "0");
                    a.value /= d;
                }
                return a;
            }
            case Tok::ident: {
                std::string name = t.text;
                if (name == "x" || name == "D") {
                    next();
                    a.kind = Ast::Kind::variable;
                    a.var = name[0];
                    return a;
                }
                if (name == "exp") a.kind = Ast::Kind::exp;
                else if (name == "log") a.kind = Ast::Kind::log;
                else if (name == "sqrt") a.kind = Ast::Kind::sqrt;
                else fail({"x", "D", "exp", "log", "sqrt"});
                next();
                expect(Tok::lparen, "'('");
                a.args.push_back(expr());
                expect(Tok::rparen, "')'");
                return a;
            }
            case Tok::lparen: {
                next();
                Ast inner = expr();
                expect(Tok::rparen, "')'");
                return inner;
            }
            default: fail({"number", "x", "D", "'('", "function"});
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

std::string render_exponent(const Rat& e) {
    if (e.is_integer() && e.sign() >= 0) return e.to_string();
    return "(" + e.to_string() + ")";
}

Series eval_at(const Ast& a, std::size_t W) {
    try {
        switch (a.kind) {
            case Ast::Kind::number: return Series::constant(a.value, W);
            case Ast::Kind::variable: return Series::variable(W);
            case Ast::Kind::neg: return -eval_at(a.args[0], W);
            case Ast::Kind::add: return eval_at(a.args[0], W) + eval_at(a.args[1], W);
            case Ast::Kind::sub: return eval_at(a.args[0], W) - eval_at(a.args[1], W);
            case Ast::Kind::mul: return eval_at(a.args[0], W) * eval_at(a.args[1], W);
            case Ast::Kind::div: {
                Series num = eval_at(a.args[0], W);
                Series den = eval_at(a.args[1], W);
                return divide(ShiftOp(num), ShiftOp(den)).indicator();
            }
            case Ast::Kind::pow: {
                Series b = eval_at(a.args[0], W);
                const Rat& e = a.value;
                if (!e.is_integer()) return pow_rat(b, e);
                if (e.sign() >= 0) return pow_int(b, e.to_long());
                Series p = pow_int(b, -e.to_long());
                return divide(ShiftOp(Series::one(p.trunc())), ShiftOp(p)).indicator();
            }
            case Ast::Kind::exp: return exp_series(eval_at(a.args[0], W));
            case Ast::Kind::log: return log_series(eval_at(a.args[0], W));
            case Ast::Kind::sqrt: return pow_rat(eval_at(a.args[0], W), Rat(1, 2));
        }
    } catch (Error& e) {
        if (!e.offset()) e.set_offset(a.offset);
        throw;
    }
    throw std::logic_error("unhandled expression node");
}

}  // namespace

Ast parse(std::string_view src) { return Parser(src).parse_all(); }

std::string render(const Ast& a) {
    auto wrap = [](const Ast& c) { return "(" + render(c) + ")"; };
    switch (a.kind) {
        case Ast::Kind::number: return a.value.is_integer() ? a.value.to_string() : "(" + a.value.to_string() + ")";
        case Ast::Kind::variable: return std::string(1, a.var);
        case Ast::Kind::neg: return "-" + wrap(a.args[0]);
        case Ast::Kind::add: return wrap(a.args[0]) + "+" + wrap(a.args[1]);
        case Ast::Kind::sub: return wrap(a.args[0]) + "-" + wrap(a.args[1]);
        case Ast::Kind::mul: return wrap(a.args[0]) + "*" + wrap(a.args[1]);
        case Ast::Kind::div: return wrap(a.args[0]) + "/" + wrap(a.args[1]);
        case Ast::Kind::pow: return wrap(a.args[0]) + "^" + render_exponent(a.value);
        case Ast::Kind::exp: return "exp" + wrap(a.args[0]);
        case Ast::Kind::log: return "log" + wrap(a.args[0]);
        case Ast::Kind::sqrt: return "sqrt" + wrap(a.args[0]);
    }
    return "";
}

namespace {

Series eval_to(const Ast& ast, std::size_t order) {
    std::size_t W = order;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Series s = eval_at(ast, W);
        if (s.trunc() >= order) return s.truncated(order);
        W += order - s.trunc();
    }
    throw TruncationError("expression loses too many terms to reach trunc " + std::to_string(order));
}

}  // namespace

Series eval(const Ast& ast, std::size_t order) {
    if (order > kMaxOrder)
        throw std::invalid_argument("order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
    return eval_to(ast, order);
}

Series eval(std::string_view src, std::size_t order) { return eval(parse(src), order); }

namespace {

// Degree bound when the expression is visibly a polynomial, otherwise nullopt.
std::optional<std::size_t> degree_bound(const Ast& a) {
    switch (a.kind) {
        case Ast::Kind::number: return 0;
        case Ast::Kind::variable: return 1;
        case Ast::Kind::neg: return degree_bound(a.args[0]);
        case Ast::Kind::add:
        case Ast::Kind::sub: {
            auto l = degree_bound(a.args[0]), r = degree_bound(a.args[1]);
            if (!l || !r) return std::nullopt;
            return std::max(*l, *r);
        }
        case Ast::Kind::mul: {
            auto l = degree_bound(a.args[0]), r = degree_bound(a.args[1]);
            if (!l || !r) return std::nullopt;
            return *l + *r;
        }
        case Ast::Kind::div: {
            auto l = degree_bound(a.args[0]), r = degree_bound(a.args[1]);
            if (!l || r != std::size_t{0}) return std::nullopt;
            return l;
        }
        case Ast::Kind::pow: {
            auto b = degree_bound(a.args[0]);
            if (!b) return std::nullopt;
            if (*b == 0) return 0;
            if (!a.value.is_integer() || a.value.sign() < 0) return std::nullopt;
            return *b * static_cast<std::size_t>(a.value.to_long());
        }
        case Ast::Kind::exp:
        case Ast::Kind::log:
        case Ast::Kind::sqrt:
            if (degree_bound(a.args[0]) == std::size_t{0}) return 0;
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

Poly eval_poly(std::string_view src, std::size_t max_degree) {
    Ast ast = parse(src);
    auto bound = degree_bound(ast);
    if (!bound) throw OrderError("expression is not a polynomial");
    Series s = eval_to(ast, *bound);
    Poly p(std::vector<Rat>(s.coeffs().begin(), s.coeffs().end()));
    if (p.degree() > static_cast<std::ptrdiff_t>(max_degree))
        throw TruncationError("polynomial of degree " + std::to_string(p.degree()) + " exceeds the limit " +
                              std::to_string(max_degree));
    return p;
}

}  // namespace umbra
