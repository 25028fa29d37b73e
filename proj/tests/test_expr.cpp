#include <doctest.h>

#include <stdexcept>

#include "frozen.hpp"
#include "oracles.hpp"
#include "umbra/errors.hpp"
#include "umbra/expr.hpp"
#include "umbra/fps.hpp"

using namespace umbra;
using oracle::from_strings;

namespace {

Ast num(long v) {
    Ast a;
    a.value = Rat(v);
    return a;
}

Ast var(char c) {
    Ast a;
    a.kind = Ast::Kind::variable;
    a.var = c;
    return a;
}

Ast node(Ast::Kind k, std::vector<Ast> args, Rat value = Rat()) {
    Ast a;
    a.kind = k;
    a.args = std::move(args);
    a.value = value;
    return a;
}

Series from(const std::vector<std::string>& v, std::size_t N) {
    Series s(N);
    for (std::size_t i = 0; i <= N; ++i) s[i] = Rat::parse(v[i]);
    return s;
}

// Random expression source text; every leaf is evaluable.
std::string random_expr(oracle::Gen& g, int depth) {
    if (depth == 0 || g.integer(0, 3) == 0) {
        switch (g.integer(0, 2)) {
            case 0: return std::to_string(g.integer(0, 9));
            case 1: return std::to_string(g.integer(1, 9)) + "/" + std::to_string(g.integer(1, 9));
            default: return g.integer(0, 1) ? "x" : "D";
        }
    }
    std::string a = random_expr(g, depth - 1), b = random_expr(g, depth - 1);
    switch (g.integer(0, 6)) {
        case 0: return a + "+" + b;
        case 1: return a + "-" + b;
        case 2: return a + "*" + b;
        case 3: return "-" + a;
        case 4: return "(" + a + ")^" + std::to_string(g.integer(0, 3));
        case 5: return "exp(x*(" + a + "))";
        default: return "(" + a + ")*(" + b + ")";
    }
}

}  // namespace

TEST_CASE("parse trees") {
    CHECK(parse("D/(1-D)") == node(Ast::Kind::div, {var('D'), node(Ast::Kind::sub, {num(1), var('D')})}));
    CHECK(parse("exp(x)-1") == node(Ast::Kind::sub, {node(Ast::Kind::exp, {var('x')}), num(1)}));
    CHECK(parse("  x ") == var('x'));
    Ast half;
    half.value = Rat(1, 2);
    CHECK(parse("1/2") == half);
}

TEST_CASE("precedence and associativity") {
    // '^' binds tighter than unary minus
    CHECK(parse("-x^2") == node(Ast::Kind::neg, {node(Ast::Kind::pow, {var('x')}, Rat(2))}));
    // right-associative: 2^3^2 = 2^9
    CHECK(eval("2^3^2", 2)[0] == Rat(512));
    // a literal p/q is one number
    CHECK(eval("2/3^2", 2)[0] == Rat(4, 9));
    CHECK(eval("2/(3^2)", 2)[0] == Rat(2, 9));
    CHECK(eval("1-2-3", 1)[0] == Rat(-4));
    CHECK(eval("12/2/3", 1)[0] == Rat(2));
    CHECK(eval("2*3+4*5", 1)[0] == Rat(26));
    CHECK(eval("--x", 2) == Series::variable(2));
    CHECK_THROWS_AS(eval("x^(-1/2)", 3), ConstantTermError);
    CHECK(eval("(1+x)^(1/2)^2", 3) == eval("(1+x)^(1/4)", 3));
}

TEST_CASE("evaluation examples") {
    CHECK(eval("log(1+D)", 4) == from_strings({"0", "1", "-1/2", "1/3", "-1/4"}));
    CHECK(eval("D/(1-D)", 3) == from_strings({"0", "1", "1", "1"}));
    CHECK(eval("(1-sqrt(1-4*D))/2", 5) == oracle::from_ints({0, 1, 1, 2, 5, 14}));
    Series b = eval("D/(exp(D)-1)", 12);
    for (std::size_t k = 0; k <= 12; ++k) CHECK(b[k] * factorial(k) == Rat::parse(frozen::bernoulli[k]));
}

TEST_CASE("evaluation against frozen expansions") {
    CHECK(eval("(1+x)^(-2/3)", 8) == from(frozen::pow_minus_two_thirds, 8));
    CHECK(eval("log(1+x+x^2)", 8) == from(frozen::log_1_x_x2, 8));
    CHECK(eval("exp(x+x^2)", 8) == from(frozen::exp_x_x2, 8));
    CHECK(eval("x/(exp(x)-1)-log(1+x)", 8) == from(frozen::bernoulli_gf_minus_log1p, 8));
}

TEST_CASE("errors carry source offsets") {
    try {
        eval("1/D", 5);
        FAIL("expected DivisionOrderError");
    } catch (const DivisionOrderError& e) {
        REQUIRE(e.offset());
        CHECK(*e.offset() == 0);
    }
    try {
        eval("1 + log(x)", 5);
        FAIL("expected ConstantTermError");
    } catch (const ConstantTermError& e) {
        REQUIRE(e.offset());
        CHECK(*e.offset() == 4);
    }
    try {
        parse("1 + * x");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        REQUIRE(e.offset());
        CHECK(*e.offset() == 4);
        CHECK_FALSE(e.expected().empty());
    }
    CHECK_THROWS_AS(parse("(x"), SyntaxError);
    CHECK_THROWS_AS(parse("y"), SyntaxError);
    CHECK_THROWS_AS(parse("x^y"), SyntaxError);
    CHECK_THROWS_AS(parse("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(parse("x x"), SyntaxError);
    CHECK_THROWS_AS(eval("x", kMaxOrder + 1), std::invalid_argument);
    CHECK_NOTHROW(eval("x", kMaxOrder));
}

TEST_CASE("render then parse is a fixpoint") {
    oracle::Gen g(81);
    for (int i = 0; i < 200; ++i) {
        std::string src = random_expr(g, 4);
        Ast a = parse(src);
        CHECK_MESSAGE(parse(render(a)) == a, src);
    }
}

TEST_CASE("evaluation is monotone in the truncation order") {
    oracle::Gen g(82);
    for (int i = 0; i < 60; ++i) {
        Ast a = parse(random_expr(g, 3));
        Series hi = eval(a, 10);
        for (std::size_t n : {0u, 3u, 7u}) CHECK(eval(a, n) == hi.truncated(n));
    }
    // operator division needs extra working terms
    Series q = eval("(exp(D)-1)^3/D^3", 6);
    Series e(9);
    for (std::size_t k = 1; k <= 9; ++k) e[k] = Rat(1) / factorial(k);
    CHECK(q == shift_down(pow_int(e, 3), 3).truncated(6));
}

TEST_CASE("polynomial input") {
    CHECK(eval_poly("x^2 - 3*x + 1/2", 8) == Poly(std::vector<Rat>{Rat(1, 2), Rat(-3), Rat(1)}));
    CHECK(eval_poly("(x+1)^3", 3) == Poly(std::vector<Rat>{Rat(1), Rat(3), Rat(3), Rat(1)}));
    CHECK(eval_poly("x^20 - x^20 + 1", 2) == Poly::constant(Rat(1)));
    CHECK_THROWS_AS(eval_poly("x^20", 8), TruncationError);
    CHECK_THROWS_AS(eval_poly("exp(x)", 8), OrderError);
    CHECK_THROWS_AS(eval_poly("1/(1-x)", 8), OrderError);
}
