#pragma once

// Expressions over one formal variable, written x or D:
//
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := '-' unary | factor
//   factor   := base ('^' exponent)?
//   base     := rational | 'x' | 'D' | '(' expr ')' | ('exp' | 'log' | 'sqrt') '(' expr ')'
//   rational := integer ('/' integer)?
//   exponent := ('-'? integer | '(' '-'? rational ')') ('^' exponent)?
//
// '^' binds tighter than unary minus and is right-associative. A literal p/q is one number,
// so 2/3^2 is (2/3)^2.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "umbra/poly.hpp"
#include "umbra/rat.hpp"
#include "umbra/series.hpp"

namespace umbra {

struct Ast {
    enum class Kind { number, variable, neg, add, sub, mul, div, pow, exp, log, sqrt };
    Kind kind = Kind::number;
    Rat value;         // number literal, or exponent for pow
    char var = 'x';    // 'x' or 'D'
    std::vector<Ast> args;
    std::size_t offset = 0;  // start of this node in the source

    // Structural equality; offsets are ignored.
    friend bool operator==(const Ast& a, const Ast& b);
};

Ast parse(std::string_view src);
std::string render(const Ast& ast);

inline constexpr std::size_t kMaxOrder = 64;

// Exact series to trunc `order` <= kMaxOrder. Division by a series of order k uses k extra terms internally,
// so the result is always known to the requested trunc.
Series eval(const Ast& ast, std::size_t order);
Series eval(std::string_view src, std::size_t order);

// Expression that must be a polynomial of degree <= max_degree.
Poly eval_poly(std::string_view src, std::size_t max_degree);

}  // namespace umbra
