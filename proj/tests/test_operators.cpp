#include <doctest.h>

#include "oracles.hpp"
#include "umbra/errors.hpp"
#include "umbra/fps.hpp"
#include "umbra/operators.hpp"

using namespace umbra;
using oracle::from_ints;
using oracle::from_strings;

namespace {
Poly P(std::vector<long> c) { return Poly(std::vector<Rat>(c.begin(), c.end())); }
}  // namespace

TEST_CASE("applying shift-invariant operators") {
    CHECK(apply(named::derivative(5), P({0, 0, 0, 1})) == P({0, 0, 3}));
    CHECK(apply(named::forward_difference(5), P({0, 0, 1})) == P({1, 2}));
    CHECK(apply(named::backward_difference(5), P({0, 0, 1})) == P({-1, 2}));
    CHECK(apply(named::shift(Rat(2), 4), P({0, 0, 0, 1})) == P({0, 0, 0, 1}).shifted(Rat(2)));
    CHECK(apply(named::forward_difference(5), Poly()).is_zero());
    CHECK_THROWS_AS(apply(named::forward_difference(2), P({0, 0, 0, 1})), TruncationError);
}

TEST_CASE("operator products act as composition") {
    oracle::Gen gen(31);
    for (int i = 0; i < 15; ++i) {
        ShiftOp T(gen.series(8)), U(gen.series(8));
        Poly p = gen.poly(8), q = gen.poly(8);
        CHECK(apply(T * U, p) == apply(T, apply(U, p)));
        CHECK(apply(T, p + q) == apply(T, p) + apply(T, q));
        CHECK(apply(T, p) - apply(U, p) == apply(T - U, p));
    }
}

TEST_CASE("pincherle derivative") {
    // (E - 1)' = E and (X commutator) Q X - X Q = Q'
    CHECK(pincherle(named::forward_difference(6)).indicator() == named::shift(Rat(1), 5).indicator());
    oracle::Gen gen(32);
    for (int i = 0; i < 10; ++i) {
        ShiftOp T(gen.series(9));
        ShiftOp Tp = pincherle(T);
        Poly p = gen.poly(8);
        CHECK(apply(T, p.mulx()) - apply(T, p).mulx() == apply(Tp, p));
    }
}

TEST_CASE("operator division") {
    // D / (E - 1) carries the Bernoulli numbers
    ShiftOp b = divide(named::derivative(6), named::forward_difference(6));
    CHECK(b.indicator() == from_strings({"1", "-1/2", "1/12", "0", "-1/720", "0"}));
    CHECK(b.indicator() == named::bernoulli(5).indicator());
    CHECK_THROWS_AS(divide(named::identity(4), named::derivative(4)), DivisionOrderError);
    CHECK_THROWS_AS(divide(named::derivative(4), ShiftOp(Series(4))), DivisionOrderError);
    oracle::Gen gen(33);
    for (int i = 0; i < 10; ++i) {
        ShiftOp V(gen.delta_series(10));
        ShiftOp U(gen.series(10) * Series::variable(10));
        ShiftOp Q = divide(U, V);
        CHECK(agree((Q * V).indicator(), U.indicator()));
    }
}

TEST_CASE("delta validation") {
    DeltaOp d = named::stretch(Rat(2), 4);
    CHECK(d.unit() == Rat(1, 2));
    CHECK_FALSE(d.unitary());
    CHECK(named::forward_difference(4).unitary());
    CHECK_THROWS_AS(validate_delta(named::shift(Rat(1), 4)), NotDelta);
    CHECK_THROWS_AS(validate_delta(ShiftOp(Series::monomial(Rat(1), 2, 4))), NotDelta);
    CHECK_THROWS_AS(validate_delta(ShiftOp(Series(4))), NotDelta);
    CHECK(is_appell(named::shift(Rat(3), 2)));
    CHECK_FALSE(is_appell(named::derivative(2)));
    CHECK_THROWS_AS(inverse(named::derivative(3)), NotInvertible);
}

TEST_CASE("diamond and bracket iterates") {
    // (E - 1) diamond log(1 + D) = D
    CHECK(diamond(named::forward_difference(7), named::log1p(7)).indicator() == Series::variable(7));
    DeltaOp Q = named::laguerre(8);
    CHECK(bracket_iterate(Q, 1) == Q);
    CHECK(bracket_iterate(Q, 0).indicator() == Series::variable(8));
    CHECK(bracket_iterate(Q, 2).indicator() == diamond(Q, Q).indicator());
    CHECK(bracket_iterate(Q, -1).indicator() == comp_inv(Q.indicator()));
    // D/(1-D) iterated n times is D/(1-nD)
    Series three(8);
    for (std::size_t k = 1; k <= 8; ++k) three[k] = pow(Rat(3), static_cast<long>(k - 1));
    CHECK(bracket_iterate(Q, 3).indicator() == three);
}

TEST_CASE("elementary operators") {
    Poly p = P({1, 2, 3});
    CHECK(std::get<Rat>(apply(Elementary::eval, Rat(2), p)) == Rat(17));
    CHECK(std::get<Poly>(apply(Elementary::mulx, Rat(0), p)) == P({0, 1, 2, 3}));
    CHECK(std::get<Poly>(apply(Elementary::symmetry, Rat(0), p)) == P({1, -2, 3}));
    CHECK(std::get<Poly>(apply(Elementary::shift, Rat(1), p)) == P({6, 8, 3}));
    CHECK(std::get<Poly>(apply(Elementary::derivative, Rat(0), p)) == P({2, 6}));
    CHECK(std::get<Poly>(apply(Elementary::scalar, Rat(2), p)) == P({2, 4, 6}));
    CHECK(std::get<Poly>(apply(Elementary::identity, Rat(0), p)) == p);
}

TEST_CASE("named indicators") {
    CHECK(named::laguerre(4).indicator() == from_ints({0, 1, 1, 1, 1}));
    CHECK(named::catalan(3).indicator() == from_ints({0, 1, -1, 0}));
    CHECK(named::log1p(4).indicator() == from_strings({"0", "1", "-1/2", "1/3", "-1/4"}));
    CHECK(named::abel(Rat(1), 3).indicator() == from_strings({"0", "1", "1", "1/2"}));
    CHECK(named::divided_difference(Rat(0), 3) == named::derivative(3));
    CHECK(named::divided_difference(Rat(1), 5) == named::forward_difference(5));
    // D (1 - 2 D^2)^{-1/2} = D + D^3 + 3/2 D^5
    CHECK(named::degenerate_laguerre(2, 5).indicator() == from_strings({"0", "1", "0", "1", "0", "3/2"}));
}
