#include <doctest.h>

#include "oracles.hpp"
#include "umbra/errors.hpp"
#include "umbra/fps.hpp"
#include "umbra/umbral.hpp"

using namespace umbra;
using oracle::from_ints;
using oracle::from_strings;

namespace {

Poly P(std::vector<long> c) { return Poly(std::vector<Rat>(c.begin(), c.end())); }

DeltaOp random_delta(oracle::Gen& gen, std::size_t T) { return validate_delta(ShiftOp(gen.delta_series(T, -4, 4))); }

Triangle lah_unsigned(std::size_t N) {
    Triangle t(N);
    t(0, 0) = Rat(1);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            t(n, k) = binom(static_cast<long>(n - 1), static_cast<long>(k - 1)) * factorial(n) / factorial(k);
    return t;
}

}  // namespace

TEST_CASE("basic sets of small operators") {
    UmbralOp falling = basic(named::forward_difference(6), 5, BasicRoute::transfer);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(falling.poly(n) == oracle::factorial_poly(n, -1));
    UmbralOp rising = basic(named::backward_difference(6), 5, BasicRoute::transfer);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(rising.poly(n) == oracle::factorial_poly(n, 1));
    UmbralOp touchard = basic(named::log1p(6), 4, BasicRoute::genfunc);
    CHECK(touchard.poly(4) == P({0, 1, 7, 6, 1}));
    UmbralOp stretch = basic(named::stretch(Rat(3), 5), 4, BasicRoute::km);
    CHECK(stretch.poly(4) == Poly::monomial(Rat(81), 4));
}

TEST_CASE("every basic-set route gives the same triangle") {
    oracle::Gen gen(41);
    for (int i = 0; i < 12; ++i) {
        DeltaOp Q = random_delta(gen, 10);
        Triangle ref = basic(Q, 9, BasicRoute::transfer).triangle();
        for (BasicRoute r : kAllRoutes) CHECK(basic(Q, 9, r).triangle() == ref);
        CHECK(coeff_via_ratio(Q, 9) == ref);
        CHECK(agree(delta_of(ref).indicator(), Q.indicator()));
    }
}

TEST_CASE("routes refuse indicators that are too short") {
    DeltaOp Q = named::forward_difference(5);
    CHECK_THROWS_AS(basic(Q, 5, BasicRoute::transfer), TruncationError);
    CHECK_NOTHROW(basic(Q, 5, BasicRoute::genfunc));
    CHECK_THROWS_AS(basic(Q, 6, BasicRoute::km), TruncationError);
}

TEST_CASE("umbral triangles are checked on construction") {
    Triangle t = Triangle::identity(3);
    t(2, 0) = Rat(1);
    CHECK_THROWS_AS(UmbralOp{t}, NotDelta);
    Triangle s = Triangle::identity(3);
    s(3, 3) = Rat(0);
    CHECK_THROWS_AS(UmbralOp{s}, SingularTriangle);
    Triangle u = Triangle::identity(3);
    u(0, 0) = Rat(2);
    CHECK_THROWS_AS(UmbralOp{u}, NotDelta);
}

TEST_CASE("delta operator read back from a triangle") {
    Triangle falling = basic(named::forward_difference(8), 7, BasicRoute::transfer).triangle();
    CHECK(delta_of(falling).indicator() == named::forward_difference(7).indicator());
    CHECK_THROWS_AS(delta_of(Triangle::identity(0)), NotDelta);
}

TEST_CASE("binomial type detection") {
    oracle::Gen gen(42);
    for (int i = 0; i < 6; ++i) {
        Triangle t = basic(random_delta(gen, 9), 8, BasicRoute::genfunc).triangle();
        CHECK(is_binomial_type(t));
        std::size_t n = static_cast<std::size_t>(gen.integer(2, 8));
        std::size_t k = static_cast<std::size_t>(gen.integer(1, static_cast<long>(n)));
        t(n, k) += Rat(1, 7);
        CHECK_FALSE(is_binomial_type(t));
    }
    // a Sheffer set is not of binomial type
    UmbralOp id = basic(named::derivative(8), 7, BasicRoute::transfer);
    CHECK_FALSE(is_binomial_type(sheffer(named::bernoulli(8), id).tri));
}

TEST_CASE("inversion transforms undo each other") {
    oracle::Gen gen(43);
    Triangle t = basic(named::log1p(11), 10, BasicRoute::transfer).triangle();
    Triangle inv = tri_invert(t);
    for (int i = 0; i < 10; ++i) {
        auto a = gen.sequence(11);
        for (std::size_t bound : {0u, 3u}) {
            auto b = transform_seq(t, a, TransformMode::row, bound);
            auto back = transform_seq(inv, b, TransformMode::row, bound);
            for (std::size_t n = bound; n <= 10; ++n) CHECK(back[n] == a[n]);
        }
        auto c = transform_seq(t, a, TransformMode::column, 7);
        auto back = transform_seq(inv, c, TransformMode::column, 7);
        for (std::size_t k = 0; k <= 7; ++k) CHECK(back[k] == a[k]);
    }
    // Stirling transform of 1,1,1,... gives the Bell numbers
    std::vector<Rat> ones(8, Rat(1));
    auto bell = transform_seq(t.truncated(7), ones, TransformMode::row, 0);
    CHECK(bell == std::vector<Rat>{1, 1, 2, 5, 15, 52, 203, 877});
}

TEST_CASE("connection constants") {
    UmbralOp rising = basic(named::backward_difference(9), 8, BasicRoute::transfer);
    UmbralOp falling = basic(named::forward_difference(9), 8, BasicRoute::transfer);
    CHECK(connection_constants(rising, falling) == lah_unsigned(8));
    CHECK(connection_constants(falling, falling) == Triangle::identity(8));
}

TEST_CASE("Sheffer sets") {
    UmbralOp id = basic(named::derivative(8), 7, BasicRoute::transfer);
    ShefferOp bern = sheffer(named::bernoulli(8), id);
    CHECK(bern.tri.row_poly(2) == Poly(std::vector<Rat>{Rat(1, 6), Rat(-1), Rat(1)}));
    CHECK(bern.tri.row_poly(3) == Poly(std::vector<Rat>{Rat(0), Rat(1, 2), Rat(-3, 2), Rat(1)}));
    CHECK(sheffer_identity_check(bern, id));
    CHECK_THROWS_AS(sheffer(named::derivative(8), id), NotAppell);

    oracle::Gen gen(44);
    DeltaOp Q = random_delta(gen, 8);
    UmbralOp phi = basic(Q, 7, BasicRoute::genfunc);
    Series a = gen.series(8);
    a[0] = Rat(2);
    CHECK(sheffer_identity_check(sheffer(ShiftOp(a), phi), phi));
}

TEST_CASE("cross sequences") {
    UmbralOp lag = basic(named::laguerre(8), 7, BasicRoute::transfer);
    ShiftOp C(from_ints({1, -1, 0, 0, 0, 0, 0, 0, 0}));
    // (1-D)^{-1-alpha} applied to the Laguerre set gives generalized Laguerre polynomials up to sign and n!
    ShefferOp s = cross(C, Rat(-1), lag);
    CHECK(s.tri.row_poly(1) == P({1, 1}));
    CHECK_THROWS_AS(cross(ShiftOp(from_ints({2, 1})), Rat(1), lag), ConstantTermError);
}

TEST_CASE("Niederhausen transform of the identity") {
    UmbralOp id = basic(named::derivative(9), 8, BasicRoute::transfer);
    UmbralOp nh = niederhausen(id);
    for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(nh.triangle()(n, k) ==
                  binom(static_cast<long>(n), static_cast<long>(k)) * pow(Rat(static_cast<long>(k)), static_cast<long>(n - k)));
    CHECK(nh.delta().indicator().truncated(4) == from_strings({"0", "1", "-1", "3/2", "-8/3"}));
}

TEST_CASE("power coefficients") {
    oracle::Gen gen(45);
    for (int i = 0; i < 6; ++i) {
        DeltaOp Q = random_delta(gen, 9);
        for (std::size_t n = 1; n <= 8; ++n) {
            auto a = power_coeffs(Q, n);
            Series direct = pow_int(mul_inv(shift_down(Q.indicator(), 1)), static_cast<long>(n));
            for (std::size_t j = 0; j < n; ++j) CHECK(a[j] == direct[j] * factorial(j));
            Poly pn = basic(Q, n, BasicRoute::transfer).poly(n);
            for (std::size_t k = 1; k <= n; ++k)
                CHECK(pn.coeff(k) == a[n - k] * binom(static_cast<long>(n - 1), static_cast<long>(k - 1)));
        }
    }
    CHECK(power_coeffs(named::forward_difference(3), 0).empty());
}

TEST_CASE("commutation with multiplication by x") {
    oracle::Gen gen(46);
    for (int i = 0; i < 4; ++i) {
        UmbralOp phi = basic(random_delta(gen, 10), 9, BasicRoute::transfer);
        for (std::size_t n = 0; n <= 4; ++n) CHECK(commutation_expansion_check(phi, n));
        CHECK(differential_equation_check(phi));
    }
    UmbralOp falling = basic(named::forward_difference(10), 9, BasicRoute::transfer);
    for (std::size_t n = 0; n <= 5; ++n)
        CHECK(special_class_check(falling, named::identity(10), named::shift(Rat(-1), 10), n));
    CHECK_FALSE(special_class_check(falling, named::identity(10), named::identity(10), 2));
}

TEST_CASE("grid points are distinct") {
    auto g = grid_points(40);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) CHECK(g[i] != g[j]);
}
