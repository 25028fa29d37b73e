#include <doctest.h>

#include "oracles.hpp"
#include "umbra/bell.hpp"
#include "umbra/poly.hpp"

using namespace umbra;

TEST_CASE("partial Bell polynomials against partition enumeration") {
    oracle::Gen gen(51);
    for (int trial = 0; trial < 5; ++trial) {
        auto a = gen.sequence(9);
        for (std::size_t n = 0; n <= 9; ++n)
            for (std::size_t k = 0; k <= n; ++k) {
                Rat want = oracle::bell_partitions(n, k, a);
                CHECK(partial_bell(n, k, a) == want);
                CHECK(partial_bell_series(n, k, a) == want);
            }
    }
}

TEST_CASE("special arguments") {
    std::vector<Rat> ones(10, Rat(1));
    // Stirling numbers of the second kind and Bell numbers
    CHECK(partial_bell(6, 3, ones) == Rat(90));
    CHECK(complete_bell(7, ones) == Rat(877));
    // a_i = i! gives the unsigned Lah numbers
    std::vector<Rat> fact;
    for (std::size_t i = 1; i <= 8; ++i) fact.push_back(factorial(i));
    CHECK(partial_bell(5, 2, fact) == Rat(240));
    // a_i = i gives binom(n,k) k^{n-k}
    std::vector<Rat> idx;
    for (long i = 1; i <= 8; ++i) idx.push_back(Rat(i));
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            CHECK(partial_bell(n, k, idx) ==
                  binom(static_cast<long>(n), static_cast<long>(k)) * pow(Rat(static_cast<long>(k)), static_cast<long>(n - k)));
}

TEST_CASE("Catalan arguments") {
    std::vector<Rat> plain{Rat(1), Rat(1), Rat(2)};
    CHECK(partial_bell(3, 2, plain) == Rat(3));
    // ordinary coefficients C_{i-1} enter as a_i = i! C_{i-1}
    std::vector<Rat> a;
    for (long i = 1; i <= 9; ++i) {
        Rat c = binom(2 * (i - 1), i - 1) / Rat(i);
        a.push_back(factorial(static_cast<std::size_t>(i)) * c);
    }
    CHECK(partial_bell(3, 2, a) == Rat(6));
    for (std::size_t n = 1; n <= 9; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            CHECK(partial_bell(n, k, a) == factorial(n - 1) / factorial(k - 1) *
                                               binom(static_cast<long>(2 * n - k - 1), static_cast<long>(n - 1)));
}

TEST_CASE("diagonal") {
    oracle::Gen gen(53);
    auto a = gen.sequence(1);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(partial_bell(n, n, a) == pow(a[0], static_cast<long>(n)));
}

TEST_CASE("complete Bell polynomials sum the partial ones") {
    oracle::Gen gen(52);
    auto a = gen.sequence(8);
    for (std::size_t n = 0; n <= 8; ++n) {
        Rat sum;
        for (std::size_t k = 0; k <= n; ++k) sum += oracle::bell_partitions(n, k, a);
        CHECK(complete_bell(n, a) == sum);
        CHECK(complete_bell_series(n, a) == sum);
    }
}

TEST_CASE("Bell table over polynomial arguments") {
    // a_i = x for all i: B_{n,k} = S(n,k) x^k
    std::vector<Poly> a(6, Poly::x());
    auto B = partial_bell_table<Poly>(6, 6, a, Poly(), Poly::constant(Rat(1)));
    CHECK(B[6][3] == Poly::monomial(Rat(90), 3));
    CHECK(B[5][5] == Poly::monomial(Rat(1), 5));
    CHECK(B[4][0] == Poly());
}

TEST_CASE("argument errors") {
    std::vector<Rat> a{Rat(1), Rat(2)};
    CHECK_THROWS_AS(partial_bell(2, 3, a), IndexError);
    CHECK_THROWS_AS(partial_bell(5, 1, a), IndexError);
    CHECK_NOTHROW(partial_bell(4, 3, a));
    CHECK_THROWS_AS(complete_bell(3, a), IndexError);
}
