#include <doctest.h>

#include "umbra/rat.hpp"

using umbra::Rat;

TEST_CASE("rationals stay canonical") {
    CHECK(Rat(2, 4).to_string() == "1/2");
    CHECK(Rat(3, -6).to_string() == "-1/2");
    CHECK(Rat::parse("-6/8") == Rat(-3, 4));
    CHECK(Rat::parse("+5").to_string() == "5");
    CHECK(Rat::parse("0/7").to_string() == "0");
}

TEST_CASE("rational parsing rejects junk") {
    CHECK_THROWS(Rat::parse(""));
    CHECK_THROWS(Rat::parse("1/"));
    CHECK_THROWS(Rat::parse("1/-2"));
    CHECK_THROWS(Rat::parse("1.5"));
    CHECK_THROWS(Rat::parse("1/0"));
}

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
    CHECK(Rat(1, 2) / Rat(-1, 4) == Rat(-2));
    CHECK(-Rat(1, 2) == Rat(-1, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("powers, factorials, binomials") {
    CHECK(umbra::pow(Rat(-2, 3), 3) == Rat(-8, 27));
    CHECK(umbra::pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(umbra::pow(Rat(0), 0) == Rat(1));
    CHECK(umbra::factorial(0) == Rat(1));
    CHECK(umbra::factorial(10) == Rat(3628800));
    CHECK(umbra::binom(10, 3) == Rat(120));
    CHECK(umbra::binom(3, 5) == Rat(0));
    CHECK(umbra::binom(3, -1) == Rat(0));
    CHECK(umbra::binom(Rat(1, 2), 2) == Rat(-1, 8));
    CHECK(umbra::binom(Rat(-1), 3) == Rat(-1));
    // generalized binomial agrees with the integer one on nonnegative integers
    for (long n = 0; n < 8; ++n)
        for (long k = 0; k <= n; ++k) CHECK(umbra::binom(Rat(n), static_cast<std::size_t>(k)) == umbra::binom(n, k));
}

TEST_CASE("decimal rendering") {
    CHECK(Rat(1, 4).to_decimal() == "0.25");
    CHECK(Rat(-5, 2).to_decimal() == "-2.5");
    CHECK(Rat(1, 3).to_decimal(5) == "0.33333");
    CHECK(Rat(1200).to_decimal() == "1200");
}
