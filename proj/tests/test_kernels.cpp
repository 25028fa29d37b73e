#include <doctest.h>

#include <omp.h>

#include "oracles.hpp"
#include "umbra/errors.hpp"
#include "umbra/kernels.hpp"

using namespace umbra;

namespace {
struct Threads {
    explicit Threads(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
    ~Threads() { omp_set_num_threads(saved); }
    int saved;
};
}  // namespace

TEST_CASE("parallel kernels match their serial references") {
    Threads guard(4);
    oracle::Gen gen(21);
    for (std::size_t N : {3u, 17u, 30u}) {
        Triangle a = gen.lower_triangle(N), b = gen.lower_triangle(N);
        CHECK(kernels::compose(a, b) == kernels::serial::compose(a, b));
        CHECK(kernels::invert(a) == kernels::serial::invert(a));
    }
    for (std::size_t N : {5u, 60u}) {
        Series f = gen.series(N), g = gen.series(N + 3);
        CHECK(kernels::mul(f, g) == kernels::serial::mul(f, g));
    }
}

TEST_CASE("inverse composes to the identity") {
    oracle::Gen gen(22);
    Triangle t = gen.lower_triangle(12);
    Triangle inv = kernels::invert(t);
    CHECK(kernels::compose(t, inv) == Triangle::identity(12));
    CHECK(kernels::compose(inv, t) == Triangle::identity(12));
}

TEST_CASE("composition is associative") {
    oracle::Gen gen(23);
    Triangle a = gen.lower_triangle(9), b = gen.lower_triangle(9), c = gen.lower_triangle(9);
    CHECK(kernels::compose(kernels::compose(a, b), c) == kernels::compose(a, kernels::compose(b, c)));
}

TEST_CASE("singular and mismatched triangles are rejected") {
    Triangle t = Triangle::identity(4);
    t(2, 2) = Rat(0);
    CHECK_THROWS_AS(kernels::invert(t), SingularTriangle);
    CHECK_THROWS_AS(kernels::serial::invert(t), SingularTriangle);
    CHECK_THROWS_AS(kernels::compose(Triangle::identity(3), Triangle::identity(4)), std::invalid_argument);
}
