#include <doctest.h>

#include <tuple>

#include "oracles.hpp"
#include "umbra/errors.hpp"
#include "umbra/flow.hpp"
#include "umbra/io.hpp"
#include "umbra/umbral.hpp"

using namespace umbra;

namespace {

Series rational_series(oracle::Gen& gen, std::size_t N) {
    std::vector<Rat> c;
    for (std::size_t i = 0; i <= N; ++i) c.push_back(gen.rational(-9, 9, 7));
    return Series(std::move(c));
}

}  // namespace

TEST_CASE("series schema") {
    io::json j = io::to_json(oracle::from_strings({"0", "1", "-1/2"}));
    CHECK(j.dump() == R"({"coeffs":["0","1","-1/2"],"kind":"series","trunc":2})");
    CHECK_THROWS(io::series_from_json(io::json::parse(R"({"kind":"series","trunc":3,"coeffs":["1"]})")));
    CHECK_THROWS(io::series_from_json(io::json::parse(R"({"kind":"triangle","trunc":0,"coeffs":["1"]})")));
    CHECK_THROWS(io::series_from_json(io::json::parse(R"({"kind":"series","trunc":0,"coeffs":["1/0"]})")));
}

TEST_CASE("operator and triangle schemas") {
    io::json d = io::to_json(named::forward_difference(2));
    CHECK(d.at("kind") == "shiftop");
    CHECK(d.at("unit") == "1");
    CHECK(d.at("indicator").at("coeffs") == io::json::array({"0", "1", "1/2"}));
    CHECK_THROWS_AS(io::deltaop_from_json(io::to_json(ShiftOp(oracle::from_ints({1, 1})))), NotDelta);
    Triangle t = Triangle::identity(1);
    t(1, 0) = Rat(-2, 3);
    CHECK(io::to_json(t).dump() == R"({"kind":"triangle","n":1,"rows":[["1"],["-2/3","1"]]})");
    CHECK(io::triangle_tsv(t) == "1\n-2/3\t1\n");
}

TEST_CASE("round trips are byte exact") {
    oracle::Gen gen(91);
    for (int i = 0; i < 10; ++i) {
        Series s = rational_series(gen, static_cast<std::size_t>(gen.integer(0, 9)));
        std::string a = io::to_json(s).dump();
        CHECK(io::series_from_json(io::json::parse(a)) == s);
        CHECK(io::to_json(io::series_from_json(io::json::parse(a))).dump() == a);

        Triangle t = gen.lower_triangle(static_cast<std::size_t>(gen.integer(0, 6)));
        std::string b = io::to_json(t).dump();
        CHECK(io::triangle_from_json(io::json::parse(b)) == t);
        CHECK(io::to_json(io::triangle_from_json(io::json::parse(b))).dump() == b);

        DeltaOp q = validate_delta(ShiftOp(gen.delta_series(6)));
        std::string c = io::to_json(q).dump();
        CHECK(io::deltaop_from_json(io::json::parse(c)).indicator() == q.indicator());
        CHECK(io::shiftop_from_json(io::json::parse(c)).indicator() == q.indicator());

        Matrix m = jabotinsky(t);
        std::string e = io::to_json(m).dump();
        CHECK(io::to_json(io::matrix_from_json(io::json::parse(e))).dump() == e);
    }
}

TEST_CASE("reports") {
    Report r;
    r.results.push_back({"spivey", "touchard", "", true, std::nullopt});
    r.results.push_back({"closed_form", "abel", "a=2", false, "n=3,k=1: got 1, expected 2"});
    io::json j = io::to_json(r);
    CHECK(j[0].at("status") == "pass");
    CHECK_FALSE(j[0].contains("counterexample"));
    CHECK(j[1].at("status") == "fail");
    CHECK(j[1].at("counterexample") == "n=3,k=1: got 1, expected 2");
    Report back = io::report_from_json(j);
    CHECK(io::to_json(back).dump() == j.dump());
    CHECK_FALSE(back.all_passed());
}

TEST_CASE("check_all output is sorted") {
    Report r = check_all(5);
    for (std::size_t i = 1; i < r.results.size(); ++i) {
        const auto& a = r.results[i - 1];
        const auto& b = r.results[i];
        CHECK(std::tie(a.family, a.params, a.identity) <= std::tie(b.family, b.params, b.identity));
    }
    CHECK(io::to_json(r).dump() == io::to_json(check_all(5)).dump());
}
