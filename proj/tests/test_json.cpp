#include <doctest.h>

#include "cohid/catalogue.hpp"
#include "cohid/json_io.hpp"
#include "cohid/random.hpp"
#include "helpers.hpp"

using namespace cohid;
using io::json;
using testing::bar;
using testing::ray;

TEST_SUITE_BEGIN("json");

TEST_CASE("rationals") {
    CHECK(io::rational_from_json(json("-3/6")) == Rational(-1, 2));
    CHECK(io::rational_from_json(json(4)) == Rational(4));
    CHECK(io::extended_from_json(json("inf")).is_infinite());
    CHECK_THROWS(io::rational_from_json(json(0.5)));
    CHECK_THROWS(io::rational_from_json(json("x")));
}

TEST_CASE("barcode round trip") {
    Barcode b{bar(3, 7), ray(-1), bar(0, 4)};
    json j = io::to_json(b);
    CHECK(j.dump() == R"([["-1","inf"],["0","4"],["3","7"]])");
    CHECK(io::barcode_from_json(j) == b);
    CHECK_THROWS(io::barcode_from_json(json::parse(R"([["1"]])")));
    CHECK_THROWS(io::barcode_from_json(json::parse(R"([["2","1"]])")));
    CHECK_THROWS(io::barcode_from_json(json::parse(R"({"a":1})")));
}

TEST_CASE("module round trips") {
    Rng rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = change_basis(realize(random_integer_barcode(rng, 4, 0, 5, true)), rng);
        auto back = io::persistence_module_from_json(io::to_json(m));
        CHECK(decompose(back) == decompose(m));
        CHECK(io::to_json(back) == io::to_json(m));

        auto x = random_dg_module(Field::rationals(), rng);
        CHECK(io::to_json(io::persistence_dg_from_json(io::to_json(x))) == io::to_json(x));

        auto d = random_dgku(Field::rationals(), rng);
        CHECK(io::to_json(io::dgku_from_json(io::to_json(d))) == io::to_json(d));

        auto fm = random_filtration(random_integer_barcode(rng, 3, 0, 4, false), rng);
        CHECK(io::to_json(io::filtered_from_json(io::to_json(fm))) == io::to_json(fm));
    }
}

TEST_CASE("model round trip") {
    for (const char* ref : {"pt", "cp:2:1", "m:1", "x_a:1/3"}) {
        auto a = builtin(ref);
        auto back = io::model_from_json(io::to_json(a));
        CHECK(io::to_json(back) == io::to_json(a));
    }
}

TEST_CASE("model from hand-written json") {
    auto j = json::parse(R"({
        "generators": [{"name": "u", "degree": 2}, {"name": "w", "degree": 5}],
        "differential": {"w": [["1", "u^3"]]},
        "u_generator": "u",
        "truncation": 8
    })");
    auto a = io::model_from_json(j);
    CHECK(split_barcode(cohomology_ku(to_dgku(a)), 0) == Barcode{bar(0, 3)});
}

TEST_CASE("malformed input") {
    CHECK_THROWS_WITH(io::dgku_from_json(json::parse(R"({"window":[0,2]})")), "missing field 'dims'");
    CHECK_THROWS(io::dgku_from_json(json::parse(R"({"window":[1,3],"dims":[1,1,1],"d":[],"u":[],"tail":{}})")));
    CHECK_THROWS(io::model_from_json(json::parse(R"({"generators":[{"name":"x","degree":3}],
        "differential":{"x":[["1","u"]]},"truncation":6})")));
    CHECK_THROWS(io::model_from_json(json::parse(R"({"generators":[{"name":"u","degree":2}],
        "u_generator":"u","u_action":[["1","u"]],"truncation":6})")));
    CHECK_THROWS(io::matrix_from_json(json::parse(R"([["1","2"]])"), 2, 2, Field::rationals()));
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), std::runtime_error);
}

TEST_SUITE_END();
