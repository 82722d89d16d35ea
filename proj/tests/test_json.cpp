#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "lssa/appendix.hpp"
#include "lssa/json_io.hpp"

using namespace lssa;

TEST_CASE("product table round trip, symbolic") {
    auto g = algebra_from_name("sl(2|1)");
    for (Family fam : {Family::A, Family::B, Family::C}) {
        ProductTable t = reference_table(g, fam);
        json j = table_to_json(t);
        ProductTable back = table_from_json(j);
        CHECK(back == t);
        // canonical strings: a second round trip is textually identical
        CHECK(table_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("product table JSON shape") {
    auto g = algebra_from_name("sl(2|1)");
    json j = table_to_json(reference_table(g, Family::A));
    CHECK(j["algebra"] == "sl(2|1)");
    CHECK(j["parameters"] == json::array({"k"}));
    CHECK(j["basis"][0] == "x1");
    // the x1*x2 cell carries exactly the x3 and x4 coefficients
    CHECK(j["products"]["x1*x2"].size() == 2);
    CHECK(j["products"]["x1*x2"].contains("x3"));
    CHECK(j["products"]["x1*x2"].contains("x4"));
    CHECK(!j["products"].contains("x1*x1")); // zero products are omitted
}

TEST_CASE("representation and cocycle round trip") {
    auto g = algebra_from_name("sl(2|1)");
    Scalar k = Scalar::param(context_A(), 0);
    FamilyInstance f = build_family(g, Family::A, {k});

    json jr = rep_to_json(f.module);
    Representation back = rep_from_json(jr);
    CHECK(back == f.module);

    json jc = cocycle_to_json(f.cocycle);
    Cocycle cback = cocycle_from_json(jc);
    CHECK(cback.q == f.cocycle.q);
    CHECK(check_cocycle(cback));
}

TEST_CASE("fixture files match the reference tables") {
    auto g = algebra_from_name("sl(2|1)");
    const std::string dir = LSSA_FIXTURES_DIR;
    const std::map<std::string, Family> files = {
        {dir + "/table_A.json", Family::A},
        {dir + "/table_B.json", Family::B},
        {dir + "/table_C.json", Family::C},
    };
    for (const auto& [path, fam] : files) {
        std::ifstream probe(path);
        REQUIRE_MESSAGE(probe.good(), "missing fixture ", path);
        ProductTable fixture = table_from_json(read_json_file(path));
        CHECK(fixture == reference_table(g, fam));
    }
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(algebra_from_name("so(3|1)"), error);
    json j;
    j["algebra"] = "sl(2|1)";
    j["parameters"] = json::array({"k"});
    j["products"] = {{"x1&x2", json::object()}};
    CHECK_THROWS_AS(table_from_json(j), error);
    j["products"] = {{"x1*x9", json::object()}};
    CHECK_THROWS_AS(table_from_json(j), error);
    // parity-violating entry
    j["products"] = {{"x1*x2", {{"y1", "1"}}}};
    CHECK_THROWS_AS(table_from_json(j), error);
}
