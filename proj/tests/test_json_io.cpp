#include <doctest.h>

#include "fusionstab/json_io.hpp"

using namespace fusionstab;
using nlohmann::json;

TEST_CASE("fusion ring JSON round trip") {
    const FusionRing fib = builtin_fib();
    const json j = fusion_ring_to_json(fib);
    FusionRing back = parse_fusion_ring(j);
    CHECK(back.basis() == fib.basis());
    CHECK(back.unit() == fib.unit());
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                CHECK(back.structure_constant(i, a, b) == fib.structure_constant(i, a, b));
    CHECK(fusion_ring_to_json(back) == j);
}

TEST_CASE("builtin ring names resolve") {
    CHECK(builtin_ring("fib").rank() == 2);
    CHECK(builtin_ring("vec_S3").rank() == 6);
    CHECK(builtin_ring("rep_S4").rank() == 5);
    CHECK_THROWS_AS(builtin_ring("rep_Q8"), SchemaError);
    CHECK_THROWS_AS(builtin_ring("nonsense"), SchemaError);
}

TEST_CASE("schema violations throw SchemaError") {
    CHECK_THROWS_AS(parse_fusion_ring(json{{"basis", {"1"}}, {"unit", 0}}), SchemaError);
    CHECK_THROWS_AS(parse_fusion_ring(json{{"basis", {"1"}}, {"unit", 3}, {"N", {{{1}}}}}),
                    SchemaError);
    CHECK_THROWS_AS(parse_type_a_quiver(json{{"n", 4}, {"orientation", {"R", "L"}}}), SchemaError);
    CHECK_THROWS_AS(parse_type_a_quiver(json{{"n", 2}, {"orientation", {"X"}}}), SchemaError);
    CHECK_THROWS_AS(parse_charge(json{{"lattice", {"S1", "S2"}}, {"values", {{1.0, 0.0}}}}),
                    SchemaError);
    CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), SchemaError);
}

TEST_CASE("actions parse with the unit matrix omitted") {
    const json j = {
        {"ring", "fib"},
        {"lattice", {"S1", "S2", "S3", "S4"}},
        {"matrices",
         {{"Pi", {{0, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 0}}}}},
    };
    const K0ModuleAction action = parse_action(j);
    CHECK(validate_action(action).empty());
    CHECK(action.matrices[0] == IMat(IMat::Identity(4, 4)));

    json missing = j;
    missing["matrices"].erase("Pi");
    CHECK_THROWS_AS(parse_action(missing), SchemaError);
}

TEST_CASE("type A quiver and rep parsing") {
    const TypeAQuiver q = parse_type_a_quiver(json{{"n", 4}, {"orientation", {"R", "L", "R"}}});
    CHECK(q.arrows() ==
          std::vector<std::pair<int, int>>{{1, 2}, {3, 2}, {3, 4}});
    const TypeARep rep = parse_rep(json::parse("[[1,2],[2,3]]"));
    REQUIRE(rep.size() == 2);
    CHECK(rep[0] == IntervalModule{1, 2});
}

TEST_CASE("charge JSON round trip") {
    const json j = {
        {"lattice", {"S1", "S2"}},
        {"values", {{-1.0, 0.0}, {0.5, 2.0}}},
    };
    const CentralCharge z = parse_charge(j);
    CHECK(charge_to_json(z) == j);
}

TEST_CASE("quiver JSON round trip") {
    const CharacterTable s3 = builtin_character_table("S3");
    const Quiver q = mckay_quiver(s3, s3.irrep_index("std"));
    const Quiver back = parse_quiver(quiver_to_json(q));
    CHECK(back.vertices == q.vertices);
    CHECK(back.adj == q.adj);
}

TEST_CASE("character tables parse from explicit JSON") {
    const json j = {
        {"group", {{"builtin", "C2"}}},
        {"class_sizes", {1, 1}},
        {"chars", {{{1.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}, {-1.0, 0.0}}}},
        {"irreps", {"triv", "sign"}},
    };
    const CharacterTable ct = parse_character_table(j);
    CHECK(validate_character_table(ct).empty());
    CHECK(ct.irrep_index("sign") == 1);
}
