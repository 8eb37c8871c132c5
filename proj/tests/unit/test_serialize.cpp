#include "doctest.h"

#include "altchar/serialize.hpp"

using namespace altchar;

TEST_CASE("big integers become numbers when they fit, strings otherwise") {
    CHECK(bigint_json(42) == Json(42));
    CHECK(bigint_json(-7) == Json(-7));
    const BigInt huge = factorial(25);
    CHECK(bigint_json(huge) == Json("15511210043330985984000000"));
}

TEST_CASE("QuadValue serialises as a triple") {
    CHECK(to_json(QuadValue(-1, 1, -3)).dump() == R"j({"a":-1,"b":1,"D":-3})j");
    CHECK(to_json(QuadValue::integer(2)).dump() == R"j({"a":4,"b":0,"D":0})j");
}

TEST_CASE("multiplicity vectors as JSON arrays and CSV rows") {
    const MultiplicityVector v = sn_multiplicity_vector(Partition{2, 1}, Partition{3});
    CHECK(to_json(v).dump() == "[0,1,1]");
    CHECK(csv_row(v) == "3,0,1,1");
}

TEST_CASE("bias results carry the per-prime conditions") {
    const Json j = to_json(bias(Partition{15, 9, 3}, 9));
    CHECK(j["d"] == 6);
    CHECK(j["abs_d"] == 6);
    CHECK(j["nonzero"] == true);
    REQUIRE(j["conditions"].size() == 2);
    CHECK(j["conditions"][0]["p"] == 5);
    CHECK(j["conditions"][1]["p"] == 3);
    CHECK(j["conditions"][1]["d"] == 2);
}

TEST_CASE("character tables use labels and value triples") {
    const Json j = to_json(character_table_an(3));
    CHECK(j["n"] == 3);
    CHECK(j["classes"][0]["label"] == "3:+");
    CHECK(j["classes"][0]["size"] == 1);
    CHECK(j["irreps"][1]["label"] == "2,1:+");
    CHECK(j["values"][1][0].dump() == R"j({"a":-1,"b":1,"D":-3})j");
}

TEST_CASE("global verdicts include witnesses and inner products") {
    const Json closed = to_json(is_global_class(Partition{2, 2}));
    CHECK(closed["in_scope"] == false);
    CHECK(closed["is_global"].is_null());
    CHECK_FALSE(closed.contains("witness"));

    const Json brute = to_json(global_brute_force(Partition{5, 3}));
    CHECK(brute["is_global"] == false);
    CHECK(brute["witness"]["irrep"] == "4,4");
    CHECK(brute["witness"]["multiplicity"] == 0);
    CHECK(brute["centralizer_order"] == 15);
    CHECK(brute["inner_products"][0]["irrep"] == "8");
}

TEST_CASE("exception rules and lists") {
    const Json rule = to_json(ExceptionRule{"an-invariant.3", "(4,4) at cycle type (5,3)"});
    CHECK(rule.dump() == R"j({"id":"an-invariant.3","description":"(4,4) at cycle type (5,3)"})j");
    const Json list = to_json(swanson_exceptions(4));
    CHECK(list[0]["lambda"] == "4");
    CHECK(list[0]["i"] == 1);
    CHECK_FALSE(list[0]["rule"].get<std::string>().empty());
}

TEST_CASE("JSON output round-trips") {
    for (const Json& j : {to_json(character_table_an(5)), to_json(global_brute_force(Partition{7, 1})),
                          to_json(bias(Partition{15, 9, 3}, 3))}) {
        CHECK(Json::parse(j.dump()) == j);
        CHECK(Json::parse(j.dump(2)).dump() == j.dump());
    }
}
