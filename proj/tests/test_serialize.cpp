#include <doctest.h>

#include "perilink/serialize.hpp"

using namespace perilink;

TEST_CASE("weights and parity weights") {
    CHECK(to_json(Weight{2, 0, -1}).dump() == "[2,0,-1]");
    CHECK(weight_from_json(Json::parse("[1,1]")) == Weight{1, 1});
    CHECK_THROWS_AS(weight_from_json(Json::parse("[1]")), std::invalid_argument);
    CHECK_THROWS_AS(weight_from_json(Json::parse("\"x\"")), std::invalid_argument);
    CHECK(to_json(ParityWeight(Weight{0, 0}, 1)).dump() == R"({"weight":[0,0],"parity":1})");
    CHECK_THROWS_AS(parity_weight_from_json(Json::parse(R"({"weight":[0,0],"parity":3})")), std::invalid_argument);
}

TEST_CASE("moves") {
    CHECK(to_json(Move::even(Reflection{1, 4, 1})).dump() == R"({"kind":"even_reflection","i":1,"j":4,"k":1})");
    CHECK(to_json(Move::up_2e(1)).dump() == R"({"kind":"odd_up_2e","j":1})");
    CHECK(to_json(Move::down_pair(2)).dump() == R"({"kind":"odd_down_pair","i":2})");
    CHECK(to_json(Move::jump(Weight{2, 1})).dump() == R"({"kind":"donkin_jump","target":[2,1]})");
    for (const Move& m : {Move::even(Reflection{2, 3, -1}), Move::jump(Weight{1, 0}), Move::up_2e(2), Move::up_pair(1),
                          Move::down_2e(3), Move::down_pair(4)})
        CHECK(move_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(move_from_json(Json::parse(R"({"kind":"odd_up_2e","j":0})")), std::invalid_argument);
    CHECK_THROWS_AS(move_from_json(Json::parse(R"({"kind":"warp"})")), std::invalid_argument);
}

TEST_CASE("certificates") {
    const Certificate c{3, ParityWeight(Weight{0, 0}, 0), {Move::up_pair(1)}, ParityWeight(Weight{1, 1}, 1),
                        EligibilityMode::strict};
    const Json j = to_json(c);
    CHECK(certificate_from_json(j) == c);
    Json bare = j;
    bare.erase("mode");
    CHECK(certificate_from_json(bare).mode == EligibilityMode::nonstrict);
    CHECK(mode_from_name(mode_name(EligibilityMode::strict)) == EligibilityMode::strict);
    CHECK_THROWS_AS(mode_from_name("lenient"), std::invalid_argument);
}

TEST_CASE("reports") {
    const IrreducibilityVerdict v{false, {{1, 2}}};
    CHECK(to_json(v).dump() == R"({"irreducible":false,"failing_pairs":[[1,2]]})");
    CHECK(to_json(Verification{}).dump() == R"({"ok":true})");
    SearchOptions o;
    o.p = 3;
    const Json census = to_json(block_census(2, o, -1, 1));
    CHECK(census.at("four_blocks") == true);
    CHECK(census.at("representatives").size() == 4);
    // Same input, same bytes.
    CHECK(census.dump() == to_json(block_census(2, o, -1, 1)).dump());
}
