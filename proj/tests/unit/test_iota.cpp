#include "gkm/iota.hpp"
#include "gkm/monster.hpp"
#include "gkm/presets.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace gkm;

TEST_CASE("rank-2 alternating sequence") {
    auto z = rank2_crystal({2, 1, 1});
    const auto& iota = z.iota();
    CHECK(iota.at(1) == IndexId::plain(1));
    CHECK(iota.at(2) == IndexId::plain(2));
    CHECK(iota.at(3) == IndexId::plain(1));
    CHECK(iota.kminus(1) == 0);
    CHECK(iota.kminus(2) == 0);
    CHECK(iota.kplus(1) == 3);
    CHECK(iota.kplus(2) == 4);
    CHECK(iota.kminus(4) == 2);
}

TEST_CASE("toy monster block layout") {
    auto iota = monster_iota(toy_monster_config());
    // c(1) = 2, c(2) = 1: blocks end at 4, 8, 12, ...
    CHECK(iota.at(1) == IndexId::plain(-1));
    CHECK(iota.at(2) == IndexId::of_copy(1, 1));
    CHECK(iota.at(3) == IndexId::of_copy(1, 2));
    CHECK(iota.at(4) == IndexId::plain(-1));
    CHECK(iota.at(5) == IndexId::of_copy(1, 1));
    CHECK(iota.at(6) == IndexId::of_copy(1, 2));
    CHECK(iota.at(7) == IndexId::of_copy(2, 1));
    CHECK(iota.at(8) == IndexId::plain(-1));
    // Blocks past max_level repeat the capped level set.
    CHECK(iota.at(9) == IndexId::of_copy(1, 1));
    CHECK(iota.at(11) == IndexId::of_copy(2, 1));
    CHECK(iota.at(12) == IndexId::plain(-1));

    CHECK(iota.kminus(4) == 1);
    CHECK(iota.kplus(4) == 8);
    CHECK(iota.kminus(7) == 0);
    CHECK(iota.kplus(7) == 11);
    CHECK(iota.kminus(5) == 2);
}

TEST_CASE("navigation is involutive on samples") {
    const auto toy = monster_iota(toy_monster_config());
    const auto z3 = rank3_crystal({2, 1, 1, 1, 2, 1, 1, 1});
    for (const IotaSequence* iota : {&toy, &z3.iota()}) {
        for (Int k = 1; k <= 40; ++k) {
            const Int kp = iota->kplus(k);
            CHECK(iota->at(kp) == iota->at(k));
            CHECK(iota->kminus(kp) == k);
            const Int km = iota->kminus(k);
            if (km != 0)
                CHECK(iota->kplus(km) == k);
        }
    }
}

TEST_CASE("suffix shifts positions and navigation") {
    auto iota = monster_iota(toy_monster_config());
    auto shifted = iota.suffix(3);
    for (Int k = 1; k <= 20; ++k)
        CHECK(shifted.at(k) == iota.at(k + 3));
    CHECK(shifted.kminus(1) == 0);  // the earlier occurrence sits in the cut-away prefix
    CHECK(shifted.kminus(5) == 1);  // base positions 8 and 4 are both -1
    CHECK(shifted.kplus(1) == 5);
}

TEST_CASE("adjacent repeats are reported") {
    auto d = CartanDatum::from_matrix({IndexId::plain(1)}, {IndexClass::real}, {{2}});
    auto iota = IotaSequence::periodic(d, {}, {IndexId::plain(1), IndexId::plain(1)});
    auto report = check_prefix_constraints(iota, 6);
    REQUIRE_FALSE(report.ok());
    CHECK(report.issues.front().position == 1);
}

TEST_CASE("well-formed sequences pass the window checks") {
    auto z3 = rank3_crystal({2, 1, 1, 1, 2, 1, 1, 1});
    CHECK(check_prefix_constraints(z3.iota(), 20).ok());
    CHECK(check_prefix_constraints(monster_iota(toy_monster_config()), 30).ok());
}

TEST_CASE("periodic constructor demands full index coverage") {
    auto z = rank2_crystal({2, 1, 1});
    CHECK_THROWS_AS(IotaSequence::periodic(z.datum(), {}, {IndexId::plain(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        IotaSequence::periodic(z.datum(), {}, {IndexId::plain(1), IndexId::plain(7)}),
        std::invalid_argument);
}

TEST_CASE("real-scale charges keep positional queries exact") {
    auto iota = monster_iota(real_monster_config());
    CHECK(iota.at(1) == IndexId::plain(-1));
    CHECK(iota.at(2) == IndexId::of_copy(1, 1));
    CHECK(iota.at(196885) == IndexId::of_copy(1, 196884));
    CHECK(iota.at(196886) == IndexId::plain(-1));  // b(1)
    CHECK(iota.kplus(1) == 196886);
    CHECK(iota.kminus(196886) == 1);
}
