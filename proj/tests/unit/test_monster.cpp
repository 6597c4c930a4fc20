#include "gkm/monster.hpp"

#include "gkm/polyhedral.hpp"
#include "gkm/presets.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <sstream>

using namespace gkm;
using gkm::test::pv;

TEST_CASE("boundary positions from toy charges") {
    auto charges = ChargeTable::toy();
    CHECK(b_of_n(charges, 1) == 4);
    CHECK(b_of_n(charges, 2) == 8);  // 2*2 + 1*1 + 2 + 1
    CHECK(sigma_sum(charges, 1) == 2);
    CHECK(sigma_sum(charges, 2) == 3);
}

TEST_CASE("boundary positions from the embedded charges") {
    auto charges = ChargeTable::embedded_defaults();
    CHECK(b_of_n(charges, 1) == 196886);
    CHECK(sigma_sum(charges, 1) == 196884);
    CHECK(sigma_sum(charges, 2) == Int("21690644"));
    CHECK(b_of_n(charges, 2) == 2 * 196884 + 21493760 + 3);
}

TEST_CASE("missing charge levels are input errors") {
    auto charges = ChargeTable::toy();
    CHECK_THROWS_AS(b_of_n(charges, 3), std::invalid_argument);
    CHECK_THROWS_AS(sigma_sum(charges, 5), std::invalid_argument);
}

TEST_CASE("consecutive boundaries differ by sigma plus one") {
    auto charges = ChargeTable::embedded_defaults();
    for (Int n = 1; n < 2; ++n)
        CHECK(b_of_n(charges, n + 1) - b_of_n(charges, n) == sigma_sum(charges, n + 1) + 1);
    auto layout = MonsterLayout(toy_monster_config());
    for (Int n = 0; n <= 6; ++n)
        CHECK(layout.block_end(n + 1) - layout.block_end(n) <= sigma_sum(layout.charges(), 2) + 1);
}

TEST_CASE("layout boundaries match the closed formula inside the cap") {
    auto cfg = toy_monster_config();
    auto layout = MonsterLayout(cfg);
    CHECK(layout.block_end(0) == 1);
    for (Int n = 1; n <= cfg.max_level; ++n)
        CHECK(layout.block_end(n) == b_of_n(cfg.charges, n));
    // Past the cap the block length is constant.
    CHECK(layout.block_end(3) == 12);
    CHECK(layout.block_end(4) == 16);
}

TEST_CASE("the -1 slots are exactly the block ends") {
    auto cfg = toy_monster_config();
    auto layout = MonsterLayout(cfg);
    auto iota = monster_iota(cfg);
    std::set<Int> ends;
    for (Int n = 0; n <= 5; ++n)
        ends.insert(layout.block_end(n));
    for (Int k = 1; k <= layout.block_end(5); ++k)
        CHECK((iota.at(k) == IndexId::plain(-1)) == (ends.count(k) == 1));
}

TEST_CASE("no adjacent repeats in the monster sequence") {
    auto iota = monster_iota(toy_monster_config());
    CHECK(check_prefix_constraints(iota, 60).ok());
}

TEST_CASE("block forms agree with the piecewise-linear operator") {
    auto cfg = toy_monster_config();
    auto layout = MonsterLayout(cfg);
    auto z = monster_crystal(cfg);
    CHECK(monster_block_form(layout, 0) ==
          apply_s(z, LinearForm::coordinate(1), 1));
    for (Int n = 1; n <= 3; ++n) {
        const Int bn = layout.block_end(n);
        CHECK(monster_block_form(layout, n) ==
              apply_s(z, LinearForm::coordinate(bn), bn));
    }
}

TEST_CASE("membership accepts the highest element and rejects x at b(1)") {
    auto cfg = toy_monster_config();
    CHECK(monster_member(cfg, PathVector::zero()));
    // Position c(1)+2 = 4 must stay empty.
    CHECK_FALSE(monster_member(cfg, pv({0, 0, 0, 1})));
    CHECK_FALSE(monster_member(cfg, pv({1, 1, 0, 2})));
}

TEST_CASE("membership needs earlier support for repeated copies") {
    auto cfg = toy_monster_config();
    // x_5 > 0 repeats copy 1_1 (positions 2 and 5); the gap (2,5) holds
    // 1_2 and -1, and <h_1, alpha_1> = -2, <h_1, alpha_{-1}> = 0.
    CHECK_FALSE(monster_member(cfg, pv({0, 0, 0, 0, 1})));
    CHECK(monster_member(cfg, pv({0, 1, 1, 0, 1})));
}

TEST_CASE("charge files parse, merge and reject garbage") {
    {
        std::istringstream in("1 2\n2 1\n");
        auto t = ChargeTable::parse(in);
        CHECK(t.at(1) == 2);
        CHECK(t.at(2) == 1);
    }
    {
        std::istringstream in("1 196884\n");
        auto t = ChargeTable::parse(in);
        CHECK(t.at(1) == 196884);
        CHECK(t.at(2) == 21493760);  // default retained
    }
    {
        std::istringstream in("3 100\n");
        auto t = ChargeTable::parse(in);
        CHECK(t.max_level() == 3);
        CHECK(t.at(1) == 196884);
    }
    {
        std::istringstream in("1 0\n");
        CHECK_THROWS_AS(ChargeTable::parse(in), std::invalid_argument);
    }
    {
        std::istringstream in("1 2 3\n");
        CHECK_THROWS_AS(ChargeTable::parse(in), std::invalid_argument);
    }
    {
        std::istringstream in("1 2\n1 3\n");
        CHECK_THROWS_AS(ChargeTable::parse(in), std::invalid_argument);
    }
    {
        std::istringstream in("x 2\n");
        CHECK_THROWS_AS(ChargeTable::parse(in), std::invalid_argument);
    }
}

TEST_CASE("configs demand charges through the cap") {
    MonsterConfig cfg{ChargeTable::toy(), 3};
    CHECK_THROWS_AS(MonsterLayout{cfg}, std::invalid_argument);
    CHECK_THROWS_AS(monster_iota(cfg), std::invalid_argument);
}
