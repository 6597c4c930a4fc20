#include "gkm/cartan.hpp"
#include "gkm/presets.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace gkm;

namespace {

CartanDatum rank2_datum(long a, long b, long c) {
    return CartanDatum::from_matrix({IndexId::plain(1), IndexId::plain(2)},
                                    {IndexClass::imaginary, IndexClass::real},
                                    {{-a, -b}, {-c, 2}});
}

}  // namespace

TEST_CASE("monster datum satisfies the axioms") {
    CHECK(validate_datum(monster_datum(toy_monster_config())).ok());
    CHECK(validate_datum(monster_datum(real_monster_config())).ok());
}

TEST_CASE("minimal real datum is valid") {
    auto d = CartanDatum::from_matrix({IndexId::plain(1)}, {IndexClass::real}, {{2}});
    CHECK(validate_datum(d).ok());
}

TEST_CASE("asymmetric zero pattern is reported") {
    auto d = CartanDatum::from_matrix({IndexId::plain(1), IndexId::plain(2)},
                                      {IndexClass::real, IndexClass::real},
                                      {{2, 0}, {-1, 2}});
    auto report = validate_datum(d);
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations)
        if (v.axiom == "zero-symmetry")
            found = true;
    CHECK(found);
}

TEST_CASE("odd imaginary diagonal is rejected") {
    auto d = CartanDatum::from_matrix({IndexId::plain(1)}, {IndexClass::imaginary}, {{-3}});
    auto report = validate_datum(d);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().axiom == "evenness");
}

TEST_CASE("positive off-diagonal entries are reported") {
    auto d = CartanDatum::from_matrix({IndexId::plain(1), IndexId::plain(2)},
                                      {IndexClass::real, IndexClass::real},
                                      {{2, 1}, {1, 2}});
    auto report = validate_datum(d);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().axiom == "off-diagonal-sign");
}

TEST_CASE("symmetrizers are checked when present") {
    auto good = CartanDatum::from_matrix({IndexId::plain(1), IndexId::plain(2)},
                                         {IndexClass::imaginary, IndexClass::real},
                                         {{-4, -2}, {-3, 2}},
                                         std::vector<Int>{3, 2});
    CHECK(validate_datum(good).ok());

    auto bad = CartanDatum::from_matrix({IndexId::plain(1), IndexId::plain(2)},
                                        {IndexClass::imaginary, IndexClass::real},
                                        {{-4, -2}, {-3, 2}},
                                        std::vector<Int>{1, 1});
    CHECK_FALSE(validate_datum(bad).ok());
}

TEST_CASE("pairing on the zero weight vanishes") {
    auto d = rank2_datum(2, 1, 1);
    CHECK(pairing(d, IndexId::plain(1), Weight{}) == 0);
    CHECK(pairing(d, IndexId::plain(2), Weight{}) == 0);
}

TEST_CASE("pairing of h_2 with -alpha_1 recovers c") {
    for (long c : {1L, 3L}) {
        auto d = rank2_datum(4, 2, c);
        Weight w;
        w.add_multiple_of_alpha(IndexId::plain(1), -1);
        CHECK(pairing(d, IndexId::plain(2), w) == c);
    }
}

TEST_CASE("monster pairing across levels") {
    auto d = monster_datum(toy_monster_config());
    Weight w;
    w.add_multiple_of_alpha(IndexId::of_copy(2, 1), -1);
    CHECK(pairing(d, IndexId::of_copy(1, 1), w) == 3);  // -(-(1+2))
}

TEST_CASE("pairing rejects unknown indices") {
    auto d = rank2_datum(2, 1, 1);
    Weight w;
    w.add_multiple_of_alpha(IndexId::plain(7), 1);
    CHECK_THROWS_AS(pairing(d, IndexId::plain(1), w), std::invalid_argument);
}

TEST_CASE("pairing is additive") {
    auto z = rank3_crystal({2, 1, 1, 1, 2, 1, 1, 1});
    const auto& d = z.datum();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        Weight w1, w2;
        for (const auto& i : d.sample_indices()) {
            w1.add_multiple_of_alpha(i, coeff(rng));
            w2.add_multiple_of_alpha(i, coeff(rng));
        }
        for (const auto& i : d.sample_indices())
            CHECK(pairing(d, i, w1 + w2) == pairing(d, i, w1) + pairing(d, i, w2));
    }
}

TEST_CASE("validated data have consistent off-diagonal products") {
    for (auto z : {rank2_crystal({2, 1, 1}), rank3_crystal({0, 1, 2, 2, 0, 0, 1, 0})}) {
        const auto& d = z.datum();
        REQUIRE(validate_datum(d).ok());
        for (const auto& i : d.sample_indices())
            for (const auto& j : d.sample_indices()) {
                if (i == j)
                    continue;
                CHECK(d.entry(i, j) * d.entry(j, i) >= 0);
                CHECK((d.entry(i, j) == 0) == (d.entry(j, i) == 0));
            }
    }
}
