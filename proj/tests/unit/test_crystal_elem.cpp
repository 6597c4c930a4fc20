#include "gkm/axioms.hpp"
#include "gkm/crystal_elem.hpp"
#include "gkm/presets.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace gkm;
using gkm::test::pv;

namespace {

const IndexId one = IndexId::plain(1);
const IndexId two = IndexId::plain(2);

// Right-associated evaluation of the product rules, used as the second
// route for the associativity checks.
std::optional<CrystalElem> act_right_assoc(const std::vector<CrystalElem>& factors,
                                           const IndexId& i, bool lowering) {
    if (factors.size() == 1) {
        return lowering ? factors.front().lower(i) : factors.front().raise(i);
    }
    const CrystalElem& head = factors.front();
    std::vector<CrystalElem> rest(factors.begin() + 1, factors.end());
    const ExtInt phi_head = head.phi(i);
    const ExtInt eps_rest = CrystalElem::tensor(rest).epsilon(i);
    const CartanDatum& d = head.datum();

    bool act_head;
    if (lowering) {
        act_head = phi_head > eps_rest;
    } else if (d.is_real(i)) {
        act_head = phi_head >= eps_rest;
    } else {
        const Int aii = d.entry(i, i);
        if (phi_head > eps_rest - aii)
            act_head = true;
        else if (phi_head <= eps_rest)
            act_head = false;
        else
            return std::nullopt;
    }

    if (act_head) {
        auto moved = lowering ? head.lower(i) : head.raise(i);
        if (!moved)
            return std::nullopt;
        std::vector<CrystalElem> out{*moved};
        out.insert(out.end(), rest.begin(), rest.end());
        return CrystalElem::tensor(out);
    }
    auto moved = act_right_assoc(rest, i, lowering);
    if (!moved)
        return std::nullopt;
    return CrystalElem::tensor({head, *moved});
}

// Element with its phi table disturbed at one index; a negative control
// for the axiom checker.
class CorruptPhi final : public CrystalElem::Impl {
public:
    CorruptPhi(CrystalElem base, IndexId at, Int delta)
        : base_(std::move(base)), at_(std::move(at)), delta_(std::move(delta)) {}

    const CartanDatum& datum() const override { return base_.datum(); }
    Weight weight() const override { return base_.weight(); }
    ExtInt epsilon(const IndexId& i) const override { return base_.epsilon(i); }
    ExtInt phi(const IndexId& i) const override {
        ExtInt ph = base_.phi(i);
        return i == at_ ? ph + ExtInt(delta_) : ph;
    }
    std::optional<CrystalElem> raise(const IndexId& i) const override { return base_.raise(i); }
    std::optional<CrystalElem> lower(const IndexId& i) const override { return base_.lower(i); }
    bool equals(const Impl& other) const override {
        auto* o = dynamic_cast<const CorruptPhi*>(&other);
        return o != nullptr && o->base_ == base_;
    }
    std::string str() const override { return "corrupt(" + base_.str() + ")"; }

private:
    CrystalElem base_;
    IndexId at_;
    Int delta_;
};

}  // namespace

TEST_CASE("elementary statistics match the defining table") {
    auto z = rank2_crystal({2, 1, 1});
    const auto& d = z.datum();

    auto real3 = CrystalElem::elementary(d, two, 3);
    CHECK(real3.epsilon(two) == ExtInt(3));
    CHECK(real3.phi(two) == ExtInt(-3));

    auto imag3 = CrystalElem::elementary(d, one, 3);  // a_11 = -2
    CHECK(imag3.epsilon(one) == ExtInt(0));
    CHECK(imag3.phi(one) == ExtInt(6));

    CHECK(real3.epsilon(one) == ExtInt::minus_inf());
    CHECK(real3.phi(one) == ExtInt::minus_inf());

    Weight expected;
    expected.add_multiple_of_alpha(two, -3);
    CHECK(real3.weight() == expected);
}

TEST_CASE("cross-index operators vanish on elementary elements") {
    auto z = rank2_crystal({2, 1, 1});
    auto b = CrystalElem::elementary(z.datum(), one, 2);
    CHECK_FALSE(b.lower(two).has_value());
    CHECK_FALSE(b.raise(two).has_value());
    CHECK_FALSE(CrystalElem::elementary(z.datum(), one, 0).raise(one).has_value());
}

TEST_CASE("tensor weight adds factor weights") {
    auto z = rank2_crystal({2, 1, 1});
    auto t = CrystalElem::tensor({CrystalElem::elementary(z.datum(), two, 1),
                                  CrystalElem::elementary(z.datum(), one, 2)});
    Weight expected;
    expected.add_multiple_of_alpha(two, -1);
    expected.add_multiple_of_alpha(one, -2);
    CHECK(t.weight() == expected);
}

TEST_CASE("tensor statistics fold the binary rule") {
    auto z = rank2_crystal({2, 1, 1});
    const auto& d = z.datum();
    auto t0 = CrystalElem::tensor(
        {CrystalElem::elementary(d, two, 0), CrystalElem::elementary(d, two, 0)});
    CHECK(t0.epsilon(two) == ExtInt(0));

    auto t1 = CrystalElem::tensor(
        {CrystalElem::elementary(d, two, 1), CrystalElem::elementary(d, two, 0)});
    CHECK(t1.phi(two) == ExtInt(0));  // max(-1 + 0, 0)
}

TEST_CASE("lowering a balanced real tensor acts on the right factor") {
    auto z = rank2_crystal({2, 1, 1});
    const auto& d = z.datum();
    auto t = CrystalElem::tensor(
        {CrystalElem::elementary(d, two, 0), CrystalElem::elementary(d, two, 0)});
    auto lowered = t.lower(two);
    REQUIRE(lowered.has_value());
    CHECK(lowered->factors()[0].elementary_n() == 0);
    CHECK(lowered->factors()[1].elementary_n() == 1);
}

TEST_CASE("imaginary raising has a dead zone") {
    auto z = rank2_crystal({2, 1, 1});
    // phi_1 of the path factor is 1, epsilon_1 of b_1(0) is 0 and
    // a_11 = -2: the comparison lands strictly between the two branches.
    auto left = CrystalElem::path(z, pv({0, 1}));
    CHECK(left.phi(one) == ExtInt(1));
    auto t = CrystalElem::tensor({left, CrystalElem::elementary(z.datum(), one, 0)});
    CHECK_FALSE(t.raise(one).has_value());
}

TEST_CASE("raising inverts lowering on random elementary tensors") {
    auto z = rank2_crystal({4, 2, 3});
    const auto& d = z.datum();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> small(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<CrystalElem> factors;
        for (Int k = 4; k >= 1; --k)
            factors.push_back(CrystalElem::elementary(d, z.iota().at(k), small(rng)));
        auto t = CrystalElem::tensor(factors);
        for (const auto& i : {one, two}) {
            auto lowered = t.lower(i);
            if (!lowered)
                continue;
            auto back = lowered->raise(i);
            REQUIRE(back.has_value());
            CHECK(*back == t);
        }
    }
}

TEST_CASE("flat fold agrees with right-associated bracketing") {
    auto z = rank3_crystal({2, 1, 1, 1, 2, 1, 1, 1});
    const auto& d = z.datum();
    auto indices = gkm::test::window_indices(z, 6);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> small(0, 2);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<CrystalElem> factors;
        for (Int k = 3; k >= 1; --k)
            factors.push_back(CrystalElem::elementary(d, z.iota().at(k), small(rng)));
        auto flat = CrystalElem::tensor(factors);
        for (const auto& i : indices) {
            // Statistics across the two bracketings.
            auto left_pair = CrystalElem::tensor(
                {CrystalElem::tensor({factors[0], factors[1]}), factors[2]});
            auto right_pair = CrystalElem::tensor(
                {factors[0], CrystalElem::tensor({factors[1], factors[2]})});
            CHECK(left_pair.epsilon(i) == right_pair.epsilon(i));
            CHECK(left_pair.phi(i) == right_pair.phi(i));
            CHECK(flat.epsilon(i) == right_pair.epsilon(i));
            CHECK(flat.phi(i) == right_pair.phi(i));

            // Operators across the two bracketings.
            for (bool lowering : {true, false}) {
                auto via_flat = lowering ? flat.lower(i) : flat.raise(i);
                auto via_right = act_right_assoc(factors, i, lowering);
                CHECK(via_flat.has_value() == via_right.has_value());
                if (via_flat && via_right)
                    CHECK(*via_flat == *via_right);
            }
        }
    }
}

TEST_CASE("axiom checker accepts elementary crystals") {
    auto z = rank2_crystal({2, 1, 1});
    const auto& d = z.datum();
    std::vector<CrystalElem> elems;
    for (const auto& i : {one, two})
        for (Int n = 0; n <= 20; ++n)
            elems.push_back(CrystalElem::elementary(d, i, n));
    std::vector<IndexId> indices{one, two};
    auto report = check_crystal_axioms(elems, indices);
    CHECK(report.ok());
    CHECK(report.checks == elems.size() * indices.size());
}

TEST_CASE("axiom checker accepts path vectors of small support") {
    auto z = rank2_crystal({2, 1, 1});
    std::vector<CrystalElem> elems;
    gkm::test::for_each_vector(6, 4, [&](const PathVector& x) {
        elems.push_back(CrystalElem::path(z, x));
    });
    std::vector<IndexId> indices{one, two};
    CHECK(check_crystal_axioms(elems, indices).ok());
}

TEST_CASE("axiom checker flags a corrupted phi table") {
    auto z = rank2_crystal({2, 1, 1});
    std::vector<CrystalElem> elems{CrystalElem(std::make_shared<CorruptPhi>(
        CrystalElem::elementary(z.datum(), two, 1), two, 5))};
    std::vector<IndexId> indices{two};
    auto report = check_crystal_axioms(elems, indices);
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations)
        if (v.axiom == "phi-eps-pairing")
            found = true;
    CHECK(found);
}
