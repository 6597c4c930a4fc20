#include "gkm/monster.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gkm {

ChargeTable ChargeTable::from_levels(std::map<Int, Int> c) {
    for (const auto& [level, mult] : c) {
        if (level < 1)
            throw std::invalid_argument("charges: levels start at 1, got " + level.str());
        if (mult < 1)
            throw std::invalid_argument("charges: multiplicity at level " + level.str() +
                                        " must be positive, got " + mult.str());
    }
    ChargeTable t;
    t.c_ = std::move(c);
    return t;
}

ChargeTable ChargeTable::toy() { return from_levels({{1, 2}, {2, 1}}); }

ChargeTable ChargeTable::embedded_defaults() {
    return from_levels({{1, 196884}, {2, 21493760}});
}

ChargeTable ChargeTable::parse(std::istream& in) {
    std::map<Int, Int> parsed;
    std::string line;
    Int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = line;
        auto first = trimmed.find_first_not_of(" \t\r");
        if (first == std::string::npos || trimmed[first] == '#')
            continue;
        std::istringstream row(trimmed);
        std::string level_text, mult_text, extra;
        if (!(row >> level_text >> mult_text) || (row >> extra))
            throw std::invalid_argument("charges: malformed line " + line_no.str() + ": '" +
                                        line + "'");
        Int level = parse_int(level_text);
        Int mult = parse_int(mult_text);
        if (level < 1)
            throw std::invalid_argument("charges: level must be >= 1 on line " + line_no.str());
        if (mult < 1)
            throw std::invalid_argument("charges: multiplicity must be positive on line " +
                                        line_no.str());
        if (!parsed.emplace(level, mult).second)
            throw std::invalid_argument("charges: duplicate level " + level.str() + " on line " +
                                        line_no.str());
    }
    std::map<Int, Int> merged = embedded_defaults().c_;
    for (const auto& [level, mult] : parsed)
        merged[level] = mult;
    return from_levels(std::move(merged));
}

ChargeTable ChargeTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("charges: cannot open '" + path + "'");
    return parse(in);
}

Int ChargeTable::at(const Int& level) const {
    auto it = c_.find(level);
    if (it == c_.end())
        throw std::invalid_argument("charges: level " + level.str() + " is not defined");
    return it->second;
}

Int b_of_n(const ChargeTable& charges, const Int& n) {
    if (n < 1)
        throw std::invalid_argument("b(n): n must be >= 1");
    Int total = n + 1;
    for (Int k = 1; k <= n; ++k)
        total += (n + 1 - k) * charges.at(k);
    return total;
}

Int sigma_sum(const ChargeTable& charges, const Int& n) {
    if (n < 1)
        throw std::invalid_argument("sigma(n): n must be >= 1");
    Int total = 0;
    for (Int k = 1; k <= n; ++k)
        total += charges.at(k);
    return total;
}

MonsterLayout::MonsterLayout(const MonsterConfig& cfg) : charges_(cfg.charges), cap_(cfg.max_level) {
    if (cap_ < 1)
        throw std::invalid_argument("monster: max_level must be >= 1");
    sigma_.push_back(0);
    bends_.push_back(1);  // block_end(0): position 1 carries -1
    for (Int l = 1; l <= cap_; ++l) {
        if (!charges_.has(l))
            throw std::invalid_argument("monster: charge level " + l.str() +
                                        " required by max_level is not defined");
        sigma_.push_back(sigma_.back() + charges_.at(l));
        bends_.push_back(bends_.back() + sigma_.back() + 1);
    }
}

Int MonsterLayout::block_end(const Int& n) const {
    if (n < 0)
        throw std::invalid_argument("monster: block index must be >= 0");
    if (n <= cap_)
        return bends_[static_cast<std::size_t>(n)];
    return bends_.back() + (n - cap_) * (sigma_.back() + 1);
}

MonsterLayout::Spot MonsterLayout::decode(const Int& k) const {
    if (k < 1)
        throw std::invalid_argument("monster: positions start at 1");
    if (k == 1)
        return {0, 0, 0};

    Int block, offset, block_len;
    const Int last_cached = bends_.back();
    if (k <= last_cached) {
        auto it = std::lower_bound(bends_.begin(), bends_.end(), k);
        block = Int(it - bends_.begin());  // smallest n with block_end(n) >= k
        offset = k - bends_[static_cast<std::size_t>(block - 1)];
        block_len = sigma_[static_cast<std::size_t>(block < cap_ ? block : cap_)] + 1;
    } else {
        const Int len = sigma_.back() + 1;
        const Int past = k - last_cached;
        const Int q = (past + len - 1) / len;
        block = cap_ + q;
        offset = k - (last_cached + (q - 1) * len);
        block_len = len;
    }
    if (offset == block_len)
        return {block, 0, 0};  // the -1 closing the block
    auto lvl = std::upper_bound(sigma_.begin(), sigma_.end(), offset - 1) - sigma_.begin();
    return {block, Int(lvl), offset - sigma_[static_cast<std::size_t>(lvl - 1)]};
}

IndexId MonsterLayout::index_at(const Int& k) const {
    const Spot s = decode(k);
    if (s.level == 0)
        return IndexId::plain(-1);
    return IndexId::of_copy(s.level, s.copy);
}

Int MonsterLayout::position_of(const Int& block, const Int& level, const Int& copy) const {
    return block_end(block - 1) + sigma_[static_cast<std::size_t>(level - 1)] + copy;
}

Int MonsterLayout::kplus(const Int& k) const {
    const Spot s = decode(k);
    if (s.level == 0)
        return block_end(s.block + 1);
    return position_of(s.block + 1, s.level, s.copy);
}

Int MonsterLayout::block_of(const Int& k) const { return decode(k).block; }

Int MonsterLayout::kminus(const Int& k) const {
    const Spot s = decode(k);
    if (s.level == 0)
        return s.block == 0 ? Int(0) : block_end(s.block - 1);
    // Level l first appears in block l.
    if (s.block == s.level)
        return 0;
    return position_of(s.block - 1, s.level, s.copy);
}

namespace {

class MonsterDatum final : public CartanDatum::Impl {
public:
    explicit MonsterDatum(const MonsterConfig& cfg)
        : charges_(cfg.charges), cap_(cfg.max_level) {
        samples_.push_back(IndexId::plain(-1));
        const Int sample_levels = cap_ < 5 ? cap_ : Int(5);
        for (Int l = 1; l <= sample_levels; ++l) {
            const Int copies = charges_.at(l) < 4 ? charges_.at(l) : Int(4);
            for (Int t = 1; t <= copies; ++t)
                samples_.push_back(IndexId::of_copy(l, t));
        }
    }

    bool has_index(const IndexId& i) const override {
        if (i.copy == 0)
            return i.level == -1;
        return i.level >= 1 && i.level <= cap_ && i.copy >= 1 && i.copy <= charges_.at(i.level);
    }

    Int entry(const IndexId& i, const IndexId& j) const override {
        require(i);
        require(j);
        return -(i.level + j.level);
    }

    IndexClass classify(const IndexId& i) const override {
        require(i);
        return i.level == -1 ? IndexClass::real : IndexClass::imaginary;
    }

    std::optional<Int> symmetrizer(const IndexId& i) const override {
        require(i);
        return Int(1);  // the matrix is symmetric
    }

    const std::vector<IndexId>& sample_indices() const override { return samples_; }

    std::string family() const override { return "monster"; }

private:
    void require(const IndexId& i) const {
        if (!has_index(i))
            throw std::invalid_argument("monster datum: unknown index " + i.str());
    }

    ChargeTable charges_;
    Int cap_;
    std::vector<IndexId> samples_;
};

class MonsterIota final : public IotaSequence::Impl {
public:
    explicit MonsterIota(std::shared_ptr<const MonsterLayout> layout)
        : layout_(std::move(layout)) {}

    IndexId at(const Int& k) const override { return layout_->index_at(k); }
    Int kplus(const Int& k) const override { return layout_->kplus(k); }
    Int kminus(const Int& k) const override { return layout_->kminus(k); }
    std::string describe() const override {
        return "monster(max_level=" + layout_->level_cap().str() + ")";
    }

private:
    std::shared_ptr<const MonsterLayout> layout_;
};

}  // namespace

CartanDatum monster_datum(const MonsterConfig& cfg) {
    return CartanDatum(std::make_shared<MonsterDatum>(cfg));
}

IotaSequence monster_iota(const MonsterConfig& cfg) {
    return IotaSequence(std::make_shared<MonsterIota>(std::make_shared<MonsterLayout>(cfg)));
}

PathCrystal monster_crystal(const MonsterConfig& cfg) {
    return PathCrystal(monster_datum(cfg), monster_iota(cfg));
}

LinearForm monster_block_form(const MonsterLayout& layout, const Int& n) {
    if (n < 0)
        throw std::invalid_argument("monster: block form index must be >= 0");
    LinearForm f;
    const Int levels = (n + 1) < layout.level_cap() ? (n + 1) : layout.level_cap();
    for (Int l = 2; l <= levels; ++l)
        for (Int t = 1; t <= layout.charges().at(l); ++t)
            f.add(layout.position_of(n + 1, l, t), l - 1);
    f.add(layout.block_end(n + 1), -1);
    return f;
}

bool monster_member(const MonsterConfig& cfg, const PathVector& x) {
    const MonsterLayout layout(cfg);
    const PathCrystal z = monster_crystal(cfg);
    const Int top = x.max_position();

    for (Int n = 0; layout.block_end(n) < top; ++n)
        if (monster_block_form(layout, n).evaluate(x) < 0)
            return false;

    for (const auto& [k, xk] : x.entries()) {
        const IndexId ik = z.iota().at(k);
        if (ik.copy == 0)
            continue;  // -1 positions are covered by the block forms
        const Int prev = layout.kminus(k);
        if (prev == 0)
            continue;
        if (z.gap_sum(x, ik, prev, k) >= 0)
            return false;

        bool imaginary_terms_vanish = true;
        for (auto jt = x.entries().upper_bound(prev);
             jt != x.entries().end() && jt->first < k; ++jt) {
            const IndexId ij = z.iota().at(jt->first);
            if (ij.copy != 0 && z.datum().entry(ik, ij) * jt->second != 0) {
                imaginary_terms_vanish = false;
                break;
            }
        }
        if (!imaginary_terms_vanish)
            continue;

        // Exactly one -1 separates the occurrence in the previous block
        // from this one; the block form there must be strictly positive.
        if (monster_block_form(layout, layout.block_of(k) - 1).evaluate(x) <= 0)
            return false;
    }
    return true;
}

}  // namespace gkm
