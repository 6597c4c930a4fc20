#pragma once

#include "gkm/bigint.hpp"
#include "gkm/cartan.hpp"
#include "gkm/index_id.hpp"
#include "gkm/iota.hpp"
#include "gkm/linear_form.hpp"
#include "gkm/path_crystal.hpp"
#include "gkm/path_vector.hpp"

#include <iosfwd>
#include <map>
#include <memory>
#include <string>

namespace gkm {

// Multiplicities c(i) of the Monster charge: c(-1) = 1 implicitly, and
// c(i) >= 1 for every declared level i >= 1. The two embedded defaults
// are the multiplicities printed for levels 1 and 2; anything beyond is
// user-supplied data.
class ChargeTable {
public:
    static ChargeTable from_levels(std::map<Int, Int> c);
    static ChargeTable toy();                // c(1) = 2, c(2) = 1
    static ChargeTable embedded_defaults();  // c(1) = 196884, c(2) = 21493760

    // File of lines "<level> <multiplicity>" merged over the embedded
    // defaults; duplicate levels, nonpositive multiplicities and garbage
    // are errors.
    static ChargeTable load(const std::string& path);
    static ChargeTable parse(std::istream& in);

    bool has(const Int& level) const { return c_.count(level) != 0; }
    Int at(const Int& level) const;  // throws std::invalid_argument when missing
    Int max_level() const { return c_.empty() ? Int(0) : c_.rbegin()->first; }
    const std::map<Int, Int>& levels() const { return c_; }

private:
    std::map<Int, Int> c_;  // level >= 1 -> multiplicity
};

// b(n) = n c(1) + (n-1) c(2) + ... + c(n) + n + 1, the position of the
// n-th recurrence of index -1. Requires charges through level n.
Int b_of_n(const ChargeTable& charges, const Int& n);

// sigma(n) = c(1) + ... + c(n).
Int sigma_sum(const ChargeTable& charges, const Int& n);

struct MonsterConfig {
    ChargeTable charges;
    Int max_level;  // level cutoff for the materialized index set / sequence
};

// Block geometry of the Monster sequence with levels capped at
// max_level: position 1 carries -1, block n then lists the copies of
// levels 1..min(n, max_level) in level order followed by -1. The cap
// keeps every position well defined with a finite charge table while
// agreeing with the uncapped layout through position b(max_level).
class MonsterLayout {
public:
    explicit MonsterLayout(const MonsterConfig& cfg);

    const ChargeTable& charges() const { return charges_; }
    const Int& level_cap() const { return cap_; }

    // b(n) extended past the cap by the constant capped block length;
    // block_end(0) = 1.
    Int block_end(const Int& n) const;

    IndexId index_at(const Int& k) const;
    Int kplus(const Int& k) const;
    Int kminus(const Int& k) const;

    // Block containing position k; position 1 counts as block 0.
    Int block_of(const Int& k) const;

    // Position of copy (level, t) inside block n (requires level <=
    // min(n, cap)).
    Int position_of(const Int& block, const Int& level, const Int& copy) const;

private:
    struct Spot {          // decoded position
        Int block;         // 0 for position 1
        Int level;         // 0 when the position carries -1
        Int copy;
    };
    Spot decode(const Int& k) const;

    ChargeTable charges_;
    Int cap_;
    std::vector<Int> sigma_;   // sigma_[l] = c(1) + ... + c(l), sigma_[0] = 0
    std::vector<Int> bends_;   // bends_[n] = block_end(n) for n <= cap
};

// Datum over {-1} and the capped copy set with a_pq = -(level_p + level_q).
CartanDatum monster_datum(const MonsterConfig& cfg);
IotaSequence monster_iota(const MonsterConfig& cfg);
PathCrystal monster_crystal(const MonsterConfig& cfg);

// The value S_{b(n)} x_{b(n)} as a linear form: for n >= 1 the weighted
// sum (level-1) * x over the copies in block n+1 minus x at the next -1
// position; for n = 0 it degenerates to -x_{b(1)} = -x_{c(1)+2}.
LinearForm monster_block_form(const MonsterLayout& layout, const Int& n);

// Closed-form membership test: every block form is nonnegative at x
// (with the n = 0 form forcing x_{c(1)+2} = 0), and every copy position
// with an earlier occurrence passes the gap condition, falling back to a
// strict block form between the occurrences when all imaginary terms in
// the gap vanish.
bool monster_member(const MonsterConfig& cfg, const PathVector& x);

}  // namespace gkm
