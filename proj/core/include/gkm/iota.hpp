#pragma once

#include "gkm/bigint.hpp"
#include "gkm/cartan.hpp"
#include "gkm/index_id.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gkm {

// The driving sequence iota = (..., i_k, ..., i_1), stored rightmost
// first: position 1 is the rightmost entry and every position k >= 1 is
// defined. Provides the positional navigation kplus / kminus (next and
// previous occurrence of the same index; kminus is 0 at a first
// occurrence). Immutable and cheap to copy.
class IotaSequence {
public:
    class Impl {
    public:
        virtual ~Impl() = default;
        virtual IndexId at(const Int& k) const = 0;  // k >= 1
        virtual Int kplus(const Int& k) const;       // generic forward scan
        virtual Int kminus(const Int& k) const;      // generic backward scan
        virtual std::string describe() const = 0;
    };

    explicit IotaSequence(std::shared_ptr<const Impl> impl);

    // Finite prefix followed by a repeating period. The period must
    // contain every index of the datum, otherwise some index would occur
    // only finitely often. Adjacent repeats are tolerated here and
    // reported by check_prefix_constraints.
    static IotaSequence periodic(const CartanDatum& datum, std::vector<IndexId> prefix,
                                 std::vector<IndexId> period);

    IndexId at(const Int& k) const;
    Int kplus(const Int& k) const;
    Int kminus(const Int& k) const;

    // View of the sequence with the first `offset` positions removed.
    IotaSequence suffix(const Int& offset) const;

    std::string describe() const { return impl_->describe(); }

private:
    std::shared_ptr<const Impl> impl_;
};

struct SequenceIssue {
    Int position;
    std::string what;
};

struct SequenceReport {
    std::vector<SequenceIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Verifies i_k != i_{k+1} on positions 1..window and that every index seen
// in the window occurs at least twice there (a finite-window proxy for
// infinite recurrence).
SequenceReport check_prefix_constraints(const IotaSequence& s, const Int& window);

}  // namespace gkm
