#pragma once

#include "gkm/bigint.hpp"

#include <map>
#include <ostream>
#include <string>

namespace gkm {

// Finite-support sequence of nonnegative integers (..., x_k, ..., x_1),
// stored sparsely as position -> value with zeros absent, so equality is
// structural. Positions are 1-based; position 1 is the rightmost entry.
class PathVector {
public:
    PathVector() = default;

    static PathVector zero() { return PathVector(); }

    Int at(const Int& k) const;
    bool is_zero() const { return entries_.empty(); }

    // Largest position with a nonzero entry; 0 for the zero vector.
    Int max_position() const;

    // Sum of all entries (the total degree).
    Int degree() const;

    // x_k += delta; throws if the result would be negative.
    PathVector bumped(const Int& k, const Int& delta) const;

    void set(const Int& k, const Int& v);

    const std::map<Int, Int>& entries() const { return entries_; }

    // Text form "[x_N,...,x_1]" with trailing zeros stripped; the zero
    // vector renders as "[]".
    std::string str() const;
    static PathVector parse(const std::string& text);

    friend bool operator==(const PathVector& a, const PathVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const PathVector& a, const PathVector& b) { return !(a == b); }

    // Degree first, then lexicographic on the dense little-endian
    // expansion (x_1, x_2, ...); a deterministic total order used for
    // node sets and exports.
    friend bool operator<(const PathVector& a, const PathVector& b);

private:
    std::map<Int, Int> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const PathVector& x) { return os << x.str(); }

}  // namespace gkm
