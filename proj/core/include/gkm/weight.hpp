#pragma once

#include "gkm/bigint.hpp"
#include "gkm/index_id.hpp"

#include <map>
#include <ostream>
#include <string>

namespace gkm {

// Sparse element of the root lattice: a finite integer combination
// sum coeff[i] * alpha_i. Zero coefficients are never stored, so equality
// is structural.
class Weight {
public:
    Weight() = default;

    const std::map<IndexId, Int>& coeffs() const { return coeffs_; }
    Int coeff(const IndexId& i) const;
    bool is_zero() const { return coeffs_.empty(); }

    // coeff[i] += c, dropping the entry when it cancels to zero.
    void add_multiple_of_alpha(const IndexId& i, const Int& c);

    Weight& operator+=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) {
        a += b;
        return a;
    }

    // Sum of coordinates in the alpha basis, negated; for weights of path
    // vectors this is the total degree.
    Int height() const;

    // Compact deterministic rendering, e.g. "0", "-a(1)-2a(2_1)".
    std::string str() const;

    friend bool operator==(const Weight& a, const Weight& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.coeffs_ < b.coeffs_; }

private:
    std::map<IndexId, Int> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

}  // namespace gkm
