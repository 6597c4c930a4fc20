#pragma once

#include "gkm/bigint.hpp"
#include "gkm/path_vector.hpp"

#include <map>
#include <ostream>
#include <string>

namespace gkm {

// Finite-support integer linear functional psi(x) = sum psi_k x_k on path
// vectors. Coefficients stay integral under the piecewise-linear operators
// because those only add integer multiples of integer forms. Canonical:
// zero coefficients are never stored.
class LinearForm {
public:
    LinearForm() = default;

    static LinearForm zero() { return LinearForm(); }
    static LinearForm coordinate(const Int& k);

    Int coeff(const Int& k) const;
    bool is_zero() const { return coeffs_.empty(); }
    Int max_position() const { return coeffs_.empty() ? Int(0) : coeffs_.rbegin()->first; }

    void add(const Int& k, const Int& c);

    // this += c * other
    void add_scaled(const Int& c, const LinearForm& other);

    Int evaluate(const PathVector& x) const;

    const std::map<Int, Int>& coeffs() const { return coeffs_; }

    // "0", "x_2", "2x_3-x_4": ascending positions, coefficient 1 omitted.
    std::string str() const;

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LinearForm& a, const LinearForm& b) { return !(a == b); }
    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        return a.coeffs_ < b.coeffs_;
    }

private:
    std::map<Int, Int> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const LinearForm& f) { return os << f.str(); }

}  // namespace gkm
