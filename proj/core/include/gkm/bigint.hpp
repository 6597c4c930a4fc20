#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gkm {

// Exact integer used for matrix entries, positions, coordinates and
// linear-form coefficients. Charged families make several of these grow
// without bound (level multiplicities, block boundaries), so the whole
// library runs on arbitrary precision. Expression templates are off:
// arithmetic yields plain values, so auto and .str() behave normally.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

inline std::string to_string(const Int& v) { return v.str(); }

inline Int parse_int(const std::string& text) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
}

// Smallest nonnegative remainder of a mod m (m > 0).
inline Int floor_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0)
        r += m;
    return r;
}

}  // namespace gkm
