#pragma once

#include "gkm/bigint.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

namespace gkm::detail {

using ordered_json = nlohmann::ordered_json;

// Arbitrary-precision values ride as JSON numbers while they fit in 64
// bits and as decimal strings beyond that; parsing accepts both.
inline ordered_json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi)
        return ordered_json(static_cast<std::int64_t>(v));
    return ordered_json(v.str());
}

inline Int int_from_json(const ordered_json& j) {
    if (j.is_string())
        return parse_int(j.get<std::string>());
    if (j.is_number_integer())
        return Int(j.get<std::int64_t>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

}  // namespace gkm::detail
