#pragma once

#include "gkm/bigint.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace gkm {

// Identifier of a simple root. Plain indices (copy == 0) cover explicit
// finite index sets; (level, copy) pairs with copy >= 1 name the copies of
// a repeated root in a charged family, e.g. 2_1 is the first copy at
// level 2. Ordering is lexicographic on (level, copy) so every container
// iterates deterministically.
struct IndexId {
    Int level;
    Int copy;  // 0 for plain indices, >= 1 for family copies

    static IndexId plain(Int lvl) { return IndexId{std::move(lvl), 0}; }
    static IndexId of_copy(Int lvl, Int cp) { return IndexId{std::move(lvl), std::move(cp)}; }

    bool is_copy() const { return copy != 0; }

    // "3" for plain indices, "2_1" for copies.
    std::string str() const {
        if (copy == 0)
            return level.str();
        return level.str() + "_" + copy.str();
    }

    static std::optional<IndexId> parse(const std::string& text);

    friend bool operator==(const IndexId& a, const IndexId& b) {
        return a.level == b.level && a.copy == b.copy;
    }
    friend bool operator!=(const IndexId& a, const IndexId& b) { return !(a == b); }
    friend bool operator<(const IndexId& a, const IndexId& b) {
        if (a.level != b.level)
            return a.level < b.level;
        return a.copy < b.copy;
    }
};

inline std::ostream& operator<<(std::ostream& os, const IndexId& i) { return os << i.str(); }

inline std::optional<IndexId> IndexId::parse(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    auto sep = text.find('_');
    try {
        if (sep == std::string::npos)
            return IndexId::plain(Int(text));
        return IndexId::of_copy(Int(text.substr(0, sep)), Int(text.substr(sep + 1)));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace gkm
