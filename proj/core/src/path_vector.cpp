#include "gkm/path_vector.hpp"

#include <stdexcept>
#include <vector>

namespace gkm {

Int PathVector::at(const Int& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? Int(0) : it->second;
}

Int PathVector::max_position() const {
    return entries_.empty() ? Int(0) : entries_.rbegin()->first;
}

Int PathVector::degree() const {
    Int total = 0;
    for (const auto& [k, v] : entries_)
        total += v;
    return total;
}

void PathVector::set(const Int& k, const Int& v) {
    if (k < 1)
        throw std::invalid_argument("path vector: positions start at 1");
    if (v < 0)
        throw std::invalid_argument("path vector: negative entry at position " + k.str());
    if (v == 0)
        entries_.erase(k);
    else
        entries_[k] = v;
}

PathVector PathVector::bumped(const Int& k, const Int& delta) const {
    PathVector out = *this;
    out.set(k, at(k) + delta);
    return out;
}

std::string PathVector::str() const {
    std::string out = "[";
    const Int top = max_position();
    for (Int k = top; k >= 1; --k) {
        out += at(k).str();
        if (k > 1)
            out += ",";
    }
    return out + "]";
}

PathVector PathVector::parse(const std::string& text) {
    std::string body = text;
    if (body.size() >= 2 && body.front() == '[' && body.back() == ']')
        body = body.substr(1, body.size() - 2);
    PathVector out;
    if (body.empty())
        return out;
    std::vector<Int> values;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = body.find(',', start);
        std::string token = body.substr(start, comma == std::string::npos ? comma : comma - start);
        values.push_back(parse_int(token));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    // Text form lists x_N first.
    Int k = Int(values.size());
    for (const auto& v : values) {
        if (v < 0)
            throw std::invalid_argument("path vector: negative entry in '" + text + "'");
        if (v != 0)
            out.set(k, v);
        --k;
    }
    return out;
}

bool operator<(const PathVector& a, const PathVector& b) {
    const Int da = a.degree();
    const Int db = b.degree();
    if (da != db)
        return da < db;
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
        // Next position where either vector is nonzero.
        Int ka = ia == a.entries_.end() ? Int(-1) : ia->first;
        Int kb = ib == b.entries_.end() ? Int(-1) : ib->first;
        if (ka == kb) {
            if (ia->second != ib->second)
                return ia->second < ib->second;
            ++ia;
            ++ib;
        } else if (kb == -1 || (ka != -1 && ka < kb)) {
            // a is nonzero at ka where b is zero.
            return false;
        } else {
            return true;
        }
    }
    return false;
}

}  // namespace gkm
