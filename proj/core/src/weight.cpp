#include "gkm/weight.hpp"

namespace gkm {

Int Weight::coeff(const IndexId& i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void Weight::add_multiple_of_alpha(const IndexId& i, const Int& c) {
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

Weight& Weight::operator+=(const Weight& other) {
    for (const auto& [i, c] : other.coeffs_)
        add_multiple_of_alpha(i, c);
    return *this;
}

Int Weight::height() const {
    Int h = 0;
    for (const auto& [i, c] : coeffs_)
        h -= c;
    return h;
}

std::string Weight::str() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (const auto& [i, c] : coeffs_) {
        if (c > 0 && !out.empty())
            out += "+";
        if (c == -1)
            out += "-";
        else if (c != 1)
            out += c.str();
        out += "a(" + i.str() + ")";
    }
    return out;
}

}  // namespace gkm
