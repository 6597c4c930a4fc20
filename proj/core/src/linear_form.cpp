#include "gkm/linear_form.hpp"

#include <stdexcept>

namespace gkm {

LinearForm LinearForm::coordinate(const Int& k) {
    if (k < 0)
        throw std::invalid_argument("linear form: negative position");
    LinearForm f;
    if (k >= 1)
        f.add(k, 1);  // position 0 stands for the zero form
    return f;
}

Int LinearForm::coeff(const Int& k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void LinearForm::add(const Int& k, const Int& c) {
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

void LinearForm::add_scaled(const Int& c, const LinearForm& other) {
    if (c == 0)
        return;
    for (const auto& [k, v] : other.coeffs_)
        add(k, c * v);
}

Int LinearForm::evaluate(const PathVector& x) const {
    // Iterate the smaller support.
    Int total = 0;
    if (coeffs_.size() <= x.entries().size()) {
        for (const auto& [k, c] : coeffs_)
            total += c * x.at(k);
    } else {
        for (const auto& [k, v] : x.entries())
            total += coeff(k) * v;
    }
    return total;
}

std::string LinearForm::str() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (const auto& [k, c] : coeffs_) {
        if (c > 0 && !out.empty())
            out += "+";
        if (c == -1)
            out += "-";
        else if (c != 1)
            out += c.str();
        out += "x_" + k.str();
    }
    return out;
}

}  // namespace gkm
