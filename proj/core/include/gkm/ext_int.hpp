#pragma once

#include "gkm/bigint.hpp"

#include <string>

namespace gkm {

// Z together with -infinity, the codomain of epsilon and phi. Minus
// infinity absorbs addition and loses every comparison except against
// itself.
class ExtInt {
public:
    ExtInt(Int v) : finite_(true), v_(std::move(v)) {}  // NOLINT: implicit by design
    ExtInt(long v) : ExtInt(Int(v)) {}                  // NOLINT
    ExtInt(int v) : ExtInt(Int(v)) {}                   // NOLINT

    static ExtInt minus_inf() { return ExtInt(); }

    bool is_finite() const { return finite_; }
    const Int& value() const;

    friend ExtInt operator+(const ExtInt& a, const ExtInt& b) {
        if (!a.finite_ || !b.finite_)
            return minus_inf();
        return ExtInt(a.v_ + b.v_);
    }
    friend ExtInt operator-(const ExtInt& a, const Int& b) {
        return a.finite_ ? ExtInt(a.v_ - b) : minus_inf();
    }

    friend ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

    friend bool operator==(const ExtInt& a, const ExtInt& b) {
        if (a.finite_ != b.finite_)
            return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }
    friend bool operator<(const ExtInt& a, const ExtInt& b) {
        if (!a.finite_)
            return b.finite_;
        return b.finite_ && a.v_ < b.v_;
    }
    friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
    friend bool operator<=(const ExtInt& a, const ExtInt& b) { return !(b < a); }
    friend bool operator>=(const ExtInt& a, const ExtInt& b) { return !(a < b); }

    std::string str() const { return finite_ ? v_.str() : std::string("-inf"); }

private:
    ExtInt() : finite_(false), v_(0) {}

    bool finite_;
    Int v_;
};

}  // namespace gkm
