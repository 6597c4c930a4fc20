#include "gkm/path_crystal.hpp"

#include <stdexcept>
#include <utility>

namespace gkm {

namespace {
const Int kFirstOccurrenceScanLimit = 100000000;
}

PathCrystal::PathCrystal(CartanDatum datum, IotaSequence iota)
    : datum_(std::move(datum)), iota_(std::move(iota)) {}

Int PathCrystal::sigma(const PathVector& x, const Int& k) const {
    const IndexId ik = iota_.at(k);
    Int total = datum_.is_real(ik) ? x.at(k) : Int(0);
    for (auto it = x.entries().upper_bound(k); it != x.entries().end(); ++it)
        total += datum_.entry(ik, iota_.at(it->first)) * it->second;
    return total;
}

PathCrystal::SigmaStats PathCrystal::sigma_stats(const PathVector& x, const IndexId& i) const {
    // First occurrence of i.
    Int k = 0;
    for (Int j = 1; j <= kFirstOccurrenceScanLimit; ++j)
        if (iota_.at(j) == i) {
            k = j;
            break;
        }
    if (k == 0)
        throw std::invalid_argument("crystal: index " + i.str() + " does not occur in iota");

    const Int top = x.max_position();
    const bool real = datum_.is_real(i);
    SigmaStats st{sigma(x, k), k, k};
    while (k <= top) {
        k = iota_.kplus(k);
        const Int s = k <= top ? sigma(x, k) : Int(0);  // sums vanish past the support
        if (s > st.max) {
            st.max = s;
            st.nf = k;
            st.ne = k;
        } else if (s == st.max) {
            st.ne = k;
        }
    }
    if (!real)
        st.ne = st.nf;
    return st;
}

PathVector PathCrystal::f_tilde(const PathVector& x, const IndexId& i) const {
    return x.bumped(sigma_stats(x, i).nf, 1);
}

std::optional<PathVector> PathCrystal::e_tilde(const PathVector& x, const IndexId& i) const {
    const SigmaStats st = sigma_stats(x, i);
    if (datum_.is_real(i)) {
        if (st.max <= 0)
            return std::nullopt;
        // sigma^(i) > 0 can be attained at a zero entry outside the image
        // of the embedding; removing there would go negative.
        if (x.at(st.ne) == 0)
            return std::nullopt;
        return x.bumped(st.ne, -1);
    }
    const Int k = st.ne;  // == nf for imaginary i
    const Int xk = x.at(k);
    if (xk == 0)
        return std::nullopt;
    const Int prev = iota_.kminus(k);
    if (prev == 0 || xk > 1 || gap_sum(x, i, prev, k) < 0)
        return x.bumped(k, -1);
    return std::nullopt;
}

Weight PathCrystal::weight(const PathVector& x) const {
    Weight w;
    for (const auto& [k, v] : x.entries())
        w.add_multiple_of_alpha(iota_.at(k), -v);
    return w;
}

Int PathCrystal::epsilon(const PathVector& x, const IndexId& i) const {
    return sigma_stats(x, i).max;
}

Int PathCrystal::phi(const PathVector& x, const IndexId& i) const {
    return pairing(datum_, i, weight(x)) + epsilon(x, i);
}

Int PathCrystal::gap_sum(const PathVector& x, const IndexId& i, const Int& lo,
                         const Int& hi) const {
    Int total = 0;
    for (auto it = x.entries().upper_bound(lo); it != x.entries().end() && it->first < hi; ++it)
        total += datum_.entry(i, iota_.at(it->first)) * it->second;
    return total;
}

PathCrystal PathCrystal::suffix(const Int& offset) const {
    return PathCrystal(datum_, iota_.suffix(offset));
}

}  // namespace gkm
