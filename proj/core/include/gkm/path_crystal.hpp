#pragma once

#include "gkm/bigint.hpp"
#include "gkm/cartan.hpp"
#include "gkm/index_id.hpp"
#include "gkm/iota.hpp"
#include "gkm/path_vector.hpp"
#include "gkm/weight.hpp"

#include <optional>

namespace gkm {

// Crystal structure on nonnegative-integer path vectors driven by a
// Cartan datum and an iota sequence: the local statistics sigma_k, the
// Kashiwara operators, and the maps wt / epsilon / phi. All operations
// are pure functions on immutable values.
class PathCrystal {
public:
    PathCrystal(CartanDatum datum, IotaSequence iota);

    const CartanDatum& datum() const { return datum_; }
    const IotaSequence& iota() const { return iota_; }

    // sigma_k(x): sum over j > k of a(i_k, i_j) x_j, plus x_k itself when
    // i_k is real.
    Int sigma(const PathVector& x, const Int& k) const;

    // For occurrences of i at positions past the support every sigma_k is
    // zero, so the scan covers the occurrences up to max support plus the
    // first one beyond; max / argmin / argmax over all occurrences are
    // exact.
    struct SigmaStats {
        Int max;  // sigma^(i)(x)
        Int nf;   // minimal attaining occurrence
        Int ne;   // maximal attaining occurrence for real i, nf otherwise
    };
    SigmaStats sigma_stats(const PathVector& x, const IndexId& i) const;

    Int sigma_max(const PathVector& x, const IndexId& i) const { return sigma_stats(x, i).max; }
    Int nf(const PathVector& x, const IndexId& i) const { return sigma_stats(x, i).nf; }
    Int ne(const PathVector& x, const IndexId& i) const { return sigma_stats(x, i).ne; }

    // Adds 1 at position nf; never null.
    PathVector f_tilde(const PathVector& x, const IndexId& i) const;

    // Removes 1 at position ne when the lowering condition holds, nullopt
    // otherwise. Nullopt is a value, not an error, and results never have
    // negative entries.
    std::optional<PathVector> e_tilde(const PathVector& x, const IndexId& i) const;

    Weight weight(const PathVector& x) const;
    Int epsilon(const PathVector& x, const IndexId& i) const;  // sigma^(i), 0 for imaginary i
    Int phi(const PathVector& x, const IndexId& i) const;      // <h_i, wt x> + epsilon_i(x)

    // Sum over lo < j < hi of a(i, i_j) x_j.
    Int gap_sum(const PathVector& x, const IndexId& i, const Int& lo, const Int& hi) const;

    // Same datum on the shifted sequence; position k here is position
    // k + offset of this crystal.
    PathCrystal suffix(const Int& offset) const;

private:
    CartanDatum datum_;
    IotaSequence iota_;
};

}  // namespace gkm
