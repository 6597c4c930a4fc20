#pragma once

#include "gkm/bigint.hpp"
#include "gkm/index_id.hpp"
#include "gkm/weight.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

enum class IndexClass { real, imaginary };

// Borcherds-Cartan datum: an index set split into real and imaginary
// indices together with the integer matrix a_ij and optional symmetrizers.
// Finite data are stored as explicit tables; countable charged families
// plug in through the Impl interface with a sampled index prefix for
// validation. Instances are immutable and cheap to copy.
class CartanDatum {
public:
    class Impl {
    public:
        virtual ~Impl() = default;
        virtual bool has_index(const IndexId& i) const = 0;
        virtual Int entry(const IndexId& i, const IndexId& j) const = 0;  // a_ij
        virtual IndexClass classify(const IndexId& i) const = 0;
        virtual std::optional<Int> symmetrizer(const IndexId& i) const = 0;
        // Explicit index list, or a finite sample of a generated family.
        virtual const std::vector<IndexId>& sample_indices() const = 0;
        virtual std::string family() const { return {}; }
    };

    explicit CartanDatum(std::shared_ptr<const Impl> impl);

    static CartanDatum from_matrix(std::vector<IndexId> indices,
                                   std::vector<IndexClass> classes,
                                   std::vector<std::vector<Int>> entries,
                                   std::optional<std::vector<Int>> symmetrizers = std::nullopt);

    bool has_index(const IndexId& i) const { return impl_->has_index(i); }
    Int entry(const IndexId& i, const IndexId& j) const { return impl_->entry(i, j); }
    IndexClass classify(const IndexId& i) const { return impl_->classify(i); }
    bool is_real(const IndexId& i) const { return classify(i) == IndexClass::real; }
    bool is_imaginary(const IndexId& i) const { return classify(i) == IndexClass::imaginary; }
    std::optional<Int> symmetrizer(const IndexId& i) const { return impl_->symmetrizer(i); }
    const std::vector<IndexId>& sample_indices() const { return impl_->sample_indices(); }
    std::string family() const { return impl_->family(); }

    std::size_t real_index_count() const;

private:
    std::shared_ptr<const Impl> impl_;
};

struct DatumViolation {
    std::string axiom;  // "diagonal", "evenness", "off-diagonal-sign", "zero-symmetry", "symmetrizer"
    IndexId i;
    IndexId j;
    std::string detail;
};

struct DatumReport {
    std::vector<DatumViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every axiom on the (sampled) index set and reports all
// violations; violations are data, not errors.
DatumReport validate_datum(const CartanDatum& d);

// <h_i, w> = sum over j of w_j * a_ij. Throws std::invalid_argument if w
// mentions an index the datum does not contain.
Int pairing(const CartanDatum& d, const IndexId& i, const Weight& w);

}  // namespace gkm
