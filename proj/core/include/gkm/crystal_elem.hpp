#pragma once

#include "gkm/cartan.hpp"
#include "gkm/ext_int.hpp"
#include "gkm/index_id.hpp"
#include "gkm/path_crystal.hpp"
#include "gkm/path_vector.hpp"
#include "gkm/weight.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

// Type-erased element of an abstract crystal. Concrete kinds:
//
//   elementary  b_i(-n), on which only index i acts,
//   path        a path vector viewed inside its PathCrystal,
//   tensor      an ordered product of other elements, kept as a flat
//               factor list (the product is associative, so nesting is
//               normalized away on construction).
//
// Tensors may mix kinds; a path factor standing for the part of a
// sequence beyond a finite window is what makes windowed comparisons with
// the sequence crystal exact. Values are immutable and cheap to copy.
class CrystalElem {
public:
    class Impl {
    public:
        virtual ~Impl() = default;
        virtual const CartanDatum& datum() const = 0;
        virtual Weight weight() const = 0;
        virtual ExtInt epsilon(const IndexId& i) const = 0;
        virtual ExtInt phi(const IndexId& i) const = 0;
        virtual std::optional<CrystalElem> raise(const IndexId& i) const = 0;
        virtual std::optional<CrystalElem> lower(const IndexId& i) const = 0;
        virtual bool equals(const Impl& other) const = 0;
        virtual std::string str() const = 0;
    };

    explicit CrystalElem(std::shared_ptr<const Impl> impl);

    static CrystalElem elementary(const CartanDatum& d, const IndexId& i, const Int& n);
    static CrystalElem path(const PathCrystal& crystal, PathVector x);
    static CrystalElem tensor(std::vector<CrystalElem> factors);

    const CartanDatum& datum() const { return impl_->datum(); }
    Weight weight() const { return impl_->weight(); }
    ExtInt epsilon(const IndexId& i) const { return impl_->epsilon(i); }
    ExtInt phi(const IndexId& i) const { return impl_->phi(i); }
    std::optional<CrystalElem> raise(const IndexId& i) const { return impl_->raise(i); }
    std::optional<CrystalElem> lower(const IndexId& i) const { return impl_->lower(i); }
    std::string str() const { return impl_->str(); }

    bool is_elementary() const;
    bool is_path() const;
    bool is_tensor() const;

    // Elementary accessors; throw std::logic_error on other kinds.
    IndexId elementary_index() const;
    Int elementary_n() const;

    const PathVector& path_vector() const;
    const std::vector<CrystalElem>& factors() const;

    friend bool operator==(const CrystalElem& a, const CrystalElem& b) {
        return a.impl_->equals(*b.impl_);
    }
    friend bool operator!=(const CrystalElem& a, const CrystalElem& b) { return !(a == b); }

private:
    std::shared_ptr<const Impl> impl_;
};

}  // namespace gkm
