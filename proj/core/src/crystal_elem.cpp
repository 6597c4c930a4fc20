#include "gkm/crystal_elem.hpp"

#include <stdexcept>
#include <utility>

namespace gkm {

namespace {

class ElementaryImpl final : public CrystalElem::Impl {
public:
    ElementaryImpl(CartanDatum d, IndexId i, Int n)
        : datum_(std::move(d)), index_(std::move(i)), n_(std::move(n)) {
        if (n_ < 0)
            throw std::invalid_argument("elementary crystal: n must be >= 0");
    }

    const CartanDatum& datum() const override { return datum_; }

    Weight weight() const override {
        Weight w;
        w.add_multiple_of_alpha(index_, -n_);
        return w;
    }

    ExtInt epsilon(const IndexId& j) const override {
        if (j != index_)
            return ExtInt::minus_inf();
        return datum_.is_real(index_) ? ExtInt(n_) : ExtInt(0);
    }

    ExtInt phi(const IndexId& j) const override {
        if (j != index_)
            return ExtInt::minus_inf();
        return datum_.is_real(index_) ? ExtInt(-n_) : ExtInt(-n_ * datum_.entry(index_, index_));
    }

    std::optional<CrystalElem> raise(const IndexId& j) const override {
        if (j != index_ || n_ == 0)
            return std::nullopt;
        return CrystalElem::elementary(datum_, index_, n_ - 1);
    }

    std::optional<CrystalElem> lower(const IndexId& j) const override {
        if (j != index_)
            return std::nullopt;
        return CrystalElem::elementary(datum_, index_, n_ + 1);
    }

    bool equals(const Impl& other) const override {
        auto* o = dynamic_cast<const ElementaryImpl*>(&other);
        return o != nullptr && o->index_ == index_ && o->n_ == n_;
    }

    std::string str() const override { return "b_" + index_.str() + "(-" + n_.str() + ")"; }

    const IndexId& index() const { return index_; }
    const Int& n() const { return n_; }

private:
    CartanDatum datum_;
    IndexId index_;
    Int n_;
};

class PathImpl final : public CrystalElem::Impl {
public:
    PathImpl(PathCrystal crystal, PathVector x) : crystal_(std::move(crystal)), x_(std::move(x)) {}

    const CartanDatum& datum() const override { return crystal_.datum(); }
    Weight weight() const override { return crystal_.weight(x_); }
    ExtInt epsilon(const IndexId& i) const override { return crystal_.epsilon(x_, i); }
    ExtInt phi(const IndexId& i) const override { return crystal_.phi(x_, i); }

    std::optional<CrystalElem> raise(const IndexId& i) const override {
        auto y = crystal_.e_tilde(x_, i);
        if (!y)
            return std::nullopt;
        return CrystalElem::path(crystal_, std::move(*y));
    }

    std::optional<CrystalElem> lower(const IndexId& i) const override {
        return CrystalElem::path(crystal_, crystal_.f_tilde(x_, i));
    }

    bool equals(const Impl& other) const override {
        auto* o = dynamic_cast<const PathImpl*>(&other);
        return o != nullptr && o->x_ == x_;
    }

    std::string str() const override { return x_.str(); }

    const PathVector& vector() const { return x_; }

private:
    PathCrystal crystal_;
    PathVector x_;
};

class TensorImpl final : public CrystalElem::Impl {
public:
    explicit TensorImpl(std::vector<CrystalElem> factors) : factors_(std::move(factors)) {
        if (factors_.empty())
            throw std::invalid_argument("tensor: empty factor list");
    }

    const CartanDatum& datum() const override { return factors_.front().datum(); }

    Weight weight() const override {
        Weight w;
        for (const auto& f : factors_)
            w += f.weight();
        return w;
    }

    // Left fold of the binary rules over the flat factor list; the
    // bracketing is immaterial because the product is associative.
    ExtInt epsilon(const IndexId& i) const override {
        ExtInt eps = factors_.front().epsilon(i);
        Weight wt = factors_.front().weight();
        for (std::size_t r = 1; r < factors_.size(); ++r) {
            eps = max(eps, factors_[r].epsilon(i) - pairing(datum(), i, wt));
            wt += factors_[r].weight();
        }
        return eps;
    }

    ExtInt phi(const IndexId& i) const override {
        ExtInt ph = factors_.front().phi(i);
        for (std::size_t r = 1; r < factors_.size(); ++r)
            ph = max(ph + pairing(datum(), i, factors_[r].weight()), factors_[r].phi(i));
        return ph;
    }

    std::optional<CrystalElem> raise(const IndexId& i) const override {
        return act(i, /*lowering=*/false);
    }

    std::optional<CrystalElem> lower(const IndexId& i) const override {
        return act(i, /*lowering=*/true);
    }

    bool equals(const Impl& other) const override {
        auto* o = dynamic_cast<const TensorImpl*>(&other);
        return o != nullptr && o->factors_ == factors_;
    }

    std::string str() const override {
        std::string s = factors_.front().str();
        for (std::size_t r = 1; r < factors_.size(); ++r)
            s += " * " + factors_[r].str();
        return s;
    }

    const std::vector<CrystalElem>& factors() const { return factors_; }

private:
    // phi_i of the prefix factors_[0..count-1] under the left fold.
    ExtInt prefix_phi(const IndexId& i, std::size_t count) const {
        ExtInt ph = factors_.front().phi(i);
        for (std::size_t r = 1; r < count; ++r)
            ph = max(ph + pairing(datum(), i, factors_[r].weight()), factors_[r].phi(i));
        return ph;
    }

    // Chooses the factor the operator acts on by descending the left-fold
    // bracketing (prefix, last); nullopt either from the imaginary
    // raising dead zone or from the chosen factor itself.
    std::optional<CrystalElem> act(const IndexId& i, bool lowering) const {
        std::size_t end = factors_.size() - 1;
        while (end > 0) {
            const ExtInt phi_prefix = prefix_phi(i, end);
            const ExtInt eps_last = factors_[end].epsilon(i);
            if (lowering || datum().is_real(i)) {
                const bool left = lowering ? phi_prefix > eps_last : phi_prefix >= eps_last;
                if (!left)
                    break;
            } else {
                const Int aii = datum().entry(i, i);
                if (phi_prefix > eps_last - aii) {
                    // acts inside the prefix
                } else if (phi_prefix <= eps_last) {
                    break;
                } else {
                    return std::nullopt;
                }
            }
            --end;
        }
        auto moved =
            lowering ? factors_[end].lower(i) : factors_[end].raise(i);
        if (!moved)
            return std::nullopt;
        std::vector<CrystalElem> out = factors_;
        out[end] = std::move(*moved);
        return CrystalElem::tensor(std::move(out));
    }

    std::vector<CrystalElem> factors_;
};

}  // namespace

CrystalElem::CrystalElem(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {
    if (!impl_)
        throw std::invalid_argument("crystal element: null implementation");
}

CrystalElem CrystalElem::elementary(const CartanDatum& d, const IndexId& i, const Int& n) {
    return CrystalElem(std::make_shared<ElementaryImpl>(d, i, n));
}

CrystalElem CrystalElem::path(const PathCrystal& crystal, PathVector x) {
    return CrystalElem(std::make_shared<PathImpl>(crystal, std::move(x)));
}

CrystalElem CrystalElem::tensor(std::vector<CrystalElem> factors) {
    std::vector<CrystalElem> flat;
    for (auto& f : factors) {
        if (f.is_tensor()) {
            const auto& sub = f.factors();
            flat.insert(flat.end(), sub.begin(), sub.end());
        } else {
            flat.push_back(std::move(f));
        }
    }
    return CrystalElem(std::make_shared<TensorImpl>(std::move(flat)));
}

bool CrystalElem::is_elementary() const {
    return dynamic_cast<const ElementaryImpl*>(impl_.get()) != nullptr;
}

bool CrystalElem::is_path() const { return dynamic_cast<const PathImpl*>(impl_.get()) != nullptr; }

bool CrystalElem::is_tensor() const {
    return dynamic_cast<const TensorImpl*>(impl_.get()) != nullptr;
}

IndexId CrystalElem::elementary_index() const {
    auto* e = dynamic_cast<const ElementaryImpl*>(impl_.get());
    if (!e)
        throw std::logic_error("crystal element: not elementary");
    return e->index();
}

Int CrystalElem::elementary_n() const {
    auto* e = dynamic_cast<const ElementaryImpl*>(impl_.get());
    if (!e)
        throw std::logic_error("crystal element: not elementary");
    return e->n();
}

const PathVector& CrystalElem::path_vector() const {
    auto* p = dynamic_cast<const PathImpl*>(impl_.get());
    if (!p)
        throw std::logic_error("crystal element: not a path element");
    return p->vector();
}

const std::vector<CrystalElem>& CrystalElem::factors() const {
    auto* t = dynamic_cast<const TensorImpl*>(impl_.get());
    if (!t)
        throw std::logic_error("crystal element: not a tensor");
    return t->factors();
}

}  // namespace gkm
