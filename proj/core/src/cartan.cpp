#include "gkm/cartan.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace gkm {

namespace {

class ExplicitDatum final : public CartanDatum::Impl {
public:
    ExplicitDatum(std::vector<IndexId> indices, std::vector<IndexClass> classes,
                  std::vector<std::vector<Int>> entries, std::optional<std::vector<Int>> syms)
        : indices_(std::move(indices)) {
        const std::size_t n = indices_.size();
        if (classes.size() != n || entries.size() != n)
            throw std::invalid_argument("datum: index/class/matrix sizes disagree");
        for (const auto& row : entries)
            if (row.size() != n)
                throw std::invalid_argument("datum: matrix is not square");
        if (syms && syms->size() != n)
            throw std::invalid_argument("datum: symmetrizer list size disagrees");
        for (std::size_t r = 0; r < n; ++r) {
            if (!positions_.emplace(indices_[r], r).second)
                throw std::invalid_argument("datum: duplicate index " + indices_[r].str());
            classes_.emplace(indices_[r], classes[r]);
        }
        entries_ = std::move(entries);
        syms_ = std::move(syms);
    }

    bool has_index(const IndexId& i) const override { return positions_.count(i) != 0; }

    Int entry(const IndexId& i, const IndexId& j) const override {
        return entries_[position(i)][position(j)];
    }

    IndexClass classify(const IndexId& i) const override { return classes_.at(indices_[position(i)]); }

    std::optional<Int> symmetrizer(const IndexId& i) const override {
        if (!syms_)
            return std::nullopt;
        return (*syms_)[position(i)];
    }

    const std::vector<IndexId>& sample_indices() const override { return indices_; }

private:
    std::size_t position(const IndexId& i) const {
        auto it = positions_.find(i);
        if (it == positions_.end())
            throw std::invalid_argument("datum: unknown index " + i.str());
        return it->second;
    }

    std::vector<IndexId> indices_;
    std::map<IndexId, std::size_t> positions_;
    std::map<IndexId, IndexClass> classes_;
    std::vector<std::vector<Int>> entries_;
    std::optional<std::vector<Int>> syms_;
};

}  // namespace

CartanDatum::CartanDatum(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {
    if (!impl_)
        throw std::invalid_argument("datum: null implementation");
}

CartanDatum CartanDatum::from_matrix(std::vector<IndexId> indices, std::vector<IndexClass> classes,
                                     std::vector<std::vector<Int>> entries,
                                     std::optional<std::vector<Int>> symmetrizers) {
    return CartanDatum(std::make_shared<ExplicitDatum>(std::move(indices), std::move(classes),
                                                       std::move(entries), std::move(symmetrizers)));
}

std::size_t CartanDatum::real_index_count() const {
    std::size_t n = 0;
    for (const auto& i : sample_indices())
        if (is_real(i))
            ++n;
    return n;
}

DatumReport validate_datum(const CartanDatum& d) {
    DatumReport report;
    const auto& idx = d.sample_indices();
    auto flag = [&](std::string axiom, const IndexId& i, const IndexId& j, std::string detail) {
        report.violations.push_back({std::move(axiom), i, j, std::move(detail)});
    };

    for (const auto& i : idx) {
        const Int aii = d.entry(i, i);
        if (d.is_real(i)) {
            if (aii != 2)
                flag("diagonal", i, i, "real index must have a_ii = 2, got " + aii.str());
        } else {
            if (aii > 0)
                flag("diagonal", i, i, "imaginary index must have a_ii <= 0, got " + aii.str());
            if (floor_mod(aii, 2) != 0)
                flag("evenness", i, i, "imaginary diagonal entry must be even, got " + aii.str());
        }
    }

    for (const auto& i : idx) {
        for (const auto& j : idx) {
            if (i == j)
                continue;
            const Int aij = d.entry(i, j);
            const Int aji = d.entry(j, i);
            if (aij > 0)
                flag("off-diagonal-sign", i, j, "a_ij must be <= 0 for i != j, got " + aij.str());
            if ((aij == 0) != (aji == 0) && i < j)
                flag("zero-symmetry", i, j,
                     "a_ij = " + aij.str() + " but a_ji = " + aji.str());
        }
    }

    bool all_syms = true;
    for (const auto& i : idx)
        all_syms = all_syms && d.symmetrizer(i).has_value();
    if (all_syms && !idx.empty()) {
        for (const auto& i : idx) {
            const Int si = *d.symmetrizer(i);
            if (si <= 0)
                flag("symmetrizer", i, i, "symmetrizer must be positive, got " + si.str());
        }
        for (const auto& i : idx)
            for (const auto& j : idx)
                if (i < j) {
                    const Int lhs = *d.symmetrizer(i) * d.entry(i, j);
                    const Int rhs = *d.symmetrizer(j) * d.entry(j, i);
                    if (lhs != rhs)
                        flag("symmetrizer", i, j,
                             "s_i a_ij = " + lhs.str() + " but s_j a_ji = " + rhs.str());
                }
    }

    return report;
}

Int pairing(const CartanDatum& d, const IndexId& i, const Weight& w) {
    Int total = 0;
    for (const auto& [j, c] : w.coeffs()) {
        if (!d.has_index(j))
            throw std::invalid_argument("pairing: weight mentions unknown index " + j.str());
        total += c * d.entry(i, j);
    }
    return total;
}

}  // namespace gkm
