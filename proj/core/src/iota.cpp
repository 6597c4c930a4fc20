#include "gkm/iota.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace gkm {

namespace {

// Generic scans give up eventually so a malformed generated sequence
// cannot hang navigation.
const Int kScanLimit = 100000000;

class PeriodicIota final : public IotaSequence::Impl {
public:
    PeriodicIota(std::vector<IndexId> prefix, std::vector<IndexId> period)
        : prefix_(std::move(prefix)), period_(std::move(period)) {
        if (period_.empty())
            throw std::invalid_argument("iota: empty period");
    }

    IndexId at(const Int& k) const override {
        if (k < 1)
            throw std::invalid_argument("iota: positions start at 1");
        if (k <= Int(prefix_.size()))
            return prefix_[static_cast<std::size_t>(k - 1)];
        Int off = floor_mod(k - Int(prefix_.size()) - 1, Int(period_.size()));
        return period_[static_cast<std::size_t>(off)];
    }

    std::string describe() const override {
        std::string s = "periodic(";
        for (std::size_t r = 0; r < prefix_.size(); ++r)
            s += prefix_[r].str() + (r + 1 < prefix_.size() ? "," : "");
        s += ";";
        for (std::size_t r = 0; r < period_.size(); ++r)
            s += period_[r].str() + (r + 1 < period_.size() ? "," : "");
        return s + ")";
    }

private:
    std::vector<IndexId> prefix_;
    std::vector<IndexId> period_;
};

class SuffixIota final : public IotaSequence::Impl {
public:
    SuffixIota(std::shared_ptr<const IotaSequence::Impl> base, Int offset)
        : base_(std::move(base)), offset_(std::move(offset)) {
        if (offset_ < 0)
            throw std::invalid_argument("iota: negative suffix offset");
    }

    IndexId at(const Int& k) const override { return base_->at(k + offset_); }
    Int kplus(const Int& k) const override { return base_->kplus(k + offset_) - offset_; }
    Int kminus(const Int& k) const override {
        Int m = base_->kminus(k + offset_);
        return m > offset_ ? Int(m - offset_) : Int(0);
    }
    std::string describe() const override {
        return "suffix(" + offset_.str() + "," + base_->describe() + ")";
    }

private:
    std::shared_ptr<const IotaSequence::Impl> base_;
    Int offset_;
};

}  // namespace

Int IotaSequence::Impl::kplus(const Int& k) const {
    const IndexId target = at(k);
    for (Int j = k + 1; j <= k + kScanLimit; ++j)
        if (at(j) == target)
            return j;
    throw std::runtime_error("iota: no recurrence of index " + target.str() + " within scan limit");
}

Int IotaSequence::Impl::kminus(const Int& k) const {
    const IndexId target = at(k);
    for (Int j = k - 1; j >= 1; --j)
        if (at(j) == target)
            return j;
    return 0;
}

IotaSequence::IotaSequence(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {
    if (!impl_)
        throw std::invalid_argument("iota: null implementation");
}

IotaSequence IotaSequence::periodic(const CartanDatum& datum, std::vector<IndexId> prefix,
                                    std::vector<IndexId> period) {
    std::set<IndexId> in_period(period.begin(), period.end());
    for (const auto& i : datum.sample_indices())
        if (in_period.count(i) == 0)
            throw std::invalid_argument("iota: index " + i.str() +
                                        " does not occur in the period word");
    for (const auto& i : prefix)
        if (!datum.has_index(i))
            throw std::invalid_argument("iota: prefix mentions unknown index " + i.str());
    for (const auto& i : period)
        if (!datum.has_index(i))
            throw std::invalid_argument("iota: period mentions unknown index " + i.str());
    return IotaSequence(std::make_shared<PeriodicIota>(std::move(prefix), std::move(period)));
}

IndexId IotaSequence::at(const Int& k) const {
    if (k < 1)
        throw std::invalid_argument("iota: positions start at 1");
    return impl_->at(k);
}

Int IotaSequence::kplus(const Int& k) const {
    if (k < 1)
        throw std::invalid_argument("iota: positions start at 1");
    return impl_->kplus(k);
}

Int IotaSequence::kminus(const Int& k) const {
    if (k < 1)
        throw std::invalid_argument("iota: positions start at 1");
    return impl_->kminus(k);
}

IotaSequence IotaSequence::suffix(const Int& offset) const {
    if (offset == 0)
        return *this;
    return IotaSequence(std::make_shared<SuffixIota>(impl_, offset));
}

SequenceReport check_prefix_constraints(const IotaSequence& s, const Int& window) {
    SequenceReport report;
    std::map<IndexId, Int> counts;
    IndexId prev;
    for (Int k = 1; k <= window; ++k) {
        IndexId cur = s.at(k);
        if (k > 1 && cur == prev)
            report.issues.push_back({k - 1, "adjacent positions " + (k - 1).str() + "," + k.str() +
                                                " both carry index " + cur.str()});
        ++counts[cur];
        prev = cur;
    }
    for (const auto& [i, n] : counts)
        if (n < 2)
            report.issues.push_back(
                {0, "index " + i.str() + " occurs only once in positions 1.." + window.str()});
    return report;
}

}  // namespace gkm
