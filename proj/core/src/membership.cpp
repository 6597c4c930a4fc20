#include "gkm/membership.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace gkm {

GammaMembership::GammaMembership(PathCrystal z, ThetaOptions opts)
    : z_(std::move(z)), opts_(std::move(opts)), theta_(generate_theta(z_, opts_)),
      positivity_(check_positivity(z_, theta_)) {}

const ThetaSet& GammaMembership::theta_excluding(const Int& pivot, const Int& target) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(pivot, target);
    auto it = excluded_.find(key);
    if (it == excluded_.end()) {
        auto made = std::make_shared<const ThetaSet>(
            generate_theta_excluding(z_, pivot, target, opts_));
        it = excluded_.emplace(key, std::move(made)).first;
    }
    return *it->second;
}

MemberResult GammaMembership::check(const PathVector& x) const {
    bool capped = theta_.generation_cap_hit();

    // Every generated form must be nonnegative at x, and positions forced
    // to vanish by collapsed orbits must be empty.
    for (const auto& j : theta_.forced_zero()) {
        if (x.at(j) != 0)
            return {Verdict::out, "form-nonnegativity (forms with arbitrarily negative "
                                      "coefficient force x_" +
                                      j.str() + " = 0)"};
    }
    for (const auto& psi : theta_.forms()) {
        if (psi.evaluate(x) < 0)
            return {Verdict::out, "form-nonnegativity (psi = " + psi.str() +
                                      ", psi(x) = " + psi.evaluate(x).str() + ")"};
    }

    // Imaginary positions with an earlier occurrence: the gap sum must be
    // strictly negative, and when every imaginary term in the gap
    // vanishes some real pivot must make the excluded closure strict.
    for (const auto& [t, xt] : x.entries()) {
        const IndexId it = z_.iota().at(t);
        if (z_.datum().is_real(it))
            continue;
        const Int prev = z_.iota().kminus(t);
        if (prev == 0)
            continue;
        const Int gap = z_.gap_sum(x, it, prev, t);
        if (gap >= 0)
            return {Verdict::out, "imaginary-gap (t = " + t.str() + ", sum over (" + prev.str() +
                                      "," + t.str() + ") = " + gap.str() + " is not < 0)"};

        bool imaginary_terms_vanish = true;
        for (auto jt = x.entries().upper_bound(prev);
             jt != x.entries().end() && jt->first < t; ++jt) {
            const IndexId ij = z_.iota().at(jt->first);
            if (z_.datum().is_imaginary(ij) && z_.datum().entry(it, ij) * jt->second != 0) {
                imaginary_terms_vanish = false;
                break;
            }
        }
        if (!imaginary_terms_vanish)
            continue;

        bool satisfied = false;
        bool pivot_capped = false;
        for (auto pt = x.entries().upper_bound(prev);
             pt != x.entries().end() && pt->first < t && !satisfied; ++pt) {
            const Int p = pt->first;
            const IndexId ip = z_.iota().at(p);
            if (!z_.datum().is_real(ip) || z_.datum().entry(it, ip) >= 0)
                continue;
            const ThetaSet& th = theta_excluding(p, t);
            bool all_strict = true;
            for (const auto& j : th.forced_zero())
                if (x.at(j) != 0) {
                    all_strict = false;
                    break;
                }
            if (all_strict)
                for (const auto& psi : th.forms())
                    if (psi.evaluate(x) <= 0) {
                        all_strict = false;
                        break;
                    }
            if (!all_strict)
                continue;
            if (th.generation_cap_hit())
                pivot_capped = true;  // strict so far, but forms are missing
            else
                satisfied = true;
        }
        if (!satisfied) {
            if (pivot_capped || capped)
                return {Verdict::unknown,
                        "pivot closure capped before saturation (t = " + t.str() + ")"};
            return {Verdict::out,
                    "real-pivot (t = " + t.str() + ": every imaginary term in (" + prev.str() +
                        "," + t.str() + ") vanishes and no real pivot p has a negative pairing "
                        "term with all excluded-closure forms strictly positive)"};
        }
    }

    if (capped)
        return {Verdict::unknown, "form generation cap hit before saturation"};
    return {Verdict::in, ""};
}

MemberResult gamma_member_general(const PathCrystal& z, const PathVector& x,
                                  const ThetaOptions& opts) {
    return GammaMembership(z, opts).check(x);
}

bool gamma_member_all_imaginary(const PathCrystal& z, const PathVector& x) {
    for (const auto& i : z.datum().sample_indices())
        if (z.datum().is_real(i))
            throw std::invalid_argument("all-imaginary membership: datum has real index " +
                                        i.str());
    for (const auto& [t, xt] : x.entries()) {
        const Int prev = z.iota().kminus(t);
        if (prev == 0)
            continue;
        if (z.gap_sum(x, z.iota().at(t), prev, t) >= 0)
            return false;
    }
    return true;
}

Int s_j_value(const PathCrystal& z, const PathVector& x, const Int& j) {
    return apply_s(z, LinearForm::coordinate(j), j).evaluate(x);
}

bool gamma_member_single_real(const PathCrystal& z, const PathVector& x) {
    if (z.datum().real_index_count() != 1)
        throw std::invalid_argument("single-real membership: datum must have exactly one real index");

    const Int top = x.max_position();
    for (Int j = 1; j <= top; ++j)
        if (z.datum().is_real(z.iota().at(j)) && s_j_value(z, x, j) < 0)
            return false;

    for (const auto& [t, xt] : x.entries()) {
        const IndexId it = z.iota().at(t);
        if (z.datum().is_real(it))
            continue;
        const Int prev = z.iota().kminus(t);
        if (prev == 0)
            continue;
        if (z.gap_sum(x, it, prev, t) >= 0)
            return false;

        bool imaginary_terms_vanish = true;
        for (auto jt = x.entries().upper_bound(prev);
             jt != x.entries().end() && jt->first < t; ++jt) {
            const IndexId ij = z.iota().at(jt->first);
            if (z.datum().is_imaginary(ij) && z.datum().entry(it, ij) * jt->second != 0) {
                imaginary_terms_vanish = false;
                break;
            }
        }
        if (!imaginary_terms_vanish)
            continue;

        bool satisfied = false;
        for (auto pt = x.entries().upper_bound(prev);
             pt != x.entries().end() && pt->first < t && !satisfied; ++pt) {
            const IndexId ip = z.iota().at(pt->first);
            if (z.datum().is_real(ip) && z.datum().entry(it, ip) < 0 &&
                s_j_value(z, x, pt->first) > 0)
                satisfied = true;
        }
        if (!satisfied)
            return false;
    }
    return true;
}

bool rank2_member(const PathVector& x, const Rank2Params& p) {
    const Int top = x.max_position();
    for (Int k = 1; 2 * k <= top; ++k) {
        const Int s2k = p.c * x.at(2 * k + 1) - x.at(2 * k + 2);
        if (s2k < 0)
            return false;
        if (x.at(2 * k + 1) != 0 && (p.b * x.at(2 * k) <= 0 || s2k <= 0))
            return false;
    }
    return true;
}

bool rank3_member(const PathVector& x, const Rank3Params& p) {
    const Int top = x.max_position();
    for (Int k = 1; 3 * k <= top; ++k) {
        const Int s3k = p.g * x.at(3 * k + 1) + p.h * x.at(3 * k + 2) - x.at(3 * k + 3);
        if (s3k < 0)
            return false;
        if (x.at(3 * k + 1) != 0) {
            if (p.b * x.at(3 * k - 1) + p.c * x.at(3 * k) <= 0)
                return false;
            if (p.b * x.at(3 * k - 1) == 0 && s3k <= 0)
                return false;
        }
        if (x.at(3 * k + 2) != 0) {
            if (p.f * x.at(3 * k) + p.d * x.at(3 * k + 1) <= 0)
                return false;
            if (p.d * x.at(3 * k + 1) == 0 && s3k <= 0)
                return false;
        }
    }
    return true;
}

}  // namespace gkm
