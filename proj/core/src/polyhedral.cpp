#include "gkm/polyhedral.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

namespace gkm {

LinearForm beta_form(const PathCrystal& z, const Int& k) {
    if (k < 0)
        throw std::invalid_argument("beta: position must be >= 0");
    if (k == 0)
        return LinearForm::zero();
    const IndexId ik = z.iota().at(k);
    const Int kp = z.iota().kplus(k);
    LinearForm f;
    if (z.datum().is_real(ik)) {
        f.add(k, 1);
        for (Int j = k + 1; j < kp; ++j)
            f.add(j, z.datum().entry(ik, z.iota().at(j)));
        f.add(kp, 1);
    } else {
        for (Int j = k + 1; j <= kp; ++j)
            f.add(j, z.datum().entry(ik, z.iota().at(j)));
    }
    return f;
}

LinearForm apply_s(const PathCrystal& z, const LinearForm& psi, const Int& k) {
    if (k < 1)
        throw std::invalid_argument("S_k: position must be >= 1");
    const Int pk = psi.coeff(k);
    if (pk == 0)
        return psi;
    LinearForm out = psi;
    if (pk > 0) {
        const IndexId ik = z.iota().at(k);
        if (z.datum().is_real(ik)) {
            out.add_scaled(-pk, beta_form(z, k));
        } else {
            // Like beta_k but with open upper range and -x_{k+}.
            const Int kp = z.iota().kplus(k);
            LinearForm gamma;
            gamma.add(k, 1);
            for (Int j = k + 1; j < kp; ++j)
                gamma.add(j, z.datum().entry(ik, z.iota().at(j)));
            gamma.add(kp, -1);
            out.add_scaled(-pk, gamma);
        }
    } else {
        out.add_scaled(-pk, beta_form(z, z.iota().kminus(k)));
    }
    return out;
}

namespace {

void split_parts(const LinearForm& f, LinearForm& neg, LinearForm& pos) {
    for (const auto& [k, c] : f.coeffs())
        (c < 0 ? neg : pos).add(k, c);
}

bool dominates_coefficientwise(const LinearForm& small, const LinearForm& big) {
    for (const auto& [k, c] : small.coeffs())
        if (big.coeff(k) < c)
            return false;
    return true;
}

ThetaSet close_under_s(const PathCrystal& z, std::vector<LinearForm> seeds, const Int& excluded,
                       const ThetaOptions& opts) {
    if (opts.window < 1)
        throw std::invalid_argument("theta: window must be >= 1");
    std::set<LinearForm> kept;
    std::set<LinearForm> escaped;
    std::set<Int> forced;
    // Positive parts of kept forms, grouped by negative part; used to
    // recognize candidates that only weaken a kept inequality.
    std::map<LinearForm, std::vector<LinearForm>> by_negative_part;
    std::deque<LinearForm> work;
    bool cap_hit = false;

    auto keep = [&](LinearForm f) {
        if (!kept.insert(f).second)
            return false;
        LinearForm neg, pos;
        split_parts(f, neg, pos);
        by_negative_part[std::move(neg)].push_back(std::move(pos));
        work.push_back(std::move(f));
        return true;
    };

    // A candidate that is coefficient-wise >= a kept form adds nothing on
    // nonnegative vectors; dropping such forms keeps the generated set
    // finite where riding positive junk would otherwise fork unboundedly.
    auto redundant = [&](const LinearForm& f) {
        LinearForm neg, pos;
        split_parts(f, neg, pos);
        if (neg.is_zero())
            return true;  // never binds on x >= 0
        auto it = by_negative_part.find(neg);
        if (it == by_negative_part.end())
            return false;
        for (const auto& kept_pos : it->second)
            if (dominates_coefficientwise(kept_pos, pos))
                return true;
        return false;
    };

    for (auto& s : seeds) {
        if (s.is_zero())
            continue;
        if (kept.size() >= opts.cap) {
            cap_hit = true;
            break;
        }
        keep(std::move(s));
    }

    while (!work.empty() && !cap_hit) {
        const LinearForm psi = std::move(work.front());
        work.pop_front();
        for (Int k = 1; k <= opts.window; ++k) {
            if (k == excluded)
                continue;
            const Int pk = psi.coeff(k);
            if (pk == 0)
                continue;  // S_k fixes psi
            if (pk < 0) {
                const Int m = z.iota().kminus(k);
                if (m >= 1 && z.datum().is_imaginary(z.iota().at(m))) {
                    // beta_m is coefficient-wise nonpositive, so repeated
                    // S_k scales the negative part without bound; the
                    // orbit collapses to vanishing constraints on the
                    // support of beta_m (m+ = k keeps them in-window).
                    const LinearForm beta = beta_form(z, m);
                    for (const auto& [j, c] : beta.coeffs())
                        forced.insert(j);
                    continue;
                }
            }
            LinearForm next = apply_s(z, psi, k);
            if (next.is_zero() || next == psi)
                continue;
            if (next.max_position() > opts.window) {
                escaped.insert(std::move(next));
                continue;
            }
            if (kept.count(next) != 0 || redundant(next))
                continue;
            keep(std::move(next));
            if (kept.size() >= opts.cap) {
                cap_hit = true;
                break;
            }
        }
    }

    return ThetaSet(std::move(kept), std::move(forced), opts.window, /*saturated=*/!cap_hit,
                    cap_hit, escaped.size());
}

}  // namespace

ThetaSet generate_theta(const PathCrystal& z, const ThetaOptions& opts) {
    std::vector<LinearForm> seeds;
    for (Int j = 1; j <= opts.window; ++j)
        seeds.push_back(LinearForm::coordinate(j));
    return close_under_s(z, std::move(seeds), /*excluded=*/0, opts);
}

ThetaSet generate_theta_excluding(const PathCrystal& z, const Int& seed, const Int& excluded,
                                  const ThetaOptions& opts) {
    if (seed < 1 || excluded <= seed)
        throw std::invalid_argument("theta: need excluded > seed >= 1");
    std::vector<LinearForm> seeds;
    seeds.push_back(LinearForm::coordinate(seed));
    return close_under_s(z, std::move(seeds), excluded, opts);
}

PositivityReport check_positivity(const PathCrystal& z, const ThetaSet& theta) {
    PositivityReport report;
    std::vector<Int> first_occurrences;
    for (Int k = 1; k <= theta.window(); ++k)
        if (z.iota().kminus(k) == 0)
            first_occurrences.push_back(k);
    for (const auto& psi : theta.forms())
        for (const auto& k : first_occurrences)
            if (psi.coeff(k) < 0)
                report.violations.push_back({psi, k});
    // A forced-zero position stands for forms whose coefficient there is
    // arbitrarily negative.
    for (const auto& j : theta.forced_zero())
        if (z.iota().kminus(j) == 0) {
            LinearForm zero_form;
            zero_form.add(j, -1);
            report.violations.push_back({zero_form, j});
        }
    return report;
}

}  // namespace gkm
