#pragma once

#include "gkm/bigint.hpp"
#include "gkm/linear_form.hpp"
#include "gkm/path_crystal.hpp"

#include <cstddef>
#include <set>
#include <vector>

namespace gkm {

// beta_k = sigma_k - sigma_{k+}, as a linear form:
//   real i_k:      x_k + sum_{k<j<k+} a(i_k,i_j) x_j + x_{k+}
//   imaginary i_k: sum_{k<j<=k+} a(i_k,i_j) x_j
// beta_0 is the zero form.
LinearForm beta_form(const PathCrystal& z, const Int& k);

// Piecewise-linear operator S_k:
//   psi_k > 0, i_k real:      psi - psi_k beta_k
//   psi_k > 0, i_k imaginary: psi - psi_k (x_k + sum_{k<j<k+} a(i_k,i_j) x_j - x_{k+})
//   psi_k <= 0:               psi - psi_k beta_{k-}
LinearForm apply_s(const PathCrystal& z, const LinearForm& psi, const Int& k);

struct ThetaOptions {
    Int window = 12;           // forms supported beyond positions 1..window are dropped
    std::size_t cap = 20000;   // stop and flag once this many forms were kept
};

// Closure of coordinate forms under the S_k within a position window.
// The zero form is excluded; forms whose support escapes the window are
// counted but not kept, so `saturated` honestly reports the in-window
// fixpoint.
//
// The raw closure need not be finite even inside a window, so two
// reductions keep generation terminating while preserving what the set
// means on nonnegative vectors:
//
//   - Applying S_k with psi_k < 0 at a position whose previous
//     occurrence m is imaginary adds the all-nonpositive form beta_m,
//     and iterating scales that negative part without bound. The whole
//     orbit {S_k^n psi} is equivalent to psi together with "x_j = 0 on
//     the support of beta_m", so such orbits fold into forced-zero
//     positions. Forced positions enter the nonnegativity side of every
//     membership check; in strict checks they stay equality constraints
//     (the orbit members are strict only where beta vanishes).
//   - A candidate that is coefficient-wise >= a kept form (in
//     particular, any form without negative coefficients) is implied by
//     it on x >= 0 and is dropped.
class ThetaSet {
public:
    ThetaSet(std::set<LinearForm> forms, std::set<Int> forced_zero, Int window, bool saturated,
             bool cap_hit, std::size_t escaped)
        : forms_(std::move(forms)), forced_zero_(std::move(forced_zero)),
          window_(std::move(window)), saturated_(saturated), cap_hit_(cap_hit),
          escaped_(escaped) {}

    const std::set<LinearForm>& forms() const { return forms_; }
    const std::set<Int>& forced_zero() const { return forced_zero_; }
    bool contains(const LinearForm& f) const { return forms_.count(f) != 0; }
    std::size_t size() const { return forms_.size(); }
    const Int& window() const { return window_; }
    bool saturated() const { return saturated_; }
    bool generation_cap_hit() const { return cap_hit_; }
    std::size_t escaped_count() const { return escaped_; }

private:
    std::set<LinearForm> forms_;
    std::set<Int> forced_zero_;
    Int window_;
    bool saturated_;
    bool cap_hit_;
    std::size_t escaped_;
};

ThetaSet generate_theta(const PathCrystal& z, const ThetaOptions& opts);

// Closure seeded at the single coordinate form x_seed, never applying
// S_k with k == excluded. Requires excluded > seed >= 1.
ThetaSet generate_theta_excluding(const PathCrystal& z, const Int& seed, const Int& excluded,
                                  const ThetaOptions& opts);

struct PositivityViolation {
    LinearForm form;
    Int position;
};

struct PositivityReport {
    std::vector<PositivityViolation> violations;
    bool ok() const { return violations.empty(); }
};

// First-occurrence positivity: psi_k >= 0 for every generated form at
// every in-window position k with kminus(k) == 0. Window-relative.
PositivityReport check_positivity(const PathCrystal& z, const ThetaSet& theta);

}  // namespace gkm
