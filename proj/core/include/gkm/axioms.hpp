#pragma once

#include "gkm/crystal_elem.hpp"
#include "gkm/index_id.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gkm {

struct AxiomViolation {
    std::string axiom;  // "wt-raise", "wt-lower", "phi-eps-pairing", "inverse", "stat-raise", "stat-lower", "minus-inf"
    std::string element;
    std::string index;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    std::size_t checks = 0;
    bool ok() const { return violations.empty(); }
};

// Evaluates the abstract-crystal axioms on every (element, index) pair of
// the sample: weight shifts by +-alpha_i under raising/lowering, phi_i =
// epsilon_i + <h_i, wt>, the raising/lowering statistics updates for real
// and imaginary indices, the partial-inverse law, and that phi_i = -inf
// forces both operators to vanish. Used as a test harness; violations are
// reported, not thrown.
AxiomReport check_crystal_axioms(std::span<const CrystalElem> elements,
                                 std::span<const IndexId> indices);

}  // namespace gkm
