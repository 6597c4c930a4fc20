#include "gkm/axioms.hpp"

#include "gkm/weight.hpp"

namespace gkm {

namespace {

Weight alpha(const IndexId& i) {
    Weight w;
    w.add_multiple_of_alpha(i, 1);
    return w;
}

}  // namespace

AxiomReport check_crystal_axioms(std::span<const CrystalElem> elements,
                                 std::span<const IndexId> indices) {
    AxiomReport report;
    auto flag = [&](const char* axiom, const CrystalElem& b, const IndexId& i,
                    std::string detail) {
        report.violations.push_back({axiom, b.str(), i.str(), std::move(detail)});
    };

    for (const auto& b : elements) {
        const CartanDatum& d = b.datum();
        for (const auto& i : indices) {
            ++report.checks;
            const ExtInt eps = b.epsilon(i);
            const ExtInt ph = b.phi(i);

            // phi_i(b) = epsilon_i(b) + <h_i, wt(b)>
            const Int pair = pairing(d, i, b.weight());
            if (ph != eps + ExtInt(pair))
                flag("phi-eps-pairing", b, i,
                     "phi = " + ph.str() + ", eps + <h_i,wt> = " + (eps + ExtInt(pair)).str());

            const auto raised = b.raise(i);
            const auto lowered = b.lower(i);

            if (!ph.is_finite()) {
                if (raised || lowered)
                    flag("minus-inf", b, i, "phi = -inf but an operator acted");
                continue;
            }

            if (raised) {
                if (raised->weight() != b.weight() + alpha(i))
                    flag("wt-raise", b, i, "weight did not gain alpha_i");
                const bool real = d.is_real(i);
                const ExtInt eps2 = raised->epsilon(i);
                const ExtInt ph2 = raised->phi(i);
                if (real && (eps2 != eps - Int(1) || ph2 != ph + ExtInt(1)))
                    flag("stat-raise", b, i, "real raise must shift eps by -1, phi by +1");
                if (!real && (eps2 != eps || ph2 != ph + ExtInt(d.entry(i, i))))
                    flag("stat-raise", b, i, "imaginary raise must keep eps, shift phi by a_ii");
                const auto back = raised->lower(i);
                if (!back || *back != b)
                    flag("inverse", b, i, "lower(raise(b)) != b");
            }

            if (lowered) {
                if (lowered->weight() + alpha(i) != b.weight())
                    flag("wt-lower", b, i, "weight did not lose alpha_i");
                const bool real = d.is_real(i);
                const ExtInt eps2 = lowered->epsilon(i);
                const ExtInt ph2 = lowered->phi(i);
                if (real && (eps2 != eps + ExtInt(1) || ph2 != ph - Int(1)))
                    flag("stat-lower", b, i, "real lower must shift eps by +1, phi by -1");
                if (!real && (eps2 != eps || ph2 != ph - d.entry(i, i)))
                    flag("stat-lower", b, i, "imaginary lower must keep eps, shift phi by -a_ii");
                const auto back = lowered->raise(i);
                if (!back || *back != b)
                    flag("inverse", b, i, "raise(lower(b)) != b");
            }
        }
    }
    return report;
}

}  // namespace gkm
