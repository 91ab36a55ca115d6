#pragma once

#include <string>
#include <vector>

#include "qalg/qmatrix.hpp"

namespace qalg {

/// Quantum special linear group: FRT relations in the t generators plus
/// the oriented rule from det_q - 1. Cached per n.
PresentationPtr sl_presentation(int n);

/// Antipode, extended anti-homomorphically from the quantum cofactor
/// formula S(t^i_j) = (-q)^{i-j} det_q(rows != j, cols != i).
NcPoly antipode(const NcPoly& p, const PresentationPtr& a);

struct IdentityCheck {
    std::string identity;
    bool ok;
    std::string residual;
};

struct HopfReport {
    std::vector<IdentityCheck> checks;
    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

/// Antipode axiom on all generators, coassociativity, counit axioms and
/// counit/antipode compatibility, by normal-form comparison.
HopfReport verify_hopf(int n);

/// Adjoint coaction on the matrix bialgebra, computed from the twice
/// iterated coproduct: x -> sum x_2 (x) S(pi(x_1)) pi(x_3).
TensorPoly<Scalar> adjoint_coaction_fqm(const NcPoly& p, const PresentationPtr& fqm,
                                        const PresentationPtr& sl);

/// Adjoint coaction on the reflection equation algebra, extended as an
/// algebra homomorphism from l^i_j -> l^a_b (x) S(t^i_a) t^b_j.
TensorPoly<Scalar> adjoint_coaction_lqm(const NcPoly& p, const PresentationPtr& rea,
                                        const PresentationPtr& sl);

/// Retag a polynomial between same-shape presentations (x <-> t families).
NcPoly retag(const NcPoly& p, const AlgebraPresentation& from, const AlgebraPresentation& to);

} // namespace qalg
