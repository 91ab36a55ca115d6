#pragma once

#include <vector>

#include "qalg/qsl.hpp"

namespace qalg {

/// Reflection equation algebra on the l generators, derived entrywise from
/// r_hat (I (x) L) r_hat (I (x) L) = (I (x) L) r_hat (I (x) L) r_hat and
/// oriented under a precedence that passes the flat-dimension certificate.
/// Cached per n.
PresentationPtr rea_presentation(int n);

/// Entrywise relations of the reflection equation for the given generator
/// table, before orientation.
std::vector<NcPoly> rea_relations(int n, const AlgebraPresentation& target);

using MatrixOverAlgebra = std::vector<std::vector<NcPoly>>;

/// L^k with entries reduced to normal form after every multiplication.
MatrixOverAlgebra l_power(int k, const PresentationPtr& rea);

/// Tr_q(L^k) = sum_i q^{n+1-2i} (L^k)^i_i, in normal form.
NcPoly trace_power(int k, int n);

struct CentralityReport {
    bool ok;
    std::vector<IdentityCheck> residuals;  // one per generator with nonzero residual
};

/// p central: normal_form(p g - g p) = 0 for every generator g.
CentralityReport check_central(const NcPoly& p, const PresentationPtr& rea);

struct CoinvarianceReport {
    bool ok;
    std::string residual;
};

/// beta(p) = p (x) 1 under the adjoint coaction.
CoinvarianceReport check_coinvariant(const NcPoly& p, int n);

struct PhiTau2Report {
    bool identity_ok;           // Phi(tau_2) = (q+q^-1)^{-1}(q Tr^2 - q^2 Tr(L^2))
    std::string identity_residual;
    bool ideal_equality_ok;     // Newton substitution gives equal truncated spans
    bool all_ok() const { return identity_ok && ideal_equality_ok; }
};

/// Phi(tau_2) = l11 l22 - q^2 l12 l21 in the n=2 algebra.
NcPoly phi_tau2();

/// Verify the displayed n=2 identity and the bounded-degree equality of the
/// ideals ({Tr - c1, Phi(tau_2) - c2}) and ({Tr - c1, Tr(L^2) - c2'}) under
/// the Newton substitution c2' = (q c1^2 - (q+q^-1) c2)/q^2.
PhiTau2Report phi_tau2_identity(const Scalar& c1 = Scalar(0), const Scalar& c2 = Scalar(0),
                                int cap = 4);

} // namespace qalg
