#pragma once

#include <vector>

#include "qalg/presentation.hpp"
#include "qalg/rmatrix.hpp"

namespace qalg {

/// Quantum coordinate ring of n x n matrices, presented by the derived
/// entrywise consequences of the R-matrix exchange identity, oriented
/// under the degree-lexicographic row-major order. Cached per n.
PresentationPtr frt_presentation(int n);

/// Entrywise relations of r_hat (X (x) I)(I (x) X) = (X (x) I)(I (x) X) r_hat
/// for the given generator family, before orientation.
std::vector<NcPoly> frt_relations(int n, const AlgebraPresentation& target);

/// Quantum minor det_q(I, J): signed q-sum over bijections I -> J of
/// row-ordered products. Index sets are 1-based and strictly increasing.
NcPoly quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols,
                     const AlgebraPresentation& a);

/// det_q of the full index set.
NcPoly quantum_det(const AlgebraPresentation& a);

/// The basic coinvariant tau_d: weighted sum of principal d x d quantum
/// minors, in normal form.
NcPoly tau(int d, const AlgebraPresentation& a);

/// Comultiplication x^i_j -> sum_s x^i_s (x) x^s_j, extended as an algebra
/// homomorphism into the twofold tensor algebra.
TensorPoly<Scalar> comultiply(const NcPoly& p, const PresentationPtr& a);
/// Twice iterated comultiplication, into the threefold tensor algebra.
TensorPoly<Scalar> comultiply2(const NcPoly& p, const PresentationPtr& a);
/// Counit x^i_j -> delta^i_j, extended as an algebra homomorphism.
Scalar counit(const NcPoly& p, const AlgebraPresentation& a);

/// A point of the set P: block-diagonal Jordan form with one nilpotent
/// block of size r followed by pairwise distinct nonzero eigenvalues.
struct XiSpec {
    int n = 0;
    int r = 0;
    std::vector<Scalar> eigenvalues;

    void validate() const;
    /// The matrix J(xi).
    std::vector<std::vector<Scalar>> jordan_matrix() const;
};

/// Throws relation_violation_error (listing a failing relation) unless
/// every defining relation of the presentation vanishes at B.
void check_character(const std::vector<std::vector<Scalar>>& B, const AlgebraPresentation& a);

/// Value of p under x[i,j] -> B[i][j]; checks well-definedness eagerly.
Scalar evaluate_character(const NcPoly& p, const std::vector<std::vector<Scalar>>& B,
                          const AlgebraPresentation& a);

/// tau_d evaluated at J(xi).
Scalar tau_at_xi(int d, const XiSpec& xi);

} // namespace qalg
