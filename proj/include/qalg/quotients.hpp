#pragma once

#include <map>
#include <vector>

#include "qalg/qmatrix.hpp"

namespace qalg {

/// Quotient of a graded presented algebra by an ideal generated by pairs
/// (g - c) with g central and c a constant regular at q=1. The handle also
/// carries degree-truncated ideal spans, built on demand.
class CentralQuotient {
public:
    CentralQuotient(PresentationPtr base, std::vector<std::pair<NcPoly, Scalar>> gens);

    const PresentationPtr& base() const { return base_; }
    const std::vector<std::pair<NcPoly, Scalar>>& gens() const { return gens_; }

    /// Same quotient with every scalar specialized at q=1.
    CentralQuotient specialized_at_one() const;

private:
    PresentationPtr base_;
    std::vector<std::pair<NcPoly, Scalar>> gens_;
};

struct HilbertTable {
    std::vector<long> dims;  // degree 0..D of the filtered quotient
    bool operator==(const HilbertTable&) const = default;
};

struct WeightTable {
    std::map<std::vector<int>, long> mult;  // weight tuple -> multiplicity
    bool operator==(const WeightTable&) const = default;
};

struct QuotientTables {
    HilbertTable hilbert;
    std::vector<WeightTable> weights;  // one table per degree 0..D
};

/// Filtered dimension and weight tables up to degree D: per degree,
/// (number of normal words) minus the rank increment of the truncated
/// ideal span {normal_form((g - c) w)}; ranks are computed per weight
/// block with exact Gaussian elimination over the coefficient field.
QuotientTables quotient_tables(const CentralQuotient& qt, int D, bool right_side = false);

HilbertTable hilbert(const CentralQuotient& qt, int D);
WeightTable weight_table(const CentralQuotient& qt, int d);

/// Ground truth at q=1: the same computation over the specialized
/// commutative presentation.
HilbertTable classical_oracle(const CentralQuotient& qt, int D);
QuotientTables classical_tables(const CentralQuotient& qt, int D);

/// Ideal membership at bounded degree.
bool member(const NcPoly& p, const CentralQuotient& qt, int cap);

/// Degree-truncated spans of two quotients of the same base coincide.
bool equal_truncated_ideals(const CentralQuotient& a, const CentralQuotient& b, int cap);

/// Left and right truncated spans coincide (two-sidedness of the ideal).
bool two_sided_spans_coincide(const CentralQuotient& qt, int cap);

/// Quantum nilpotent cone: quotient by Tr_q(L^d), d = 1..n.
CentralQuotient nilcone(int n);

/// n=2 orbit-closure quotient at xi: generators (Tr_q(L), tau_1(xi)) and
/// (l11 l22 - q^2 l12 l21, tau_2(xi)).
CentralQuotient orbit_quotient_n2(const XiSpec& xi);

} // namespace qalg
