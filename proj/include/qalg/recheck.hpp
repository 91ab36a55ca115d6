#pragma once

#include <map>
#include <string>
#include <vector>

#include "qalg/rmatrix.hpp"

namespace qalg {

/// Commutative polynomial in a fixed list of free parameters with Scalar
/// coefficients; exponent vectors are indexed by parameter position.
class ParamPoly {
public:
    using Terms = std::map<std::vector<int>, Scalar>;

    ParamPoly() = default;
    ParamPoly(long c) : ParamPoly(Scalar(c)) {}
    explicit ParamPoly(Scalar c) {
        if (!c.is_zero()) terms_.emplace(std::vector<int>{}, std::move(c));
    }
    static ParamPoly variable(int index) {
        ParamPoly p;
        std::vector<int> e(index + 1, 0);
        e[index] = 1;
        p.terms_.emplace(std::move(e), Scalar(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && degree() == 0);
    }
    Scalar constant_value() const;
    int degree() const;
    const Terms& terms() const { return terms_; }

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

    std::string str(const std::vector<std::string>& params) const;

private:
    Terms terms_;
    void add(std::vector<int> e, const Scalar& c);
};

/// Candidate constant matrix for the reflection equation, with optional
/// free symbolic parameters in its entries.
struct CandidateMatrix {
    int n = 0;
    std::vector<std::string> params;
    std::vector<std::vector<ParamPoly>> entries;

    /// Parse entries as scalar expressions extended with single-letter
    /// parameter symbols.
    static CandidateMatrix parse(int n, const std::vector<std::vector<std::string>>& text);
};

struct ReResidual {
    // tensor-space slot (i,s),(j,t) -> residual polynomial
    struct Slot {
        int i, s, j, t;
        ParamPoly value;
    };
    std::vector<Slot> slots;
    bool is_zero() const { return slots.empty(); }
};

/// Exact residual of r_hat (I (x) B) r_hat (I (x) B) - (I (x) B) r_hat (I (x) B) r_hat.
ReResidual re_residual(const CandidateMatrix& B);

struct ReSolutionCheck {
    bool solution;
    ReResidual residual;
};

/// Constant-matrix reflection equation check; entries must be parameter-free.
ReSolutionCheck is_re_solution(const CandidateMatrix& B);

/// Residual polynomials of a parametric family; the zero set of the list is
/// the solution locus.
std::vector<ReResidual::Slot> scan_family(const CandidateMatrix& B);

} // namespace qalg
