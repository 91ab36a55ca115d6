#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qalg/freealg.hpp"

namespace qalg {

enum class Family : unsigned char { x, t, l };

inline char family_char(Family f) {
    switch (f) {
        case Family::x: return 'x';
        case Family::t: return 't';
        case Family::l: return 'l';
    }
    return '?';
}

/// Indexed generator of one of the matrix algebras: family tag plus
/// 1-based row and column within the ambient n x n matrix.
struct GeneratorId {
    Family fam;
    int row;
    int col;
    auto operator<=>(const GeneratorId&) const = default;
};

using NcPoly = Poly<Scalar>;

/// A presented algebra: generator table (index = precedence rank, so the
/// structural word order is the monomial order), inter-reduced oriented
/// rewrite rules, Z^n weight grading, and the completion certificate.
/// Immutable after construction.
class AlgebraPresentation {
public:
    AlgebraPresentation(int n, Family fam, std::vector<GeneratorId> precedence,
                        std::vector<NcPoly> relations, int completion_cap = 4);

    int n() const { return n_; }
    Family family() const { return fam_; }
    int gen_count() const { return static_cast<int>(gens_.size()); }
    const std::vector<GeneratorId>& generators() const { return gens_; }
    const RuleSystem<Scalar>& system() const { return sys_; }
    const CompletionReport& completion() const { return report_; }

    int gen_index(const GeneratorId& g) const;
    int gen_index(int row, int col) const { return gen_index({fam_, row, col}); }
    const GeneratorId& gen(int index) const { return gens_.at(index); }
    std::string gen_name(int index) const;

    NcPoly gen_poly(int row, int col, Scalar c = Scalar(1)) const {
        return NcPoly::gen(static_cast<unsigned char>(gen_index(row, col)), std::move(c));
    }

    NcPoly normal_form(const NcPoly& p) const;
    long irreducible_word_count(int d) const;
    std::vector<std::vector<Word>> normal_words(int maxdeg) const {
        return sys_.normal_words(maxdeg);
    }

    /// Sum over letters of e_row - e_col.
    std::vector<int> weight_of(const Word& w) const;

    /// Same rules with every coefficient specialized at q=1; throws
    /// not_in_k_error if any rule coefficient has a pole there.
    std::shared_ptr<const AlgebraPresentation> specialized_at_one() const;

private:
    int n_;
    Family fam_;
    std::vector<GeneratorId> gens_;
    std::map<GeneratorId, int> index_;
    RuleSystem<Scalar> sys_;
    CompletionReport report_;
};

using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

/// Tensor product of presented algebras with the middle interchange law;
/// products reduce every factor to normal form.
class TensorAlgebra {
public:
    explicit TensorAlgebra(std::vector<PresentationPtr> legs) : legs_(std::move(legs)) {}
    static TensorAlgebra of(PresentationPtr left, PresentationPtr right) {
        return TensorAlgebra({std::move(left), std::move(right)});
    }

    int arity() const { return static_cast<int>(legs_.size()); }
    const PresentationPtr& leg(int i) const { return legs_.at(i); }

    TensorPoly<Scalar> reduce(const TensorPoly<Scalar>& t) const;
    TensorPoly<Scalar> multiply(const TensorPoly<Scalar>& a, const TensorPoly<Scalar>& b) const;

    /// Embed p into the given leg (unit words elsewhere).
    TensorPoly<Scalar> embed(const NcPoly& p, int leg) const;

private:
    std::vector<PresentationPtr> legs_;
};

std::string word_str(const AlgebraPresentation& a, const Word& w);
std::string poly_str(const AlgebraPresentation& a, const NcPoly& p);
std::string tensor_str(const TensorAlgebra& t, const TensorPoly<Scalar>& p);

/// Parse the x[i,j] / t[i,j] / l[i,j] polynomial text format.
NcPoly parse_poly(const AlgebraPresentation& a, std::string_view text);

} // namespace qalg
