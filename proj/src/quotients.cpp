#include "qalg/quotients.hpp"

#include <algorithm>

#include "qalg/braided.hpp"
#include "qalg/linalg.hpp"

namespace qalg {

CentralQuotient::CentralQuotient(PresentationPtr base,
                                 std::vector<std::pair<NcPoly, Scalar>> gens)
    : base_(std::move(base)), gens_(std::move(gens)) {
    for (auto& [g, c] : gens_) {
        g = base_->normal_form(g);
        if (g.is_zero()) throw invalid_parameter_error("quotient generator is zero");
        if (!c.regular_at_one())
            throw not_in_k_error("quotient constant has a pole at q=1: " + c.str());
        for (int k = 0; k < base_->gen_count(); ++k) {
            NcPoly gen = NcPoly::gen(static_cast<unsigned char>(k));
            if (!base_->normal_form(g * gen - gen * g).is_zero())
                throw invalid_parameter_error("quotient generator is not central: " +
                                              poly_str(*base_, g));
        }
    }
}

CentralQuotient CentralQuotient::specialized_at_one() const {
    PresentationPtr cl = base_->specialized_at_one();
    std::vector<std::pair<NcPoly, Scalar>> gens;
    for (const auto& [g, c] : gens_) {
        NcPoly gc;
        for (const auto& [w, k] : g.terms()) gc.add(w, Scalar(k.at_one()));
        gens.emplace_back(std::move(gc), Scalar(c.at_one()));
    }
    return CentralQuotient(cl, std::move(gens));
}

namespace {

struct SpanRow {
    int top_degree;
    std::vector<int> weight;
    SparseRow<Scalar> row;
};

struct WordIndex {
    std::vector<std::vector<Word>> by_degree;
    std::map<Word, int, WordDegLex> index;

    explicit WordIndex(const AlgebraPresentation& a, int D) {
        by_degree = a.normal_words(D);
        int next = 0;
        for (const auto& level : by_degree)
            for (const Word& w : level) index.emplace(w, next++);
    }
    int at(const Word& w) const {
        auto it = index.find(w);
        if (it == index.end()) throw invalid_parameter_error("word outside truncation");
        return it->second;
    }
};

SparseRow<Scalar> coords(const NcPoly& p, const WordIndex& ix) {
    SparseRow<Scalar> r;
    for (const auto& [w, c] : p.terms()) r.emplace(ix.at(w), c);
    return r;
}

std::vector<SpanRow> span_rows(const CentralQuotient& qt, const WordIndex& ix, int D,
                               bool right_side) {
    const auto& base = *qt.base();
    std::vector<SpanRow> rows;
    for (const auto& [g, c] : qt.gens()) {
        int dg = g.degree();
        for (int dw = 0; dw + dg <= D; ++dw) {
            for (const Word& w : ix.by_degree[dw]) {
                NcPoly prod = right_side ? NcPoly::word(w) * g : g * NcPoly::word(w);
                NcPoly v = base.normal_form(prod);
                v.add(w, -c);
                if (v.is_zero()) continue;
                rows.push_back({dg + dw, base.weight_of(w), coords(v, ix)});
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const SpanRow& a, const SpanRow& b) {
        if (a.top_degree != b.top_degree) return a.top_degree < b.top_degree;
        return a.weight < b.weight;
    });
    return rows;
}

} // namespace

QuotientTables quotient_tables(const CentralQuotient& qt, int D, bool right_side) {
    if (D < 0) throw invalid_parameter_error("degree bound must be nonnegative");
    const auto& base = *qt.base();
    WordIndex ix(base, D);
    auto rows = span_rows(qt, ix, D, right_side);

    std::map<std::vector<int>, Eliminator<Scalar>> blocks;
    QuotientTables out;
    out.hilbert.dims.resize(D + 1, 0);
    out.weights.resize(D + 1);
    size_t next_row = 0;
    for (int d = 0; d <= D; ++d) {
        // rank increments of the degree-<=d span, per weight block
        std::map<std::vector<int>, long> increment;
        while (next_row < rows.size() && rows[next_row].top_degree == d) {
            auto& r = rows[next_row];
            if (blocks.try_emplace(r.weight).first->second.insert(std::move(r.row)))
                ++increment[r.weight];
            ++next_row;
        }
        long dim = 0;
        for (const Word& w : ix.by_degree[d]) {
            std::vector<int> wt = base.weight_of(w);
            ++out.weights[d].mult[wt];
        }
        for (auto& [wt, m] : out.weights[d].mult) {
            auto inc = increment.find(wt);
            if (inc != increment.end()) m -= inc->second;
            dim += m;
        }
        // drop exhausted weight classes
        std::erase_if(out.weights[d].mult, [](const auto& kv) { return kv.second == 0; });
        out.hilbert.dims[d] = dim;
    }
    return out;
}

HilbertTable hilbert(const CentralQuotient& qt, int D) {
    return quotient_tables(qt, D).hilbert;
}

WeightTable weight_table(const CentralQuotient& qt, int d) {
    return quotient_tables(qt, d).weights.at(d);
}

HilbertTable classical_oracle(const CentralQuotient& qt, int D) {
    return hilbert(qt.specialized_at_one(), D);
}

QuotientTables classical_tables(const CentralQuotient& qt, int D) {
    return quotient_tables(qt.specialized_at_one(), D);
}

bool member(const NcPoly& p, const CentralQuotient& qt, int cap) {
    const auto& base = *qt.base();
    NcPoly pn = base.normal_form(p);
    if (pn.is_zero()) return true;
    if (pn.degree() > cap) throw invalid_parameter_error("member: degree exceeds cap");
    WordIndex ix(base, cap);
    Eliminator<Scalar> elim;
    for (auto& r : span_rows(qt, ix, cap, false)) elim.insert(std::move(r.row));
    return elim.contains(coords(pn, ix));
}

namespace {

long span_rank(const std::vector<std::vector<SpanRow>>& groups) {
    Eliminator<Scalar> elim;
    for (const auto& g : groups)
        for (const auto& r : g) elim.insert(r.row);
    return elim.rank();
}

} // namespace

bool equal_truncated_ideals(const CentralQuotient& a, const CentralQuotient& b, int cap) {
    if (a.base() != b.base())
        throw invalid_parameter_error("ideal comparison requires a common base presentation");
    WordIndex ix(*a.base(), cap);
    auto ra = span_rows(a, ix, cap, false);
    auto rb = span_rows(b, ix, cap, false);
    long rank_a = span_rank({ra});
    long rank_b = span_rank({rb});
    long rank_ab = span_rank({ra, rb});
    return rank_a == rank_b && rank_b == rank_ab;
}

bool two_sided_spans_coincide(const CentralQuotient& qt, int cap) {
    WordIndex ix(*qt.base(), cap);
    auto left = span_rows(qt, ix, cap, false);
    auto right = span_rows(qt, ix, cap, true);
    long rank_l = span_rank({left});
    long rank_r = span_rank({right});
    long rank_lr = span_rank({left, right});
    return rank_l == rank_r && rank_r == rank_lr;
}

CentralQuotient nilcone(int n) {
    if (n < 2) throw invalid_parameter_error("nilcone: n must be >= 2");
    auto rea = rea_presentation(n);
    std::vector<std::pair<NcPoly, Scalar>> gens;
    for (int d = 1; d <= n; ++d) gens.emplace_back(trace_power(d, n), Scalar(0));
    return CentralQuotient(rea, std::move(gens));
}

CentralQuotient orbit_quotient_n2(const XiSpec& xi) {
    xi.validate();
    if (xi.n != 2) throw invalid_parameter_error("orbit_quotient_n2: xi must have n = 2");
    auto rea = rea_presentation(2);
    std::vector<std::pair<NcPoly, Scalar>> gens;
    gens.emplace_back(trace_power(1, 2), tau_at_xi(1, xi));
    gens.emplace_back(phi_tau2(), tau_at_xi(2, xi));
    return CentralQuotient(rea, std::move(gens));
}

} // namespace qalg
