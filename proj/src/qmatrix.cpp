#include "qalg/qmatrix.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace qalg {

std::vector<NcPoly> frt_relations(int n, const AlgebraPresentation& target) {
    TensorOperator rh = build_r_hat(n);
    std::vector<NcPoly> rels;
    for (int i = 1; i <= n; ++i)
        for (int s = 1; s <= n; ++s)
            for (int j = 1; j <= n; ++j)
                for (int t = 1; t <= n; ++t) {
                    NcPoly rel;
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) {
                            Scalar lc = rh.entry(i, s, a, b);
                            if (!lc.is_zero())
                                rel += target.gen_poly(a, j) * target.gen_poly(b, t) * lc;
                            Scalar rc = rh.entry(a, b, j, t);
                            if (!rc.is_zero())
                                rel -= target.gen_poly(i, a) * target.gen_poly(s, b) * rc;
                        }
                    if (!rel.is_zero()) rels.push_back(std::move(rel));
                }
    return rels;
}

namespace {

std::vector<GeneratorId> row_major_gens(int n, Family fam) {
    std::vector<GeneratorId> g;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) g.push_back({fam, i, j});
    return g;
}

} // namespace

PresentationPtr frt_presentation(int n) {
    static std::map<int, PresentationPtr> cache;
    static std::mutex mx;
    std::lock_guard lock(mx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw invalid_parameter_error("frt_presentation: n must be >= 1");
    // bootstrap presentation with no relations to host the raw polynomials
    AlgebraPresentation free_alg(n, Family::x, row_major_gens(n, Family::x), {});
    auto rels = frt_relations(n, free_alg);
    auto pres = std::make_shared<AlgebraPresentation>(n, Family::x, row_major_gens(n, Family::x),
                                                      std::move(rels));
    cache.emplace(n, pres);
    return pres;
}

namespace {

int inversions(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inv;
    return inv;
}

void permutations(int d, std::vector<int>& cur, std::vector<bool>& used,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == d) {
        fn(cur);
        return;
    }
    for (int k = 0; k < d; ++k) {
        if (used[k]) continue;
        used[k] = true;
        cur.push_back(k);
        permutations(d, cur, used, fn);
        cur.pop_back();
        used[k] = false;
    }
}

} // namespace

NcPoly quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols,
                     const AlgebraPresentation& a) {
    if (rows.empty() || rows.size() != cols.size())
        throw invalid_parameter_error("quantum_minor: index sets must be nonempty, equal size");
    int d = static_cast<int>(rows.size());
    NcPoly out;
    std::vector<int> cur;
    std::vector<bool> used(d, false);
    permutations(d, cur, used, [&](const std::vector<int>& w) {
        Scalar coeff(1);
        int len = inversions(w);
        Scalar neg_q = -Scalar::q();
        for (int k = 0; k < len; ++k) coeff *= neg_q;
        NcPoly term(coeff);
        for (int k = 0; k < d; ++k) term = term * a.gen_poly(rows[k], cols[w[k]]);
        out += term;
    });
    return out;
}

NcPoly quantum_det(const AlgebraPresentation& a) {
    std::vector<int> all;
    for (int i = 1; i <= a.n(); ++i) all.push_back(i);
    return quantum_minor(all, all, a);
}

NcPoly tau(int d, const AlgebraPresentation& a) {
    int n = a.n();
    if (d < 1 || d > n) throw invalid_parameter_error("tau: need 1 <= d <= n");
    NcPoly out;
    std::vector<int> subset;
    // iterate d-element subsets of {1..n}
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(subset.size()) == d) {
            int sum = 0;
            for (int i : subset) sum += i;
            Scalar w = Scalar::q_power(d * (n + 1) - 2 * sum);
            out += quantum_minor(subset, subset, a) * w;
            return;
        }
        for (int i = next; i <= n; ++i) {
            subset.push_back(i);
            rec(i + 1);
            subset.pop_back();
        }
    };
    rec(1);
    return a.normal_form(out);
}

namespace {

TensorPoly<Scalar> comultiply_iter(const NcPoly& p, const PresentationPtr& a, int arity) {
    TensorAlgebra t(std::vector<PresentationPtr>(arity, a));
    TensorPoly<Scalar> out(arity);
    int n = a->n();
    for (const auto& [w, c] : p.terms()) {
        TensorPoly<Scalar> prod = TensorPoly<Scalar>::unit(arity, c);
        for (unsigned char g : w) {
            const GeneratorId& id = a->gen(g);
            // Delta^(arity-1)(x^i_j) = sum over paths i -> ... -> j
            TensorPoly<Scalar> letter(arity);
            std::vector<int> path(arity + 1);
            path[0] = id.row;
            path[arity] = id.col;
            std::function<void(int)> rec = [&](int leg) {
                if (leg == arity) {
                    std::vector<Word> key(arity);
                    for (int m = 0; m < arity; ++m)
                        key[m] = Word(1, static_cast<unsigned char>(
                                             a->gen_index(path[m], path[m + 1])));
                    letter.add(key, Scalar(1));
                    return;
                }
                for (int mid = 1; mid <= n; ++mid) {
                    path[leg] = mid;
                    rec(leg + 1);
                }
            };
            rec(1);
            prod = t.multiply(prod, letter);
        }
        out += prod;
    }
    return t.reduce(out);
}

} // namespace

TensorPoly<Scalar> comultiply(const NcPoly& p, const PresentationPtr& a) {
    return comultiply_iter(p, a, 2);
}

TensorPoly<Scalar> comultiply2(const NcPoly& p, const PresentationPtr& a) {
    return comultiply_iter(p, a, 3);
}

Scalar counit(const NcPoly& p, const AlgebraPresentation& a) {
    Scalar out(0);
    for (const auto& [w, c] : p.terms()) {
        bool diag = true;
        for (unsigned char g : w)
            if (a.gen(g).row != a.gen(g).col) {
                diag = false;
                break;
            }
        if (diag) out += c;
    }
    return out;
}

void XiSpec::validate() const {
    if (n < 1) throw invalid_parameter_error("XiSpec: n must be >= 1");
    if (r < 0 || r > n) throw invalid_parameter_error("XiSpec: need 0 <= r <= n");
    if (static_cast<int>(eigenvalues.size()) != n - r)
        throw invalid_parameter_error("XiSpec: expected n - r eigenvalues");
    for (size_t i = 0; i < eigenvalues.size(); ++i) {
        if (eigenvalues[i].is_zero())
            throw invalid_parameter_error("XiSpec: eigenvalues must be nonzero");
        for (size_t j = i + 1; j < eigenvalues.size(); ++j)
            if (eigenvalues[i] == eigenvalues[j])
                throw invalid_parameter_error("XiSpec: eigenvalues must be pairwise distinct");
    }
}

std::vector<std::vector<Scalar>> XiSpec::jordan_matrix() const {
    validate();
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 1; i < r; ++i) m[i - 1][i] = Scalar(1);
    for (int k = 0; k < n - r; ++k) m[r + k][r + k] = eigenvalues[k];
    return m;
}

namespace {

Scalar eval_poly_at(const NcPoly& p, const std::vector<std::vector<Scalar>>& B,
                    const AlgebraPresentation& a) {
    Scalar out(0);
    for (const auto& [w, c] : p.terms()) {
        Scalar v = c;
        for (unsigned char g : w) {
            const auto& id = a.gen(g);
            v *= B[id.row - 1][id.col - 1];
            if (v.is_zero()) break;
        }
        out += v;
    }
    return out;
}

} // namespace

void check_character(const std::vector<std::vector<Scalar>>& B, const AlgebraPresentation& a) {
    int n = a.n();
    if (static_cast<int>(B.size()) != n)
        throw invalid_parameter_error("character matrix has wrong size");
    for (const auto& row : B)
        if (static_cast<int>(row.size()) != n)
            throw invalid_parameter_error("character matrix has wrong size");
    for (const auto& rule : a.system().rules()) {
        NcPoly rel = NcPoly::word(rule.lhs) - rule.rhs;
        Scalar v = eval_poly_at(rel, B, a);
        if (!v.is_zero())
            throw relation_violation_error(
                "matrix does not define a character; failing relation evaluates to " + v.str(),
                poly_str(a, rel));
    }
}

Scalar evaluate_character(const NcPoly& p, const std::vector<std::vector<Scalar>>& B,
                          const AlgebraPresentation& a) {
    check_character(B, a);
    return eval_poly_at(p, B, a);
}

Scalar tau_at_xi(int d, const XiSpec& xi) {
    xi.validate();
    auto pres = frt_presentation(xi.n);
    return evaluate_character(tau(d, *pres), xi.jordan_matrix(), *pres);
}

} // namespace qalg
