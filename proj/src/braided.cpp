#include "qalg/braided.hpp"

#include <map>
#include <mutex>

#include "qalg/quotients.hpp"

namespace qalg {

std::vector<NcPoly> rea_relations(int n, const AlgebraPresentation& target) {
    TensorOperator rh = build_r_hat(n);
    std::vector<NcPoly> rels;
    for (int i = 1; i <= n; ++i)
        for (int s = 1; s <= n; ++s)
            for (int j = 1; j <= n; ++j)
                for (int t = 1; t <= n; ++t) {
                    NcPoly rel;
                    // sum_{a,b,d,f} rh^{is}_{ab} l^b_d rh^{ad}_{jf} l^f_t
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) {
                            Scalar c1 = rh.entry(i, s, a, b);
                            if (c1.is_zero()) continue;
                            for (int d = 1; d <= n; ++d)
                                for (int f = 1; f <= n; ++f) {
                                    Scalar c2 = rh.entry(a, d, j, f);
                                    if (c2.is_zero()) continue;
                                    Scalar c = c1;
                                    c *= c2;
                                    rel += target.gen_poly(b, d) * target.gen_poly(f, t) * c;
                                }
                        }
                    // - sum_{b,c,d,f} l^s_b rh^{ib}_{cd} l^d_f rh^{cf}_{jt}
                    for (int b = 1; b <= n; ++b)
                        for (int c = 1; c <= n; ++c)
                            for (int d = 1; d <= n; ++d) {
                                Scalar c1 = rh.entry(i, b, c, d);
                                if (c1.is_zero()) continue;
                                for (int f = 1; f <= n; ++f) {
                                    Scalar c2 = rh.entry(c, f, j, t);
                                    if (c2.is_zero()) continue;
                                    Scalar k = c1;
                                    k *= c2;
                                    rel -= target.gen_poly(s, b) * target.gen_poly(d, f) * k;
                                }
                            }
                    if (!rel.is_zero()) rels.push_back(std::move(rel));
                }
    return rels;
}

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// candidate generator precedences for the PBW certificate search
std::vector<std::vector<GeneratorId>> rea_precedence_candidates(int n) {
    std::vector<std::vector<GeneratorId>> out;
    auto push = [&](std::vector<std::pair<int, int>> order) {
        std::vector<GeneratorId> g;
        for (auto [i, j] : order) g.push_back({Family::l, i, j});
        out.push_back(std::move(g));
    };
    if (n == 2) {
        push({{2, 2}, {1, 1}, {1, 2}, {2, 1}});
        return out;
    }
    if (n == 3) {
        // found by the search below and pinned: diagonal bottom-up, lower
        // triangle reversed row-major, upper triangle row-major
        push({{3, 3}, {2, 2}, {1, 1}, {3, 2}, {3, 1}, {2, 1}, {1, 2}, {1, 3}, {2, 3}});
    }
    // diagonal bottom-up, then strict upper, then strict lower, in a few
    // within-segment orders
    std::vector<std::pair<int, int>> diag, upper, lower;
    for (int i = n; i >= 1; --i) diag.push_back({i, i});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) upper.push_back({i, j});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) lower.push_back({i, j});
    auto rev = [](std::vector<std::pair<int, int>> v) {
        std::reverse(v.begin(), v.end());
        return v;
    };
    auto cat = [&push](std::vector<std::vector<std::pair<int, int>>> parts) {
        std::vector<std::pair<int, int>> all;
        for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
        push(all);
    };
    for (auto u : {upper, rev(upper)})
        for (auto l : {lower, rev(lower)}) {
            cat({diag, u, l});
            cat({diag, l, u});
            cat({rev(diag), u, l});
        }
    // row-major and reversed, as in the matrix bialgebra
    std::vector<std::pair<int, int>> rm;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) rm.push_back({i, j});
    push(rm);
    push(rev(rm));
    // last-row-first sweeps
    std::vector<std::pair<int, int>> lrf;
    for (int i = n; i >= 1; --i)
        for (int j = 1; j <= n; ++j) lrf.push_back({i, j});
    push(lrf);
    push(rev(lrf));
    return out;
}

bool passes_certificate(const AlgebraPresentation& pres, int maxdeg) {
    if (pres.completion().added_rules != 0 || !pres.completion().overlaps_within_cap)
        return false;
    long n2 = pres.gen_count();
    for (int d = 0; d <= maxdeg; ++d)
        if (pres.irreducible_word_count(d) != binom(n2 + d - 1, d)) return false;
    return true;
}

} // namespace

PresentationPtr rea_presentation(int n) {
    static std::map<int, PresentationPtr> cache;
    static std::mutex mx;
    std::lock_guard lock(mx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw invalid_parameter_error("rea_presentation: n must be >= 1");
    int cert_deg = n <= 3 ? 4 : 2;
    PresentationPtr found;
    for (const auto& prec : rea_precedence_candidates(n)) {
        AlgebraPresentation free_alg(n, Family::l, prec, {});
        auto rels = rea_relations(n, free_alg);
        auto pres = std::make_shared<AlgebraPresentation>(n, Family::l, prec, std::move(rels));
        if (passes_certificate(*pres, cert_deg)) {
            found = pres;
            break;
        }
    }
    if (!found)
        throw orientation_error(
            "no searched precedence yields a confluent quadratic presentation", "rea n=" +
            std::to_string(n));
    cache.emplace(n, found);
    return found;
}

MatrixOverAlgebra l_power(int k, const PresentationPtr& rea) {
    if (k < 1) throw invalid_parameter_error("l_power: k must be >= 1");
    int n = rea->n();
    MatrixOverAlgebra m(n, std::vector<NcPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = rea->gen_poly(i + 1, j + 1);
    MatrixOverAlgebra acc = m;
    for (int p = 1; p < k; ++p) {
        MatrixOverAlgebra next(n, std::vector<NcPoly>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                NcPoly s;
                for (int t = 0; t < n; ++t) s += acc[i][t] * m[t][j];
                next[i][j] = rea->normal_form(s);
            }
        acc = std::move(next);
    }
    return acc;
}

NcPoly trace_power(int k, int n) {
    auto rea = rea_presentation(n);
    MatrixOverAlgebra lk = l_power(k, rea);
    NcPoly out;
    for (int i = 1; i <= n; ++i) out += lk[i - 1][i - 1] * Scalar::q_power(n + 1 - 2 * i);
    return rea->normal_form(out);
}

CentralityReport check_central(const NcPoly& p, const PresentationPtr& rea) {
    CentralityReport rep{true, {}};
    NcPoly pn = rea->normal_form(p);
    for (int g = 0; g < rea->gen_count(); ++g) {
        NcPoly gp = NcPoly::gen(static_cast<unsigned char>(g));
        NcPoly res = rea->normal_form(pn * gp - gp * pn);
        if (!res.is_zero()) {
            rep.ok = false;
            rep.residuals.push_back(
                {"[p, " + rea->gen_name(g) + "]", false, poly_str(*rea, res)});
        }
    }
    return rep;
}

CoinvarianceReport check_coinvariant(const NcPoly& p, int n) {
    auto rea = rea_presentation(n);
    auto sl = sl_presentation(n);
    TensorAlgebra t({rea, sl});
    TensorPoly<Scalar> beta = adjoint_coaction_lqm(rea->normal_form(p), rea, sl);
    TensorPoly<Scalar> res = t.reduce(beta - t.embed(rea->normal_form(p), 0));
    return {res.is_zero(), tensor_str(t, res)};
}

NcPoly phi_tau2() {
    auto rea = rea_presentation(2);
    NcPoly p = rea->gen_poly(1, 1) * rea->gen_poly(2, 2) -
               rea->gen_poly(1, 2) * rea->gen_poly(2, 1) * Scalar::q_power(2);
    return rea->normal_form(p);
}

PhiTau2Report phi_tau2_identity(const Scalar& c1, const Scalar& c2, int cap) {
    auto rea = rea_presentation(2);
    Scalar q = Scalar::q();
    NcPoly tr = trace_power(1, 2);
    NcPoly tr2 = trace_power(2, 2);
    Scalar lambda = (q + Scalar::q_power(-1)).inv();
    NcPoly rhs = (rea->normal_form(tr * tr) * q - tr2 * (q * q)) * lambda;
    NcPoly res = rea->normal_form(phi_tau2() - rhs);

    PhiTau2Report rep;
    rep.identity_ok = res.is_zero();
    rep.identity_residual = poly_str(*rea, res);

    // ({Tr - c1, Phi(tau2) - c2}) = ({Tr - c1, Tr(L^2) - c2'}) truncated at cap
    Scalar c2p = (q * c1 * c1 - (q + Scalar::q_power(-1)) * c2) / (q * q);
    CentralQuotient a(rea, {{tr, c1}, {phi_tau2(), c2}});
    CentralQuotient b(rea, {{tr, c1}, {tr2, c2p}});
    rep.ideal_equality_ok = equal_truncated_ideals(a, b, cap);
    return rep;
}

} // namespace qalg
