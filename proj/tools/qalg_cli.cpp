// Command-line front end: constructions and verifications with
// deterministic JSON (or CSV) reports. Exit codes: 0 pass, 1 verification
// failure, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "qalg/braided.hpp"
#include "qalg/jsonio.hpp"
#include "qalg/qsl.hpp"
#include "qalg/quotients.hpp"
#include "qalg/recheck.hpp"
#include "qalg/sphere.hpp"

using namespace qalg;

namespace {

PresentationPtr algebra_by_name(const std::string& name, int n) {
    if (name == "frt") return frt_presentation(n);
    if (name == "sl") return sl_presentation(n);
    if (name == "rea") return rea_presentation(n);
    throw invalid_parameter_error("unknown algebra: " + name);
}

CentralQuotient quotient_by_name(const std::string& name, int n, const std::string& xi_json) {
    if (name == "nilcone") return nilcone(n);
    if (name == "orbit") {
        if (xi_json.empty())
            throw invalid_parameter_error("orbit quotient needs --xi '<XiSpec JSON>'");
        XiSpec xi = xi_from_json(Json::parse(xi_json));
        return orbit_quotient_n2(xi);
    }
    throw invalid_parameter_error("unknown quotient: " + name);
}

Json check_entry(const std::string& identity, bool ok, const std::string& residual) {
    return Json{{"identity", identity}, {"status", ok ? "pass" : "fail"}, {"residual", residual}};
}

int emit_report(const Json& checks) {
    bool all_ok = true;
    for (const auto& c : checks)
        if (c.at("status") != "pass") all_ok = false;
    Json out{{"status", all_ok ? "pass" : "fail"}, {"checks", checks}};
    std::cout << out.dump() << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation in quantum matrix algebras"};
    app.require_subcommand(1);

    // relations
    auto* cmd_rel = app.add_subcommand("relations", "defining relations of an algebra");
    std::string rel_algebra = "rea";
    int rel_n = 2;
    bool rel_json = true;
    cmd_rel->add_option("--algebra", rel_algebra)->check(CLI::IsMember({"frt", "sl", "rea"}));
    cmd_rel->add_option("--n", rel_n);
    cmd_rel->add_flag("--json,!--plain", rel_json);
    cmd_rel->callback([&]() {
        auto a = algebra_by_name(rel_algebra, rel_n);
        Json rels = relations_to_json(*a);
        if (rel_json) {
            std::cout << Json{{"algebra", rel_algebra}, {"n", rel_n}, {"relations", rels}}.dump()
                      << "\n";
        } else {
            for (const auto& r : rels) std::cout << r.at("relation").get<std::string>() << "\n";
        }
    });

    // nf
    auto* cmd_nf = app.add_subcommand("nf", "normal form of a polynomial");
    std::string nf_algebra = "frt", nf_poly;
    int nf_n = 2;
    bool nf_json = false;
    cmd_nf->add_option("--algebra", nf_algebra)->check(CLI::IsMember({"frt", "sl", "rea"}));
    cmd_nf->add_option("--n", nf_n);
    cmd_nf->add_option("poly", nf_poly, "polynomial, e.g. \"x[1,2]*x[1,1]\"")->required();
    cmd_nf->add_flag("--json", nf_json);
    cmd_nf->callback([&]() {
        auto a = algebra_by_name(nf_algebra, nf_n);
        NcPoly p = a->normal_form(parse_poly(*a, nf_poly));
        if (nf_json)
            std::cout << Json{{"normal_form", poly_str(*a, p)}, {"terms", poly_to_json(*a, p)}}
                             .dump()
                      << "\n";
        else
            std::cout << poly_str(*a, p) << "\n";
    });

    // tau
    auto* cmd_tau = app.add_subcommand(
        "tau", "coinvariants: tau_d of the matrix bialgebra, or Tr_q(L^d) with --algebra rea");
    int tau_n = 2, tau_d = 1;
    std::string tau_algebra = "frt", tau_xi;
    bool tau_json = false;
    cmd_tau->add_option("--n", tau_n);
    cmd_tau->add_option("--d", tau_d);
    cmd_tau->add_option("--algebra", tau_algebra)->check(CLI::IsMember({"frt", "rea"}));
    cmd_tau->add_option("--xi", tau_xi, "evaluate at the Jordan form of this XiSpec");
    cmd_tau->add_flag("--json", tau_json);
    cmd_tau->callback([&]() {
        if (!tau_xi.empty()) {
            XiSpec xi = xi_from_json(Json::parse(tau_xi));
            Scalar v = tau_at_xi(tau_d, xi);
            if (tau_json)
                std::cout << Json{{"d", tau_d}, {"xi", xi_to_json(xi)}, {"value", v.str()}}.dump()
                          << "\n";
            else
                std::cout << v.str() << "\n";
            return;
        }
        NcPoly p;
        PresentationPtr a;
        if (tau_algebra == "rea") {
            a = rea_presentation(tau_n);
            p = trace_power(tau_d, tau_n);
        } else {
            a = frt_presentation(tau_n);
            p = tau(tau_d, *a);
        }
        if (tau_json)
            std::cout << Json{{"d", tau_d},
                              {"poly", poly_str(*a, p)},
                              {"terms", poly_to_json(*a, p)}}
                             .dump()
                      << "\n";
        else
            std::cout << poly_str(*a, p) << "\n";
    });

    // hilbert
    auto* cmd_hil = app.add_subcommand("hilbert", "filtered dimension table of a quotient");
    std::string hil_quotient = "nilcone", hil_xi;
    int hil_n = 2, hil_maxdeg = 6;
    bool hil_json = true, hil_q1 = false;
    cmd_hil->add_option("--quotient", hil_quotient)->check(CLI::IsMember({"nilcone", "orbit"}));
    cmd_hil->add_option("--n", hil_n);
    cmd_hil->add_option("--xi", hil_xi);
    cmd_hil->add_option("--max-deg", hil_maxdeg);
    cmd_hil->add_flag("--json,!--csv", hil_json);
    cmd_hil->add_flag("--q-at-one", hil_q1, "run the classical oracle path");
    cmd_hil->callback([&]() {
        CentralQuotient qt = quotient_by_name(hil_quotient, hil_n, hil_xi);
        HilbertTable t = hil_q1 ? classical_oracle(qt, hil_maxdeg) : hilbert(qt, hil_maxdeg);
        if (hil_json) {
            std::cout << Json{{"dims", t.dims}}.dump() << "\n";
        } else {
            std::cout << "degree,dim\n";
            for (size_t d = 0; d < t.dims.size(); ++d) std::cout << d << "," << t.dims[d] << "\n";
        }
    });

    // weights
    auto* cmd_w = app.add_subcommand("weights", "weight multiplicity tables of a quotient");
    std::string w_quotient = "nilcone", w_xi;
    int w_n = 2, w_maxdeg = 4;
    bool w_json = true, w_q1 = false;
    cmd_w->add_option("--quotient", w_quotient)->check(CLI::IsMember({"nilcone", "orbit"}));
    cmd_w->add_option("--n", w_n);
    cmd_w->add_option("--xi", w_xi);
    cmd_w->add_option("--max-deg", w_maxdeg);
    cmd_w->add_flag("--json,!--csv", w_json);
    cmd_w->add_flag("--q-at-one", w_q1);
    cmd_w->callback([&]() {
        CentralQuotient qt = quotient_by_name(w_quotient, w_n, w_xi);
        QuotientTables t = w_q1 ? classical_tables(qt, w_maxdeg) : quotient_tables(qt, w_maxdeg);
        if (w_json) {
            Json degrees = Json::array();
            for (int d = 0; d <= w_maxdeg; ++d) {
                Json weights = Json::array();
                for (const auto& [wt, m] : t.weights[d].mult)
                    weights.push_back(Json{{"weight", wt}, {"mult", m}});
                degrees.push_back(Json{{"degree", d}, {"weights", weights}});
            }
            std::cout << Json{{"degrees", degrees}}.dump() << "\n";
        } else {
            std::cout << "degree,weight,mult\n";
            for (int d = 0; d <= w_maxdeg; ++d)
                for (const auto& [wt, m] : t.weights[d].mult) {
                    std::cout << d << ",";
                    for (size_t k = 0; k < wt.size(); ++k) std::cout << (k ? " " : "") << wt[k];
                    std::cout << "," << m << "\n";
                }
        }
    });

    // check
    auto* cmd_chk = app.add_subcommand("check", "structural verifications");
    std::string chk_what;
    int chk_n = 2, chk_k = 1, chk_cap = 4;
    std::string chk_algebra = "rea";
    cmd_chk
        ->add_option("what", chk_what,
                     "hecke|braid|hopf|central|coinvariant|detq|presentation|phi-tau2|two-sided")
        ->required();
    cmd_chk->add_option("--n", chk_n);
    cmd_chk->add_option("--k", chk_k);
    cmd_chk->add_option("--cap", chk_cap);
    cmd_chk->add_option("--algebra", chk_algebra)->check(CLI::IsMember({"frt", "sl", "rea"}));
    cmd_chk->callback([&]() {
        Json checks = Json::array();
        if (chk_what == "hecke") {
            auto c = check_hecke(chk_n);
            checks.push_back(
                check_entry("(r_hat - q)(r_hat + q^-1) = 0", c.ok, c.ok ? "0" : "nonzero"));
        } else if (chk_what == "braid") {
            auto c = check_braid(chk_n);
            checks.push_back(check_entry("braid relation", c.ok, c.ok ? "0" : "nonzero"));
        } else if (chk_what == "hopf") {
            auto rep = verify_hopf(chk_n);
            for (const auto& c : rep.checks)
                checks.push_back(check_entry(c.identity, c.ok, c.ok ? "0" : c.residual));
        } else if (chk_what == "central") {
            NcPoly p = trace_power(chk_k, chk_n);
            auto rep = check_central(p, rea_presentation(chk_n));
            if (rep.ok)
                checks.push_back(
                    check_entry("Tr_q(L^" + std::to_string(chk_k) + ") central", true, "0"));
            for (const auto& r : rep.residuals)
                checks.push_back(check_entry(r.identity, false, r.residual));
        } else if (chk_what == "coinvariant") {
            auto rep = check_coinvariant(trace_power(chk_k, chk_n), chk_n);
            checks.push_back(
                check_entry("beta(Tr_q(L^" + std::to_string(chk_k) + ")) = Tr_q(L^k) (x) 1",
                            rep.ok, rep.ok ? "0" : rep.residual));
        } else if (chk_what == "detq") {
            auto a = frt_presentation(chk_n);
            NcPoly det = a->normal_form(quantum_det(*a));
            bool central = true;
            for (int g = 0; g < a->gen_count(); ++g) {
                NcPoly gen = NcPoly::gen(static_cast<unsigned char>(g));
                if (!a->normal_form(det * gen - gen * det).is_zero()) central = false;
            }
            checks.push_back(check_entry("det_q central", central, central ? "0" : "nonzero"));
            TensorAlgebra t({a, a});
            TensorPoly<Scalar> dd = comultiply(det, a);
            TensorPoly<Scalar> dxd(2);
            for (const auto& [w1, c1] : det.terms())
                for (const auto& [w2, c2] : det.terms()) {
                    Scalar c = c1;
                    c *= c2;
                    dxd.add({w1, w2}, c);
                }
            bool grouplike = t.reduce(dd - dxd).is_zero();
            checks.push_back(check_entry("Delta(det_q) = det_q (x) det_q", grouplike,
                                         grouplike ? "0" : "nonzero"));
        } else if (chk_what == "presentation") {
            auto a = algebra_by_name(chk_algebra, chk_n);
            const auto& rep = a->completion();
            std::string detail_added = std::to_string(rep.added_rules) + " added";
            for (const auto& lhs : rep.added) detail_added += " " + lhs;
            if (chk_algebra == "sl") {
                // the det rule generates consequences; the gate is the
                // dimension table below
                checks.push_back(check_entry("completion capped", true, detail_added));
            } else {
                checks.push_back(
                    check_entry("completion adds no rules", rep.added_rules == 0, detail_added));
            }
            auto binom = [](long nn, long kk) {
                if (kk < 0 || kk > nn) return 0L;
                long r = 1;
                for (long i = 1; i <= kk; ++i) r = r * (nn - kk + i) / i;
                return r;
            };
            long n2 = a->gen_count();
            bool dims_ok = true;
            std::string detail;
            for (int d = 0; d <= chk_cap; ++d) {
                long got = a->irreducible_word_count(d);
                long want = binom(n2 + d - 1, d);
                if (chk_algebra == "sl") want -= binom(n2 + d - chk_n - 1, d - chk_n);
                if (got != want) dims_ok = false;
                detail += (d ? "," : "") + std::to_string(got);
            }
            checks.push_back(check_entry("flat dimension certificate", dims_ok, detail));
        } else if (chk_what == "phi-tau2") {
            auto rep = phi_tau2_identity(Scalar(0), Scalar(0), chk_cap);
            checks.push_back(check_entry("Phi(tau_2) trace identity", rep.identity_ok,
                                         rep.identity_ok ? "0" : rep.identity_residual));
            checks.push_back(check_entry("newton ideal equality", rep.ideal_equality_ok,
                                         rep.ideal_equality_ok ? "0" : "span mismatch"));
        } else if (chk_what == "two-sided") {
            bool ok = two_sided_spans_coincide(nilcone(chk_n), chk_cap);
            checks.push_back(
                check_entry("left and right spans coincide", ok, ok ? "0" : "rank mismatch"));
        } else {
            throw invalid_parameter_error("unknown check target: " + chk_what);
        }
        std::exit(emit_report(checks));
    });

    // re-check
    auto* cmd_re = app.add_subcommand("re-check", "constant-matrix reflection equation check");
    int re_n = 2;
    std::string re_matrix;
    cmd_re->add_option("--n", re_n);
    cmd_re->add_option("--matrix", re_matrix,
                       "JSON array of rows; entries are scalar expressions, symbols allowed")
        ->required();
    cmd_re->callback([&]() {
        Json rows = Json::parse(re_matrix);
        std::vector<std::vector<std::string>> text;
        for (const auto& row : rows) {
            std::vector<std::string> r;
            for (const auto& e : row) r.push_back(e.is_string() ? e.get<std::string>() : e.dump());
            text.push_back(std::move(r));
        }
        CandidateMatrix m = CandidateMatrix::parse(re_n, text);
        auto residual = re_residual(m);
        Json slots = Json::array();
        for (const auto& s : residual.slots)
            slots.push_back(Json{
                {"i", s.i}, {"s", s.s}, {"j", s.j}, {"t", s.t}, {"value", s.value.str(m.params)}});
        bool solution = residual.is_zero();
        std::cout << Json{{"solution", solution}, {"residuals", slots}}.dump() << "\n";
        std::exit(solution ? 0 : 1);
    });

    // podles
    auto* cmd_pod = app.add_subcommand("podles", "n=2 orbit quotient in sphere coordinates");
    std::string pod_t = "0", pod_d = "0";
    bool pod_q1 = false;
    cmd_pod->add_option("--t", pod_t, "quantum trace value (scalar expression)");
    cmd_pod->add_option("--d", pod_d, "Phi(tau_2) value (scalar expression)");
    cmd_pod->add_flag("--q-at-one", pod_q1, "print the relations specialized at q=1");
    cmd_pod->callback([&]() {
        SphereQuotient sq(Scalar::parse(pod_t), Scalar::parse(pod_d));
        Json rels = Json::array();
        for (const auto& r : sq.relation_strings(pod_q1)) rels.push_back(r);
        std::cout << Json{{"alpha", sq.alpha().str()},
                          {"beta", sq.beta().str()},
                          {"relations", rels}}
                         .dump()
                  << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qalg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
