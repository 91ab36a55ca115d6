// Python bindings for the main operations. Structured values cross the
// boundary as plain dicts/lists/strings in the same formats the CLI emits.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qalg/braided.hpp"
#include "qalg/jsonio.hpp"
#include "qalg/qsl.hpp"
#include "qalg/quotients.hpp"
#include "qalg/recheck.hpp"
#include "qalg/sphere.hpp"

namespace py = pybind11;
using namespace qalg;

namespace {

PresentationPtr algebra_by_name(const std::string& name, int n) {
    if (name == "frt") return frt_presentation(n);
    if (name == "sl") return sl_presentation(n);
    if (name == "rea") return rea_presentation(n);
    throw invalid_parameter_error("unknown algebra: " + name);
}

CentralQuotient quotient_from(const std::string& name, int n, const std::string& xi_json) {
    if (name == "nilcone") return nilcone(n);
    if (name == "orbit") return orbit_quotient_n2(xi_from_json(Json::parse(xi_json)));
    throw invalid_parameter_error("unknown quotient: " + name);
}

XiSpec xi_from(const std::string& xi_json) { return xi_from_json(Json::parse(xi_json)); }

} // namespace

PYBIND11_MODULE(_qalg, m) {
    m.doc() = "exact computation in quantum matrix algebras";

    py::register_exception<not_in_k_error>(m, "NotInKError");
    py::register_exception<relation_violation_error>(m, "RelationViolationError");
    py::register_exception<invalid_scalar_error>(m, "InvalidScalarError");
    py::register_exception<invalid_parameter_error>(m, "InvalidParameterError");

    // scalars
    m.def("scalar_normalize", [](const std::string& s) { return Scalar::parse(s).str(); },
          "canonical form of a scalar expression");
    m.def("scalar_add", [](const std::string& a, const std::string& b) {
        return (Scalar::parse(a) + Scalar::parse(b)).str();
    });
    m.def("scalar_mul", [](const std::string& a, const std::string& b) {
        return (Scalar::parse(a) * Scalar::parse(b)).str();
    });
    m.def("scalar_div", [](const std::string& a, const std::string& b) {
        return (Scalar::parse(a) / Scalar::parse(b)).str();
    });
    m.def("specialize_at_one", [](const std::string& s) {
        return Scalar::parse(s).at_one().get_str();
    });

    // R-matrix
    m.def("r_matrix", [](int n, bool hat) {
        return tensor_operator_to_json(hat ? build_r_hat(n) : build_r(n)).dump();
    }, py::arg("n"), py::arg("hat") = false,
       "nonzero entries as JSON: [{i, s, j, t, value}, ...]");

    // presentations and normal forms
    m.def("relations", [](const std::string& algebra, int n) {
        return relations_to_json(*algebra_by_name(algebra, n)).dump();
    });
    m.def("normal_form", [](const std::string& algebra, int n, const std::string& poly) {
        auto a = algebra_by_name(algebra, n);
        return poly_str(*a, a->normal_form(parse_poly(*a, poly)));
    });
    m.def("irreducible_word_count", [](const std::string& algebra, int n, int d) {
        return algebra_by_name(algebra, n)->irreducible_word_count(d);
    });

    // coinvariants
    m.def("tau", [](int n, int d) {
        auto a = frt_presentation(n);
        return poly_str(*a, tau(d, *a));
    });
    m.def("trace_power", [](int n, int k) {
        auto a = rea_presentation(n);
        return poly_str(*a, trace_power(k, n));
    });
    m.def("tau_at_xi", [](int d, const std::string& xi_json) {
        return tau_at_xi(d, xi_from(xi_json)).str();
    });

    // structural checks
    m.def("check_hecke", [](int n) { return check_hecke(n).ok; });
    m.def("check_braid", [](int n) { return check_braid(n).ok; });
    m.def("check_central", [](int n, int k) {
        return check_central(trace_power(k, n), rea_presentation(n)).ok;
    });
    m.def("check_coinvariant", [](int n, int k) {
        return check_coinvariant(trace_power(k, n), n).ok;
    });
    m.def("verify_hopf", [](int n) {
        auto rep = verify_hopf(n);
        py::list out;
        for (const auto& c : rep.checks) {
            py::dict d;
            d["identity"] = c.identity;
            d["status"] = c.ok ? "pass" : "fail";
            d["residual"] = c.ok ? "0" : c.residual;
            out.append(d);
        }
        return out;
    });
    m.def("phi_tau2_identity", []() {
        auto rep = phi_tau2_identity();
        return rep.all_ok();
    });

    // quotients
    m.def("hilbert",
          [](const std::string& quotient, int n, int maxdeg, const std::string& xi_json,
             bool q_at_one) {
              CentralQuotient qt = quotient_from(quotient, n, xi_json);
              HilbertTable t = q_at_one ? classical_oracle(qt, maxdeg) : hilbert(qt, maxdeg);
              return t.dims;
          },
          py::arg("quotient"), py::arg("n"), py::arg("maxdeg"), py::arg("xi") = "",
          py::arg("q_at_one") = false);
    m.def("weight_table",
          [](const std::string& quotient, int n, int d, const std::string& xi_json,
             bool q_at_one) {
              CentralQuotient qt = quotient_from(quotient, n, xi_json);
              QuotientTables t = q_at_one ? classical_tables(qt, d) : quotient_tables(qt, d);
              py::list out;
              for (const auto& [wt, mult] : t.weights[d].mult) {
                  py::dict e;
                  e["weight"] = wt;
                  e["mult"] = mult;
                  out.append(e);
              }
              return out;
          },
          py::arg("quotient"), py::arg("n"), py::arg("d"), py::arg("xi") = "",
          py::arg("q_at_one") = false);

    // reflection equation characters
    m.def("re_check", [](int n, const std::string& matrix_json) {
        Json rows = Json::parse(matrix_json);
        std::vector<std::vector<std::string>> text;
        for (const auto& row : rows) {
            std::vector<std::string> r;
            for (const auto& e : row) r.push_back(e.is_string() ? e.get<std::string>() : e.dump());
            text.push_back(std::move(r));
        }
        CandidateMatrix cm = CandidateMatrix::parse(n, text);
        auto residual = re_residual(cm);
        py::dict out;
        out["solution"] = residual.is_zero();
        py::list slots;
        for (const auto& s : residual.slots) {
            py::dict slot;
            slot["i"] = s.i;
            slot["s"] = s.s;
            slot["j"] = s.j;
            slot["t"] = s.t;
            slot["value"] = s.value.str(cm.params);
            slots.append(slot);
        }
        out["residuals"] = slots;
        return out;
    });

    // quantum spheres
    m.def("podles", [](const std::string& t, const std::string& d) {
        SphereQuotient sq(Scalar::parse(t), Scalar::parse(d));
        py::dict out;
        out["alpha"] = sq.alpha().str();
        out["beta"] = sq.beta().str();
        out["relations"] = sq.relation_strings();
        out["hilbert"] = sq.hilbert(5);
        return out;
    });
}
