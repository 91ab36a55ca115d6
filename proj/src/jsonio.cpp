#include "qalg/jsonio.hpp"

namespace qalg {

Json poly_to_json(const AlgebraPresentation& a, const NcPoly& p) {
    Json terms = Json::array();
    for (const auto* term : print_order(p)) {
        Json word = Json::array();
        for (unsigned char g : term->first) {
            const auto& id = a.gen(g);
            word.push_back(Json::array({std::string(1, family_char(id.fam)), id.row, id.col}));
        }
        terms.push_back(Json{{"coeff", term->second.str()}, {"word", word}});
    }
    return terms;
}

NcPoly poly_from_json(const AlgebraPresentation& a, const Json& j) {
    NcPoly p;
    for (const auto& term : j) {
        Scalar c = Scalar::parse(term.at("coeff").get<std::string>());
        Word w;
        for (const auto& letter : term.at("word")) {
            std::string fam = letter.at(0).get<std::string>();
            Family f = fam == "x" ? Family::x : (fam == "t" ? Family::t : Family::l);
            w.push_back(static_cast<unsigned char>(
                a.gen_index({f, letter.at(1).get<int>(), letter.at(2).get<int>()})));
        }
        p.add(w, c);
    }
    return p;
}

Json xi_to_json(const XiSpec& xi) {
    Json eig = Json::array();
    for (const auto& v : xi.eigenvalues) eig.push_back(v.str());
    return Json{{"n", xi.n}, {"r", xi.r}, {"eigenvalues", eig}};
}

XiSpec xi_from_json(const Json& j) {
    XiSpec xi;
    xi.n = j.at("n").get<int>();
    xi.r = j.at("r").get<int>();
    for (const auto& v : j.at("eigenvalues")) xi.eigenvalues.push_back(Scalar::parse(v.get<std::string>()));
    xi.validate();
    return xi;
}

Json tensor_operator_to_json(const TensorOperator& op) {
    Json out = Json::array();
    for (const auto& [rc, v] : op.mat.entries()) {
        int i = rc.first / op.n + 1, s = rc.first % op.n + 1;
        int j = rc.second / op.n + 1, t = rc.second % op.n + 1;
        out.push_back(Json{{"i", i}, {"s", s}, {"j", j}, {"t", t}, {"value", v.str()}});
    }
    return out;
}

Json relations_to_json(const AlgebraPresentation& a) {
    Json out = Json::array();
    for (const auto& rule : a.system().rules()) {
        std::string lhs = word_str(a, rule.lhs);
        std::string rhs = poly_str(a, rule.rhs);
        out.push_back(Json{{"lhs", lhs}, {"rhs", rhs}, {"relation", lhs + " = " + rhs}});
    }
    return out;
}

} // namespace qalg
