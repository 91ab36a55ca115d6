#include "qalg/presentation.hpp"

#include <cctype>
#include <sstream>

namespace qalg {

AlgebraPresentation::AlgebraPresentation(int n, Family fam,
                                         std::vector<GeneratorId> precedence,
                                         std::vector<NcPoly> relations, int completion_cap)
    : n_(n), fam_(fam), gens_(std::move(precedence)), sys_(static_cast<int>(gens_.size())) {
    if (n < 1) throw invalid_parameter_error("matrix size must be >= 1");
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
        const auto& g = gens_[i];
        if (g.row < 1 || g.row > n || g.col < 1 || g.col > n)
            throw invalid_parameter_error("generator index out of range");
        if (!index_.emplace(g, i).second)
            throw invalid_parameter_error("duplicate generator");
    }
    sys_.add_relations(std::move(relations));
    report_ = sys_.complete(completion_cap);
}

int AlgebraPresentation::gen_index(const GeneratorId& g) const {
    auto it = index_.find(g);
    if (it == index_.end())
        throw invalid_parameter_error("unknown generator " + std::string(1, family_char(g.fam)) +
                                      "[" + std::to_string(g.row) + "," + std::to_string(g.col) +
                                      "]");
    return it->second;
}

std::string AlgebraPresentation::gen_name(int index) const {
    const auto& g = gens_.at(index);
    std::ostringstream out;
    out << family_char(g.fam) << "[" << g.row << "," << g.col << "]";
    return out.str();
}

NcPoly AlgebraPresentation::normal_form(const NcPoly& p) const {
    for (const auto& [w, c] : p.terms())
        for (unsigned char g : w)
            if (g >= gens_.size()) throw invalid_parameter_error("word uses foreign generator");
    return sys_.normal_form(p);
}

long AlgebraPresentation::irreducible_word_count(int d) const {
    return sys_.normal_word_count(d);
}

std::vector<int> AlgebraPresentation::weight_of(const Word& w) const {
    std::vector<int> wt(n_, 0);
    for (unsigned char g : w) {
        const auto& id = gens_.at(g);
        wt[id.row - 1] += 1;
        wt[id.col - 1] -= 1;
    }
    return wt;
}

std::shared_ptr<const AlgebraPresentation> AlgebraPresentation::specialized_at_one() const {
    std::vector<NcPoly> rels;
    for (const auto& r : sys_.rules()) {
        NcPoly rel = NcPoly::word(r.lhs);
        for (const auto& [w, c] : r.rhs.terms()) rel.add(w, Scalar(-c.at_one()));
        rels.push_back(std::move(rel));
    }
    return std::make_shared<AlgebraPresentation>(n_, fam_, gens_, std::move(rels));
}

TensorPoly<Scalar> TensorAlgebra::reduce(const TensorPoly<Scalar>& t) const {
    TensorPoly<Scalar> out(arity());
    for (const auto& [key, c] : t.terms()) {
        // reduce each leg, then distribute the product of the leg polynomials
        std::vector<NcPoly> parts;
        parts.reserve(key.size());
        bool dead = false;
        for (int i = 0; i < arity() && !dead; ++i) {
            NcPoly nf = legs_[i]->normal_form(NcPoly::word(key[i]));
            dead = nf.is_zero();
            parts.push_back(std::move(nf));
        }
        if (dead) continue;
        std::vector<std::pair<std::vector<Word>, Scalar>> partial = {{{}, c}};
        for (const auto& part : parts) {
            std::vector<std::pair<std::vector<Word>, Scalar>> next;
            for (const auto& [words, k] : partial)
                for (const auto& [w, pc] : part.terms()) {
                    auto ws = words;
                    ws.push_back(w);
                    Scalar v = k;
                    v *= pc;
                    next.emplace_back(std::move(ws), std::move(v));
                }
            partial = std::move(next);
        }
        for (auto& [words, k] : partial) out.add(words, k);
    }
    return out;
}

TensorPoly<Scalar> TensorAlgebra::multiply(const TensorPoly<Scalar>& a,
                                           const TensorPoly<Scalar>& b) const {
    if (a.arity() != arity() || b.arity() != arity())
        throw invalid_parameter_error("tensor arity mismatch");
    TensorPoly<Scalar> prod(arity());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            std::vector<Word> key(arity());
            for (int i = 0; i < arity(); ++i) key[i] = ka[i] + kb[i];
            Scalar c = ca;
            c *= cb;
            prod.add(key, c);
        }
    return reduce(prod);
}

TensorPoly<Scalar> TensorAlgebra::embed(const NcPoly& p, int leg) const {
    TensorPoly<Scalar> out(arity());
    for (const auto& [w, c] : p.terms()) {
        std::vector<Word> key(arity());
        key[leg] = w;
        out.add(key, c);
    }
    return out;
}

// ---------- text format ----------

std::string word_str(const AlgebraPresentation& a, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += a.gen_name(w[i]);
    }
    return out;
}

std::string poly_str(const AlgebraPresentation& a, const NcPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto* term : print_order(p)) {
        const auto& [w, c] = *term;
        Scalar coeff = c;
        bool negated = sgn(coeff.num().lead_coeff()) < 0;
        if (negated) coeff = -coeff;
        std::string cs = coeff.str();
        if (first) {
            if (negated) out << "-";
        } else {
            out << (negated ? " - " : " + ");
        }
        first = false;
        bool unit = coeff.is_one();
        bool simple = cs.find_first_of("+-*/^ ") == std::string::npos;
        if (w.empty()) {
            out << (unit ? "1" : (simple ? cs : "(" + cs + ")"));
            continue;
        }
        if (!unit) out << (simple ? cs : "(" + cs + ")") << "*";
        out << word_str(a, w);
    }
    return out.str();
}

std::string tensor_str(const TensorAlgebra& t, const TensorPoly<Scalar>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : p.terms()) {
        if (!first) out << " + ";
        first = false;
        if (!c.is_one()) out << "(" << c.str() << ")*";
        for (int i = 0; i < t.arity(); ++i) {
            if (i) out << " (x) ";
            out << word_str(*t.leg(i), key[i]);
        }
    }
    return out.str();
}

namespace {

struct PolyParser {
    const AlgebraPresentation& alg;
    std::string_view s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) {
        throw invalid_parameter_error("polynomial parse error at position " +
                                      std::to_string(pos) + ": " + why);
    }

    NcPoly parse() {
        bool lead_neg = eat('-');
        if (!lead_neg) eat('+');
        NcPoly p = parse_term(lead_neg);
        while (true) {
            if (eat('+')) p += parse_term(false);
            else if (eat('-')) p += parse_term(true);
            else break;
        }
        skip();
        if (pos != s.size()) fail("trailing input");
        return p;
    }

    NcPoly parse_term(bool negate) {
        Scalar coeff = negate ? Scalar(-1) : Scalar(1);
        Word w;
        bool saw_factor = false;
        while (true) {
            skip();
            char c = peek();
            if (c == '(') {
                // parenthesized scalar factor
                size_t start = ++pos;
                int depth = 1;
                while (pos < s.size() && depth) {
                    if (s[pos] == '(') ++depth;
                    if (s[pos] == ')') --depth;
                    ++pos;
                }
                if (depth) fail("unbalanced parens");
                coeff *= Scalar::parse(s.substr(start, pos - start - 1));
                saw_factor = true;
            } else if (c == 'x' || c == 't' || c == 'l') {
                Family f = c == 'x' ? Family::x : (c == 't' ? Family::t : Family::l);
                ++pos;
                if (!eat('[')) fail("expected '['");
                int row = parse_index();
                if (!eat(',')) fail("expected ','");
                int col = parse_index();
                if (!eat(']')) fail("expected ']'");
                w.push_back(static_cast<unsigned char>(alg.gen_index({f, row, col})));
                saw_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'q') {
                size_t start = pos;
                while (pos < s.size() &&
                       (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '^' ||
                        ((s[pos] == '-' || s[pos] == '+') && s[pos - 1] == '^')))
                    ++pos;
                coeff *= Scalar::parse(s.substr(start, pos - start));
                saw_factor = true;
            } else {
                fail("expected term factor");
            }
            if (!eat('*')) break;
        }
        if (!saw_factor) fail("empty term");
        return NcPoly::word(std::move(w), coeff);
    }

    int parse_index() {
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected index");
        int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return v;
    }
};

} // namespace

NcPoly parse_poly(const AlgebraPresentation& a, std::string_view text) {
    PolyParser p{a, text};
    return p.parse();
}

} // namespace qalg
