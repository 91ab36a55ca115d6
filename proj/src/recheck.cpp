#include "qalg/recheck.hpp"

#include <cctype>
#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

void ParamPoly::add(std::vector<int> e, const Scalar& c) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(std::move(e), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar ParamPoly::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw invalid_parameter_error("parameter polynomial is not constant");
    return terms_.begin()->second;
}

int ParamPoly::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int k : e) t += k;
        d = std::max(d, t);
    }
    return d;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add(e, c);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add(e, -c);
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(std::max(e1.size(), e2.size()), 0);
            for (size_t k = 0; k < e1.size(); ++k) e[k] += e1[k];
            for (size_t k = 0; k < e2.size(); ++k) e[k] += e2[k];
            Scalar c = c1;
            c *= c2;
            r.add(std::move(e), c);
        }
    return r;
}

std::string ParamPoly::str(const std::vector<std::string>& params) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        std::string cs = c.str();
        bool simple = cs.find_first_of("+-*/^ ") == std::string::npos;
        bool unit = c.is_one() && !e.empty();
        if (!unit) out << (simple ? cs : "(" + cs + ")");
        bool any = !unit;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (any) out << "*";
            any = true;
            out << params.at(k);
            if (e[k] > 1) out << "^" << e[k];
        }
        if (!any) out << "1";
    }
    return out.str();
}

namespace {

// scalar expression grammar extended with single-letter parameter symbols
struct ParamParser {
    std::string_view s;
    size_t pos = 0;
    std::vector<std::string>& params;

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
        throw invalid_parameter_error("matrix entry parse error: " + why);
    }

    ParamPoly parse() {
        ParamPoly v = expr();
        skip();
        if (pos != s.size()) fail("trailing input");
        return v;
    }
    ParamPoly expr() {
        ParamPoly v = term();
        while (true) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    ParamPoly term() {
        ParamPoly v = factor();
        while (true) {
            if (eat('*')) v *= factor();
            else if (eat('/')) {
                ParamPoly d = factor();
                if (!d.is_constant()) fail("division by a parameter");
                v *= ParamPoly(Scalar(1) / d.constant_value());
            } else {
                return v;
            }
        }
    }
    ParamPoly factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        ParamPoly base = atom();
        if (eat('^')) {
            bool paren = eat('(');
            bool neg = eat('-');
            skip();
            long e = 0;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("expected exponent");
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                e = e * 10 + (s[pos++] - '0');
            if (paren && !eat(')')) fail("expected ')'");
            if (neg) {
                if (!base.is_constant()) fail("negative power of a parameter");
                Scalar b = base.constant_value();
                ParamPoly r(Scalar(1));
                for (long k = 0; k < e; ++k) r *= ParamPoly(Scalar(1) / b);
                return r;
            }
            ParamPoly r(Scalar(1));
            for (long k = 0; k < e; ++k) r *= base;
            return r;
        }
        return base;
    }
    ParamPoly atom() {
        skip();
        if (eat('(')) {
            ParamPoly v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        char c = peek();
        if (c == 'q') {
            ++pos;
            return ParamPoly(Scalar::q());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            mpz_class z(std::string(s.substr(start, pos - start)), 10);
            return ParamPoly(Scalar(Rat(z)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name(1, c);
            ++pos;
            for (size_t k = 0; k < params.size(); ++k)
                if (params[k] == name) return ParamPoly::variable(static_cast<int>(k));
            params.push_back(name);
            return ParamPoly::variable(static_cast<int>(params.size()) - 1);
        }
        fail("expected entry atom");
    }
};

} // namespace

CandidateMatrix CandidateMatrix::parse(int n, const std::vector<std::vector<std::string>>& text) {
    if (n < 1 || static_cast<int>(text.size()) != n)
        throw invalid_parameter_error("matrix literal has wrong size");
    CandidateMatrix m;
    m.n = n;
    m.entries.assign(n, std::vector<ParamPoly>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(text[i].size()) != n)
            throw invalid_parameter_error("matrix literal has wrong size");
        for (int j = 0; j < n; ++j) {
            ParamParser p{text[i][j], 0, m.params};
            m.entries[i][j] = p.parse();
        }
    }
    return m;
}

ReResidual re_residual(const CandidateMatrix& B) {
    int n = B.n;
    TensorOperator rh = build_r_hat(n);
    int dim = n * n;
    SparseMat<ParamPoly> rhat(dim);
    for (const auto& [rc, v] : rh.mat.entries()) rhat.set(rc.first, rc.second, ParamPoly(v));
    SparseMat<ParamPoly> m(dim);  // I (x) B
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) m.set(i * n + s, i * n + t, B.entries[s][t]);
    SparseMat<ParamPoly> lhs = rhat * m * rhat * m;
    SparseMat<ParamPoly> rhs = m * rhat * m * rhat;
    SparseMat<ParamPoly> diff = lhs - rhs;
    ReResidual res;
    for (const auto& [rc, v] : diff.entries())
        res.slots.push_back({rc.first / n + 1, rc.first % n + 1, rc.second / n + 1,
                             rc.second % n + 1, v});
    return res;
}

ReSolutionCheck is_re_solution(const CandidateMatrix& B) {
    for (const auto& row : B.entries)
        for (const auto& e : row)
            if (!e.is_constant())
                throw invalid_parameter_error(
                    "is_re_solution requires parameter-free entries; use scan_family");
    ReResidual r = re_residual(B);
    return {r.is_zero(), std::move(r)};
}

std::vector<ReResidual::Slot> scan_family(const CandidateMatrix& B) {
    return re_residual(B).slots;
}

} // namespace qalg
