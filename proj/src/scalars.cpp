#include "qalg/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qalg {

void LaurentPoly::trim() {
    size_t lo = 0;
    while (lo < coef_.size() && sgn(coef_[lo]) == 0) ++lo;
    size_t hi = coef_.size();
    while (hi > lo && sgn(coef_[hi - 1]) == 0) --hi;
    if (lo == hi) {
        coef_.clear();
        min_exp_ = 0;
        return;
    }
    if (lo > 0) coef_.erase(coef_.begin(), coef_.begin() + lo);
    coef_.resize(hi - lo);
    min_exp_ += static_cast<int>(lo);
}

LaurentPoly LaurentPoly::q_power(int e, Rat c) {
    LaurentPoly p;
    if (sgn(c) != 0) {
        p.min_exp_ = e;
        p.coef_ = {std::move(c)};
    }
    return p;
}

int LaurentPoly::min_exp() const { return min_exp_; }
int LaurentPoly::max_exp() const { return min_exp_ + static_cast<int>(coef_.size()) - 1; }
int LaurentPoly::term_count() const {
    int k = 0;
    for (const auto& c : coef_)
        if (sgn(c) != 0) ++k;
    return k;
}

Rat LaurentPoly::coeff(int e) const {
    if (coef_.empty() || e < min_exp_ || e > max_exp()) return Rat(0);
    return coef_[e - min_exp_];
}

const Rat& LaurentPoly::lead_coeff() const { return coef_.back(); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int lo = std::min(min_exp_, o.min_exp_);
    int hi = std::max(max_exp(), o.max_exp());
    LaurentPoly r;
    r.min_exp_ = lo;
    r.coef_.assign(hi - lo + 1, Rat(0));
    for (size_t k = 0; k < coef_.size(); ++k) r.coef_[min_exp_ - lo + k] += coef_[k];
    for (size_t k = 0; k < o.coef_.size(); ++k) r.coef_[o.min_exp_ - lo + k] += o.coef_[k];
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    LaurentPoly r;
    r.min_exp_ = min_exp_ + o.min_exp_;
    r.coef_.assign(coef_.size() + o.coef_.size() - 1, Rat(0));
    for (size_t i = 0; i < coef_.size(); ++i)
        for (size_t j = 0; j < o.coef_.size(); ++j)
            r.coef_[i + j] += coef_[i] * o.coef_[j];
    r.trim();
    return r;
}

Rat LaurentPoly::eval_one() const {
    Rat s(0);
    for (const auto& c : coef_) s += c;
    return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.coef_.empty()) r.min_exp_ += k;
    return r;
}

// remainder of a by b; both ordinary polynomials, b nonzero
LaurentPoly poly_mod(LaurentPoly a, const LaurentPoly& b) {
    while (!a.is_zero() && a.max_exp() >= b.max_exp()) {
        Rat f = a.lead_coeff() / b.lead_coeff();
        a = a - (b * LaurentPoly::q_power(a.max_exp() - b.max_exp(), f));
    }
    return a;
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        LaurentPoly r = poly_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // monic
    return a * LaurentPoly(Rat(1) / a.lead_coeff());
}

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly rem = a;
    LaurentPoly quot;
    while (!rem.is_zero() && rem.max_exp() >= b.max_exp()) {
        Rat f = rem.lead_coeff() / b.lead_coeff();
        LaurentPoly t = LaurentPoly::q_power(rem.max_exp() - b.max_exp(), f);
        quot = quot + t;
        rem = rem - b * t;
    }
    if (!rem.is_zero()) throw invalid_scalar_error("inexact polynomial division");
    return quot;
}

void Scalar::normalize(const LaurentPoly& n, const LaurentPoly& d) {
    if (d.is_zero()) throw invalid_scalar_error("zero denominator");
    if (n.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(1);
        return;
    }
    // split off q powers: n = q^a P, d = q^b Q with P, Q ordinary, q-coprime
    int a = n.min_exp(), b = d.min_exp();
    LaurentPoly p = n.shifted(-a), q = d.shifted(-b);
    LaurentPoly g = poly_gcd(p, q);
    if (g.max_exp() > 0) {
        p = poly_divexact(p, g);
        q = poly_divexact(q, g);
    }
    Rat lc = q.lead_coeff();
    num_ = p.shifted(a - b) * LaurentPoly(Rat(1) / lc);
    den_ = q * LaurentPoly(Rat(1) / lc);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw invalid_scalar_error("division by zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

bool Scalar::regular_at_one() const { return sgn(den_.eval_one()) != 0; }

Rat Scalar::at_one() const {
    Rat d = den_.eval_one();
    if (sgn(d) == 0) throw not_in_k_error("pole at q=1: " + str());
    return num_.eval_one() / d;
}

// ---------- printing ----------

namespace {

std::string rat_str(const Rat& r) {
    return r.get_str();
}

// ordinary integer-content-cleared polynomial rendering, descending exponents
std::string poly_str(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = p.max_exp(); e >= p.min_exp(); --e) {
        Rat c = p.coeff(e);
        if (sgn(c) == 0) continue;
        if (first) {
            if (sgn(c) < 0) out << "-";
        } else {
            out << (sgn(c) < 0 ? "-" : "+");
        }
        first = false;
        Rat a = abs(c);
        bool unit_coeff = (a == 1) && e != 0;
        if (!unit_coeff) out << rat_str(a);
        if (e != 0) {
            if (!unit_coeff) out << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

bool needs_parens(const std::string& s) {
    return s.find('+') != std::string::npos || s.find('-', 1) != std::string::npos ||
           s[0] == '-';
}

} // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    // single Laurent term over a trivial denominator: signed-exponent form
    if (den_ == LaurentPoly(1) && num_.term_count() == 1) {
        int e = num_.min_exp();
        Rat c = num_.coeff(e);
        std::ostringstream out;
        if (e == 0) return rat_str(c);
        if (c == -1) out << "-";
        else if (c != 1) out << rat_str(c) << "*";
        out << "q";
        if (e != 1) out << "^" << e;
        return out.str();
    }
    // clear negative exponents into the denominator
    int m = std::min(num_.min_exp(), 0);
    LaurentPoly pn = num_.shifted(-m);
    LaurentPoly pd = den_.shifted(-m);
    std::string sn = poly_str(pn);
    if (pd == LaurentPoly(1)) return sn;
    std::string sd = poly_str(pd);
    std::string lhs = needs_parens(sn) ? "(" + sn + ")" : sn;
    std::string rhs = needs_parens(sd) ? "(" + sd + ")" : sd;
    return lhs + "/" + rhs;
}

// ---------- parsing ----------

namespace {

struct ScalarParser {
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
        throw invalid_parameter_error("scalar parse error at position " +
                                      std::to_string(pos) + ": " + why);
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        while (true) {
            if (eat('+')) v += parse_term();
            else if (eat('-')) v -= parse_term();
            else return v;
        }
    }

    Scalar parse_term() {
        Scalar v = parse_factor();
        while (true) {
            if (eat('*')) v *= parse_factor();
            else if (eat('/')) v = v / parse_factor();
            else return v;
        }
    }

    Scalar parse_factor() {
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        Scalar base = parse_atom();
        if (eat('^')) {
            long e = parse_int();
            Scalar r(1);
            Scalar b = e < 0 ? base.inv() : base;
            for (long k = 0; k < std::abs(e); ++k) r *= b;
            return r;
        }
        return base;
    }

    Scalar parse_atom() {
        skip();
        if (eat('(')) {
            Scalar v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (peek() == 'q') {
            ++pos;
            return Scalar::q();
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            mpz_class z(std::string(s.substr(start, pos - start)), 10);
            return Scalar(Rat(z));
        }
        fail("expected scalar atom");
    }

    long parse_int() {
        skip();
        bool neg = false;
        bool paren = eat('(');
        if (eat('-')) neg = true;
        else if (eat('+')) {}
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer exponent");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        if (paren && !eat(')')) fail("expected ')'");
        return neg ? -v : v;
    }
};

} // namespace

Scalar Scalar::parse(std::string_view text) {
    ScalarParser p{text};
    Scalar v = p.parse_expr();
    p.skip();
    if (p.pos != text.size())
        throw invalid_parameter_error("trailing input in scalar: " + std::string(text));
    return v;
}

} // namespace qalg
