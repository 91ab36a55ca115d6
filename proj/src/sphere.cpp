#include "qalg/sphere.hpp"

#include <sstream>

#include "qalg/braided.hpp"

namespace qalg {

namespace {

Scalar sigma() {  // s^2 = (q + q^-1)^{-1}
    return (Scalar::q() + Scalar::q_power(-1)).inv();
}

} // namespace

bool ExtScalar::is_zero() const {
    return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
}

ExtScalar ExtScalar::operator+(const ExtScalar& o) const {
    return ExtScalar(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_);
}

ExtScalar ExtScalar::operator-(const ExtScalar& o) const {
    return ExtScalar(a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_);
}

ExtScalar ExtScalar::operator*(const ExtScalar& o) const {
    Scalar s2 = sigma();
    return ExtScalar(a_ * o.a_ - b_ * o.b_ + s2 * (c_ * o.c_ - d_ * o.d_),
                     a_ * o.b_ + b_ * o.a_ + s2 * (c_ * o.d_ + d_ * o.c_),
                     a_ * o.c_ + c_ * o.a_ - (b_ * o.d_ + d_ * o.b_),
                     a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_);
}

ExtScalar ExtScalar::inv() const {
    if (is_zero()) throw invalid_scalar_error("inverse of zero");
    // conjugate over i, then over s
    ExtScalar ci(a_, -b_, c_, -d_);
    ExtScalar zci = *this * ci;  // = A + B s with A, B in Q(q)
    Scalar A = zci.part_1(), B = zci.part_s();
    Scalar norm = A * A - sigma() * B * B;
    ExtScalar cs(A, Scalar(0), -B, Scalar(0));
    return ci * cs * ExtScalar(norm.inv());
}

ExtScalar ExtScalar::at_one() const {
    return ExtScalar(Scalar(a_.at_one()), Scalar(b_.at_one()), Scalar(c_.at_one()),
                     Scalar(d_.at_one()));
}

std::string ExtScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Scalar& v, const char* unit) {
        if (v.is_zero()) return;
        std::string cs = v.str();
        bool neg = cs[0] == '-';
        std::string body = neg ? cs.substr(1) : cs;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        bool unit_str = *unit != '\0';
        if (!unit_str) {
            out << body;
            return;
        }
        if (body == "1") {
            out << unit;
            return;
        }
        bool simple = body.find_first_of("+-*/^ ") == std::string::npos;
        out << (simple ? body : "(" + body + ")") << "*" << unit;
    };
    emit(a_, "");
    emit(b_, "i");
    emit(c_, "s");
    emit(d_, "i*s");
    return out.str();
}

std::pair<ExtScalar, ExtScalar> podles_parameters(const Scalar& t, const Scalar& d) {
    ExtScalar alpha = ExtScalar(Scalar::q_power(-1) * t) * ExtScalar::root();
    ExtScalar beta =
        alpha * alpha - ExtScalar((Scalar::q_power(-1) + Scalar::q_power(-3)) * d);
    return {alpha, beta};
}

namespace {

constexpr int kX0 = 0, kX1 = 1, kXm1 = 2;

// substitution l^i_j -> sphere polynomial after eliminating l11
std::vector<std::vector<SpherePoly>> substitution(const Scalar& t) {
    Scalar q = Scalar::q();
    Scalar c0 = q * t / (q * q + Scalar(1));  // l22 = c0 - q s x0
    ExtScalar ii = ExtScalar::i();
    ExtScalar root = ExtScalar::root();

    SpherePoly l22;
    l22 += SpherePoly(ExtScalar(c0));
    l22 += SpherePoly::gen(kX0, -(ExtScalar(q) * root));
    // l11 = q^{-1} t - q^{-2} l22
    SpherePoly l11;
    l11 += SpherePoly(ExtScalar(Scalar::q_power(-1) * t - Scalar::q_power(-2) * c0));
    l11 += SpherePoly::gen(kX0, ExtScalar(Scalar::q_power(-1)) * root);
    SpherePoly l12 = SpherePoly::gen(kX1, -ii);
    SpherePoly l21 = SpherePoly::gen(kXm1, -ii);

    std::vector<std::vector<SpherePoly>> sub(2, std::vector<SpherePoly>(2));
    sub[0][0] = l11;
    sub[0][1] = l12;
    sub[1][0] = l21;
    sub[1][1] = l22;
    return sub;
}

SpherePoly substitute(const NcPoly& p, const AlgebraPresentation& rea,
                      const std::vector<std::vector<SpherePoly>>& sub) {
    SpherePoly out;
    for (const auto& [w, c] : p.terms()) {
        SpherePoly term{ExtScalar(c)};
        for (unsigned char g : w) {
            const auto& id = rea.gen(g);
            term = term * sub[id.row - 1][id.col - 1];
        }
        out += term;
    }
    return out;
}

} // namespace

SphereQuotient::SphereQuotient(Scalar t, Scalar d) : t_(std::move(t)), d_(std::move(d)), sys_(3) {
    auto [alpha, beta] = podles_parameters(t_, d_);
    alpha_ = alpha;
    beta_ = beta;

    auto rea = rea_presentation(2);
    auto sub = substitution(t_);

    // images of the six ambient relations, deduplicated by inter-reduction
    RuleSystem<ExtScalar> images(3);
    std::vector<Poly<ExtScalar>> rels;
    for (const auto& rule : rea->system().rules()) {
        NcPoly rel = NcPoly::word(rule.lhs) - rule.rhs;
        SpherePoly img = substitute(rel, *rea, sub);
        if (!img.is_zero()) rels.push_back(std::move(img));
    }
    images.add_relations(rels);
    eliminated_count_ = static_cast<int>(images.rule_count());
    for (const auto& rule : images.rules())
        relations_.push_back(SpherePoly::word(rule.lhs) - rule.rhs);

    // sphere relation: Phi(tau_2) = d
    NcPoly pt2 = phi_tau2();
    SpherePoly sphere_rel = substitute(pt2, *rea, sub) - SpherePoly(ExtScalar(d_));
    relations_.push_back(sphere_rel);

    std::vector<Poly<ExtScalar>> all = relations_;
    sys_.add_relations(all);
    report_ = sys_.complete(4);
}

std::vector<long> SphereQuotient::hilbert(int maxdeg) const {
    std::vector<long> dims;
    auto words = sys_.normal_words(maxdeg);
    for (const auto& level : words) dims.push_back(static_cast<long>(level.size()));
    return dims;
}

std::string SphereQuotient::gen_name(int index) {
    switch (index) {
        case kX0: return "x[0]";
        case kX1: return "x[1]";
        case kXm1: return "x[-1]";
    }
    throw invalid_parameter_error("sphere generator index out of range");
}

std::string SphereQuotient::relation_str(const SpherePoly& p, bool at_one) const {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto* term : print_order(p)) {
        ExtScalar c = at_one ? term->second.at_one() : term->second;
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        if (!c.is_one()) out << "(" << c.str() << ")";
        if (term->first.empty()) {
            if (c.is_one()) out << "1";
            continue;
        }
        if (!c.is_one()) out << "*";
        for (size_t k = 0; k < term->first.size(); ++k) {
            if (k) out << "*";
            out << gen_name(term->first[k]);
        }
    }
    if (first) return "0";
    return out.str();
}

std::vector<std::string> SphereQuotient::relation_strings(bool at_one) const {
    std::vector<std::string> out;
    for (const auto& r : relations_) out.push_back(relation_str(r, at_one));
    return out;
}

InvarianceReport parameter_invariance_check(
    const std::vector<std::pair<Scalar, Scalar>>& pairs) {
    if (pairs.size() < 2)
        throw invalid_parameter_error("parameter_invariance_check needs at least two pairs");
    InvarianceReport rep;
    std::vector<SphereQuotient> quotients;
    quotients.reserve(pairs.size());
    for (const auto& [t, d] : pairs) quotients.emplace_back(t, d);
    for (size_t a = 0; a < quotients.size(); ++a)
        for (size_t b = a + 1; b < quotients.size(); ++b) {
            bool same_params = quotients[a].alpha() == quotients[b].alpha() &&
                               quotients[a].beta() == quotients[b].beta();
            bool same_rels =
                quotients[a].relation_strings() == quotients[b].relation_strings();
            rep.comparisons.push_back({a, b, same_params, same_rels});
            if (same_params && !same_rels) rep.ok = false;
        }
    return rep;
}

} // namespace qalg
