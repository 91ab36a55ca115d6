#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qalg/freealg.hpp"

namespace qalg {

/// Element of the quartic extension Q(q)(i, s) with i^2 = -1 and
/// s^2 = (q + q^-1)^{-1}, in the basis {1, i, s, i*s}. Commutative field
/// arithmetic; s models the square root (q + q^-1)^{-1/2}.
class ExtScalar {
public:
    ExtScalar() = default;
    ExtScalar(long c) : a_(c) {}
    explicit ExtScalar(Scalar a, Scalar b = Scalar(0), Scalar c = Scalar(0),
                       Scalar d = Scalar(0))
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
    static ExtScalar i() { return ExtScalar(Scalar(0), Scalar(1)); }
    static ExtScalar root() { return ExtScalar(Scalar(0), Scalar(0), Scalar(1)); }

    const Scalar& part_1() const { return a_; }
    const Scalar& part_i() const { return b_; }
    const Scalar& part_s() const { return c_; }
    const Scalar& part_is() const { return d_; }

    bool is_zero() const;
    bool is_one() const { return *this == ExtScalar(1); }

    ExtScalar operator-() const { return ExtScalar(-a_, -b_, -c_, -d_); }
    ExtScalar operator+(const ExtScalar& o) const;
    ExtScalar operator-(const ExtScalar& o) const;
    ExtScalar operator*(const ExtScalar& o) const;
    ExtScalar inv() const;  // throws invalid_scalar_error on zero
    ExtScalar operator/(const ExtScalar& o) const { return *this * o.inv(); }
    ExtScalar& operator+=(const ExtScalar& o) { return *this = *this + o; }
    ExtScalar& operator-=(const ExtScalar& o) { return *this = *this - o; }
    ExtScalar& operator*=(const ExtScalar& o) { return *this = *this * o; }
    bool operator==(const ExtScalar& o) const = default;

    /// Componentwise q=1 specialization (i and s stay symbolic).
    ExtScalar at_one() const;

    std::string str() const;

private:
    Scalar a_, b_, c_, d_;
};

using SpherePoly = Poly<ExtScalar>;

/// The n=2 orbit quotient in sphere coordinates: generators x[-1], x[0],
/// x[1] with x0 < x1 < x-1 precedence, obtained by eliminating l11 through
/// Tr_q(L) = t and imposing Phi(tau_2) = d.
class SphereQuotient {
public:
    SphereQuotient(Scalar t, Scalar d);

    const Scalar& t() const { return t_; }
    const Scalar& d() const { return d_; }
    const ExtScalar& alpha() const { return alpha_; }
    const ExtScalar& beta() const { return beta_; }

    /// Images of the ambient algebra relations after elimination (three
    /// distinct relations), followed by the sphere relation from
    /// Phi(tau_2) = d.
    const std::vector<SpherePoly>& relations() const { return relations_; }
    int eliminated_relation_count() const { return eliminated_count_; }

    const RuleSystem<ExtScalar>& system() const { return sys_; }
    const CompletionReport& completion() const { return report_; }

    long dimension(int degree) const { return sys_.normal_word_count(degree); }
    std::vector<long> hilbert(int maxdeg) const;

    std::string relation_str(const SpherePoly& p, bool at_one = false) const;
    std::vector<std::string> relation_strings(bool at_one = false) const;

    static std::string gen_name(int index);  // 0 -> x[0], 1 -> x[1], 2 -> x[-1]

private:
    Scalar t_, d_;
    ExtScalar alpha_, beta_;
    std::vector<SpherePoly> relations_;
    int eliminated_count_ = 0;
    RuleSystem<ExtScalar> sys_;
    CompletionReport report_;
};

/// The displayed parameter map alpha = q^{-1}(q+q^{-1})^{-1/2} t,
/// beta = alpha^2 - (q^{-1}+q^{-3}) d.
std::pair<ExtScalar, ExtScalar> podles_parameters(const Scalar& t, const Scalar& d);

struct InvarianceReport {
    struct Entry {
        size_t first, second;  // indices into the input list
        bool equal_parameters;
        bool equal_relations;
    };
    std::vector<Entry> comparisons;
    bool ok = true;  // equal parameters always produced equal relation sets
};

/// For every pair in the list: equal (alpha, beta) must give identical
/// emitted relation sets.
InvarianceReport parameter_invariance_check(const std::vector<std::pair<Scalar, Scalar>>& pairs);

} // namespace qalg
