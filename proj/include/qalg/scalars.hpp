#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "qalg/errors.hpp"

namespace qalg {

using Rat = mpq_class;

/// Laurent polynomial in q with exact rational coefficients.
/// Stored densely: coef_[k] is the coefficient of q^(min_exp_+k).
/// Canonical: empty when zero, otherwise first and last stored
/// coefficients are nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) coef_ = {Rat(c)}; }
    LaurentPoly(const Rat& c) { if (sgn(c) != 0) coef_ = {c}; }

    static LaurentPoly q_power(int e, Rat c = Rat(1));

    bool is_zero() const { return coef_.empty(); }
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero
    Rat coeff(int e) const;
    const Rat& lead_coeff() const;  // coefficient of q^max_exp

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const = default;

    /// Value at q=1 (sum of coefficients).
    Rat eval_one() const;

    /// Shift all exponents by k (multiply by q^k).
    LaurentPoly shifted(int k) const;

    /// Number of stored terms.
    int term_count() const;

private:
    int min_exp_ = 0;
    std::vector<Rat> coef_;
    void trim();
    friend LaurentPoly poly_mod(LaurentPoly, const LaurentPoly&);
    friend LaurentPoly poly_divexact(const LaurentPoly&, const LaurentPoly&);
};

/// gcd of two ordinary polynomials in q (min_exp >= 0), monic result;
/// zero inputs handled (gcd(p, 0) = monic p).
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

/// Element of the rational function field Q(q), canonically reduced.
/// num is a Laurent polynomial; den is an ordinary polynomial with
/// nonzero constant term, monic, coprime to num. Equal values have
/// identical representations.
class Scalar {
public:
    Scalar() = default;
    Scalar(long c) : num_(c) {}
    Scalar(const Rat& c) : num_(c) {}
    Scalar(LaurentPoly n) : num_(std::move(n)) {}
    Scalar(const LaurentPoly& n, const LaurentPoly& d) { normalize(n, d); }

    static Scalar q_power(int e) { return Scalar(LaurentPoly::q_power(e)); }
    static Scalar q() { return q_power(1); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == LaurentPoly(1) && den_ == LaurentPoly(1); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws invalid_scalar_error on o == 0
    Scalar inv() const { return Scalar(1) / *this; }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const = default;

    /// True when the value has no pole at q=1.
    bool regular_at_one() const;
    /// Value at q=1; throws not_in_k_error on a pole.
    Rat at_one() const;

    std::string str() const;
    static Scalar parse(std::string_view text);

private:
    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly(1);
    void normalize(const LaurentPoly& n, const LaurentPoly& d);
};

inline Scalar operator*(long c, const Scalar& s) { return Scalar(c) * s; }

} // namespace qalg
