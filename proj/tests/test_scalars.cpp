#include <doctest.h>

#include <random>

#include "qalg/scalars.hpp"

using namespace qalg;

namespace {

Scalar q_pow(int e) { return Scalar::q_power(e); }

// random Laurent polynomial with small support
LaurentPoly random_laurent(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> nterms(0, 3), expo(-3, 3), coef(-4, 4);
    LaurentPoly p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t)
        p = p + LaurentPoly::q_power(expo(rng), Rat(coef(rng)));
    if (nonzero && p.is_zero()) p = LaurentPoly::q_power(expo(rng), Rat(1));
    return p;
}

Scalar random_scalar(std::mt19937& rng, bool nonzero = false) {
    Scalar s(random_laurent(rng), random_laurent(rng, true));
    if (nonzero && s.is_zero()) s = Scalar(1) + Scalar::q();
    return s;
}

} // namespace

TEST_CASE("normalization reaches canonical forms") {
    // (q^2 - 1)/(q - 1) = q + 1
    LaurentPoly q2m1 = LaurentPoly::q_power(2) - LaurentPoly(1);
    LaurentPoly qm1 = LaurentPoly::q_power(1) - LaurentPoly(1);
    CHECK(Scalar(q2m1, qm1) == Scalar::q() + Scalar(1));

    // 0/q^5 = 0
    CHECK(Scalar(LaurentPoly(), LaurentPoly::q_power(5)).is_zero());

    // q - q^-1 keeps a canonical Laurent presentation: (q^2-1)/q
    Scalar s = Scalar::q() - q_pow(-1);
    CHECK(s.str() == "(q^2-1)/q");

    CHECK_THROWS_AS(Scalar(LaurentPoly(1), LaurentPoly()), invalid_scalar_error);
}

TEST_CASE("normalize(a c, b c) = normalize(a, b)") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = random_laurent(rng);
        LaurentPoly b = random_laurent(rng, true);
        LaurentPoly c = random_laurent(rng, true);
        CHECK(Scalar(a * c, b * c) == Scalar(a, b));
    }
}

TEST_CASE("field operations") {
    // add(q, q^-1) = (q^2+1)/q
    Scalar sum = Scalar::q() + q_pow(-1);
    CHECK(sum == Scalar(LaurentPoly::q_power(2) + LaurentPoly(1), LaurentPoly::q_power(1)));
    CHECK(sum.str() == "(q^2+1)/q");

    // (q + q^-1)^{-1} (q + q^-1) = 1
    CHECK((sum.inv() * sum).is_one());

    Scalar one_over_qm1 = Scalar(1) / (Scalar::q() - Scalar(1));
    CHECK(one_over_qm1.str() == "1/(q-1)");

    CHECK_THROWS_AS(Scalar(1) / Scalar(0), invalid_scalar_error);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        Scalar nz = random_scalar(rng, true);
        CHECK((nz * nz.inv()).is_one());
    }
}

TEST_CASE("specialization at q=1") {
    CHECK(q_pow(3).at_one() == 1);
    CHECK(q_pow(-5).at_one() == 1);

    LaurentPoly q2m1 = LaurentPoly::q_power(2) - LaurentPoly(1);
    LaurentPoly qm1 = LaurentPoly::q_power(1) - LaurentPoly(1);
    CHECK(Scalar(q2m1, qm1).at_one() == 2);

    Scalar pole = Scalar(1) / (Scalar::q() - Scalar(1));
    CHECK(!pole.regular_at_one());
    CHECK_THROWS_AS(pole.at_one(), not_in_k_error);

    // homomorphism property on elements regular at 1
    std::mt19937 rng(99);
    int done = 0;
    while (done < 60) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        if (!a.regular_at_one() || !b.regular_at_one()) continue;
        ++done;
        CHECK((a + b).at_one() == a.at_one() + b.at_one());
        CHECK((a * b).at_one() == a.at_one() * b.at_one());
    }
}

TEST_CASE("text format round-trips") {
    CHECK(Scalar::parse("(q^2-1)/q") == Scalar::q() - q_pow(-1));
    CHECK(Scalar::parse("q^-1") == q_pow(-1));
    CHECK(Scalar::parse("2*q^3 - 1/2") == Scalar(Rat(2)) * q_pow(3) - Scalar(Rat(1, 2)));
    CHECK(Scalar::parse("-q").str() == "-q");

    std::mt19937 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar s = random_scalar(rng);
        CHECK(Scalar::parse(s.str()) == s);
    }
}
