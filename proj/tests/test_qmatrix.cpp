#include <doctest.h>

#include "qalg/qmatrix.hpp"

using namespace qalg;

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

NcPoly parse(const AlgebraPresentation& a, const std::string& s) { return parse_poly(a, s); }

} // namespace

TEST_CASE("frt presentation at n=2 gives the six canonical relations") {
    auto a = frt_presentation(2);
    CHECK(a->system().rule_count() == 6);
    CHECK(a->completion().added_rules == 0);
    CHECK(a->completion().overlaps_within_cap);

    // the canonical relation set, asserted through normal-form equivalence
    const char* rels[] = {
        "x[1,1]*x[1,2] - (q)*x[1,2]*x[1,1]",
        "x[1,1]*x[2,1] - (q)*x[2,1]*x[1,1]",
        "x[1,2]*x[2,2] - (q)*x[2,2]*x[1,2]",
        "x[2,1]*x[2,2] - (q)*x[2,2]*x[2,1]",
        "x[1,2]*x[2,1] - x[2,1]*x[1,2]",
        "x[1,1]*x[2,2] - x[2,2]*x[1,1] - (q-q^-1)*x[1,2]*x[2,1]",
    };
    for (const char* r : rels) CHECK(a->normal_form(parse(*a, r)).is_zero());

    // single-rewrite example
    CHECK(a->normal_form(parse(*a, "x[1,2]*x[1,1]")) ==
          parse(*a, "(q^-1)*x[1,1]*x[1,2]"));

    // every raw entrywise consequence of the matrix identity reduces to zero
    for (const auto& rel : frt_relations(2, *a)) CHECK(a->normal_form(rel).is_zero());
}

TEST_CASE("frt presentation at n=1 has no relations") {
    auto a = frt_presentation(1);
    CHECK(a->system().rule_count() == 0);
}

TEST_CASE("frt relations become commutators at q=1") {
    for (int n : {2, 3}) {
        auto a = frt_presentation(n);
        auto cl = a->specialized_at_one();
        for (const auto& rule : cl->system().rules()) {
            REQUIRE(rule.lhs.size() == 2);
            Word rev{rule.lhs[1], rule.lhs[0]};
            CHECK(rule.rhs == NcPoly::word(rev));
        }
    }
}

TEST_CASE("frt flat dimension certificate") {
    for (int n : {2, 3}) {
        auto a = frt_presentation(n);
        for (int d = 0; d <= 4; ++d)
            CHECK(a->irreducible_word_count(d) == binom(n * n + d - 1, d));
    }
    CHECK(frt_presentation(2)->irreducible_word_count(2) == 10);
}

TEST_CASE("quantum minors and determinant") {
    auto a2 = frt_presentation(2);
    CHECK(quantum_det(*a2) == parse(*a2, "x[1,1]*x[2,2] - (q)*x[1,2]*x[2,1]"));
    CHECK(quantum_minor({1}, {1}, *a2) == parse(*a2, "x[1,1]"));
    CHECK_THROWS_AS(quantum_minor({1, 2}, {1}, *a2), invalid_parameter_error);

    // coefficient of the reversal permutation at n=3 is (-q)^3
    auto a3 = frt_presentation(3);
    NcPoly det3 = quantum_det(*a3);
    Word rev;
    rev.push_back(static_cast<unsigned char>(a3->gen_index(1, 3)));
    rev.push_back(static_cast<unsigned char>(a3->gen_index(2, 2)));
    rev.push_back(static_cast<unsigned char>(a3->gen_index(3, 1)));
    bool found = false;
    for (const auto& [w, c] : det3.terms())
        if (w == rev) {
            found = true;
            CHECK(c == -(Scalar::q() * Scalar::q() * Scalar::q()));
        }
    CHECK(found);
}

TEST_CASE("tau coinvariants") {
    auto a2 = frt_presentation(2);
    CHECK(tau(1, *a2) == parse(*a2, "(q)*x[1,1] + (q^-1)*x[2,2]"));
    CHECK(tau(2, *a2) == a2->normal_form(quantum_det(*a2)));
    CHECK_THROWS_AS(tau(0, *a2), invalid_parameter_error);
    CHECK_THROWS_AS(tau(3, *a2), invalid_parameter_error);

    auto a3 = frt_presentation(3);
    NcPoly expect = quantum_minor({1, 2}, {1, 2}, *a3) * Scalar::q_power(2) +
                    quantum_minor({1, 3}, {1, 3}, *a3) +
                    quantum_minor({2, 3}, {2, 3}, *a3) * Scalar::q_power(-2);
    CHECK(tau(2, *a3) == a3->normal_form(expect));

    // weight zero
    for (int d = 1; d <= 3; ++d) {
        NcPoly td = tau(d, *a3);
        for (const auto& [w, c] : td.terms())
            CHECK(a3->weight_of(w) == std::vector<int>(3, 0));
    }
}

TEST_CASE("det_q is central, n <= 3") {
    for (int n : {1, 2, 3}) {
        auto a = frt_presentation(n);
        NcPoly det = a->normal_form(quantum_det(*a));
        for (int g = 0; g < a->gen_count(); ++g) {
            NcPoly gen = NcPoly::gen(static_cast<unsigned char>(g));
            CHECK(a->normal_form(det * gen - gen * det).is_zero());
        }
    }
}

TEST_CASE("comultiplication and counit") {
    auto a = frt_presentation(2);
    TensorAlgebra t2({a, a});

    // Delta(x12) = x11 (x) x12 + x12 (x) x22
    TensorPoly<Scalar> d = comultiply(a->gen_poly(1, 2), a);
    TensorPoly<Scalar> expect(2);
    auto wid = [&](int i, int j) {
        return Word(1, static_cast<unsigned char>(a->gen_index(i, j)));
    };
    expect.add({wid(1, 1), wid(1, 2)}, Scalar(1));
    expect.add({wid(1, 2), wid(2, 2)}, Scalar(1));
    CHECK(d == expect);

    CHECK(counit(a->gen_poly(1, 2), *a).is_zero());
    CHECK(counit(a->gen_poly(1, 1), *a).is_one());

    // det_q is group-like
    for (int n : {2, 3}) {
        auto an = frt_presentation(n);
        TensorAlgebra tn({an, an});
        NcPoly det = an->normal_form(quantum_det(*an));
        TensorPoly<Scalar> dd = comultiply(det, an);
        TensorPoly<Scalar> dxd(2);
        for (const auto& [w1, c1] : det.terms())
            for (const auto& [w2, c2] : det.terms()) {
                Scalar c = c1;
                c *= c2;
                dxd.add({w1, w2}, c);
            }
        CHECK(tn.reduce(dd - dxd).is_zero());
        CHECK(counit(det, *an).is_one());
    }
}

TEST_CASE("coassociativity and counit axioms on the bialgebra generators") {
    for (int n : {2, 3}) {
        auto a = frt_presentation(n);
        TensorAlgebra t3({a, a, a});
        for (int g = 0; g < a->gen_count(); ++g) {
            NcPoly p = NcPoly::gen(static_cast<unsigned char>(g));
            TensorPoly<Scalar> dg = comultiply(p, a);
            TensorPoly<Scalar> lhs(3), rhs(3);
            for (const auto& [key, c] : dg.terms()) {
                TensorPoly<Scalar> dfirst = comultiply(NcPoly::word(key[0]), a);
                for (const auto& [k2, c2] : dfirst.terms()) {
                    Scalar v = c;
                    v *= c2;
                    lhs.add({k2[0], k2[1], key[1]}, v);
                }
                TensorPoly<Scalar> dsecond = comultiply(NcPoly::word(key[1]), a);
                for (const auto& [k2, c2] : dsecond.terms()) {
                    Scalar v = c;
                    v *= c2;
                    rhs.add({key[0], k2[0], k2[1]}, v);
                }
            }
            CHECK(lhs == comultiply2(p, a));
            CHECK(lhs == rhs);

            // counit axioms
            NcPoly eps_l, eps_r;
            for (const auto& [key, c] : dg.terms()) {
                Scalar el = counit(NcPoly::word(key[0]), *a);
                el *= c;
                eps_l.add(key[1], el);
                Scalar er = counit(NcPoly::word(key[1]), *a);
                er *= c;
                eps_r.add(key[0], er);
            }
            CHECK(eps_l == p);
            CHECK(eps_r == p);
        }
    }
}

TEST_CASE("evaluation characters") {
    auto a = frt_presentation(2);

    // nilpotent Jordan block
    XiSpec j2{2, 2, {}};
    auto J = j2.jordan_matrix();
    CHECK(evaluate_character(quantum_det(*a), J, *a).is_zero());

    // diagonal matrices kill the off-diagonal minor term
    std::vector<std::vector<Scalar>> diag = {{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(3)}};
    CHECK(evaluate_character(quantum_det(*a), diag, *a) == Scalar(6));

    // the all-ones matrix admits no character
    std::vector<std::vector<Scalar>> ones(2, std::vector<Scalar>(2, Scalar(1)));
    CHECK_THROWS_AS(evaluate_character(quantum_det(*a), ones, *a), relation_violation_error);
}

TEST_CASE("every point of P defines a character") {
    std::vector<XiSpec> points = {
        {2, 2, {}},
        {2, 0, {Scalar(2), Scalar(3)}},
        {2, 1, {Scalar(5)}},
        {3, 3, {}},
        {3, 2, {Scalar(4)}},
        {3, 1, {Scalar(1), Scalar(-2)}},
        {3, 0, {Scalar(1), Scalar(2), Scalar(7)}},
    };
    for (const auto& xi : points) {
        auto a = frt_presentation(xi.n);
        CHECK_NOTHROW(check_character(xi.jordan_matrix(), *a));
    }
}

TEST_CASE("tau values at Jordan forms") {
    XiSpec j2{2, 2, {}};
    CHECK(tau_at_xi(1, j2).is_zero());
    CHECK(tau_at_xi(2, j2).is_zero());

    XiSpec diag{2, 0, {Scalar(2), Scalar(3)}};
    CHECK(tau_at_xi(1, diag) == Scalar(2) * Scalar::q() + Scalar(3) * Scalar::q_power(-1));
    CHECK(tau_at_xi(2, diag) == Scalar(6));

    XiSpec mixed{2, 1, {Scalar(5)}};
    CHECK(tau_at_xi(1, mixed) == Scalar(5) * Scalar::q_power(-1));
    CHECK(tau_at_xi(2, mixed).is_zero());

    // at q=1, tau_d specializes to the sum of principal d x d minors
    XiSpec d3{3, 0, {Scalar(1), Scalar(2), Scalar(7)}};
    CHECK(tau_at_xi(1, d3).at_one() == 10);   // 1 + 2 + 7
    CHECK(tau_at_xi(2, d3).at_one() == 23);   // 2 + 7 + 14
    CHECK(tau_at_xi(3, d3).at_one() == 14);   // det
}

TEST_CASE("XiSpec validation") {
    CHECK_THROWS_AS(XiSpec({2, 0, {Scalar(1), Scalar(1)}}).validate(), invalid_parameter_error);
    CHECK_THROWS_AS(XiSpec({2, 0, {Scalar(0), Scalar(1)}}).validate(), invalid_parameter_error);
    CHECK_THROWS_AS(XiSpec({2, 1, {}}).validate(), invalid_parameter_error);
}
