#include <doctest.h>

#include "qalg/rmatrix.hpp"

using namespace qalg;

namespace {

// the four-case formula, written out independently of build_r
Scalar r_formula(int n, int i, int s, int j, int t) {
    if (i == j && s == t && i == s) return Scalar::q();
    if (i == j && s == t && i != s) return Scalar(1);
    if (i > j && i == t && j == s) return Scalar::q() - Scalar::q_power(-1);
    return Scalar(0);
}

} // namespace

TEST_CASE("build_r matches the defining case analysis entry for entry") {
    for (int n : {1, 2, 3}) {
        TensorOperator r = build_r(n);
        for (int i = 1; i <= n; ++i)
            for (int s = 1; s <= n; ++s)
                for (int j = 1; j <= n; ++j)
                    for (int t = 1; t <= n; ++t)
                        CHECK(r.entry(i, s, j, t) == r_formula(n, i, s, j, t));
    }
}

TEST_CASE("build_r entry counts at n=3") {
    TensorOperator r = build_r(3);
    int q_entries = 0, one_entries = 0, mu_entries = 0;
    Scalar mu = Scalar::q() - Scalar::q_power(-1);
    for (const auto& [rc, v] : r.mat.entries()) {
        if (v == Scalar::q()) ++q_entries;
        else if (v == Scalar(1)) ++one_entries;
        else if (v == mu) ++mu_entries;
        else CHECK(false);
    }
    CHECK(q_entries == 3);
    CHECK(one_entries == 6);
    CHECK(mu_entries == 3);
}

TEST_CASE("r_hat is the flip composed with r") {
    for (int n : {1, 2, 3}) {
        TensorOperator r = build_r(n);
        TensorOperator rh = build_r_hat(n);
        for (int i = 1; i <= n; ++i)
            for (int s = 1; s <= n; ++s)
                for (int j = 1; j <= n; ++j)
                    for (int t = 1; t <= n; ++t)
                        CHECK(rh.entry(i, s, j, t) == r.entry(s, i, j, t));
    }
}

TEST_CASE("r_hat action on basis vectors at n=2") {
    TensorOperator rh = build_r_hat(2);
    // r_hat(e1 (x) e2) = e2 (x) e1 + (q - q^-1) e1 (x) e2
    CHECK(rh.entry(2, 1, 1, 2) == Scalar(1));
    CHECK(rh.entry(1, 2, 1, 2) == Scalar::q() - Scalar::q_power(-1));
    CHECK(rh.entry(2, 2, 1, 2).is_zero());
    // r_hat(e1 (x) e1) = q e1 (x) e1
    CHECK(rh.entry(1, 1, 1, 1) == Scalar::q());
    // n=1: flip is the identity
    TensorOperator rh1 = build_r_hat(1);
    CHECK(rh1.entry(1, 1, 1, 1) == Scalar::q());
}

TEST_CASE("hecke relation holds exactly") {
    for (int n : {1, 2, 3}) {
        auto chk = check_hecke(n);
        CHECK(chk.ok);
        CHECK(chk.residual.is_zero());
    }
}

TEST_CASE("braid relation holds exactly") {
    for (int n : {1, 2, 3}) {
        auto chk = check_braid(n);
        CHECK(chk.ok);
        CHECK(chk.residual.is_zero());
    }
}

TEST_CASE("weight preservation: nonzero entries pair equal index multisets") {
    for (int n : {2, 3}) {
        TensorOperator r = build_r(n);
        for (const auto& [rc, v] : r.mat.entries()) {
            int i = rc.first / n + 1, s = rc.first % n + 1;
            int j = rc.second / n + 1, t = rc.second % n + 1;
            CHECK(std::min(i, s) == std::min(j, t));
            CHECK(std::max(i, s) == std::max(j, t));
        }
    }
}

TEST_CASE("at q=1 the r matrix specializes to the identity and r_hat to the flip") {
    for (int n : {2, 3}) {
        TensorOperator r = build_r(n);
        for (int a = 0; a < n * n; ++a)
            for (int b = 0; b < n * n; ++b) {
                Rat v = r.mat.at(a, b).at_one();
                CHECK(v == (a == b ? 1 : 0));
            }
        TensorOperator rh = build_r_hat(n);
        for (int i = 1; i <= n; ++i)
            for (int s = 1; s <= n; ++s)
                for (int j = 1; j <= n; ++j)
                    for (int t = 1; t <= n; ++t) {
                        Rat v = rh.entry(i, s, j, t).at_one();
                        CHECK(v == ((i == t && s == j) ? 1 : 0));
                    }
    }
}

TEST_CASE("invalid size is rejected") {
    CHECK_THROWS_AS(build_r(0), invalid_parameter_error);
}
