#include <doctest.h>

#include <random>

#include "qalg/recheck.hpp"

using namespace qalg;

namespace {

CandidateMatrix constant_matrix(int n, const std::vector<std::vector<Scalar>>& v) {
    CandidateMatrix m;
    m.n = n;
    m.entries.assign(n, std::vector<ParamPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.entries[i][j] = ParamPoly(v[i][j]);
    return m;
}

CandidateMatrix random_matrix(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<std::vector<Scalar>> v(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v[i][j] = Scalar(coef(rng));
    return constant_matrix(n, v);
}

} // namespace

TEST_CASE("the identity is a reflection equation solution") {
    for (int n : {2, 3}) {
        std::vector<std::vector<Scalar>> id(n, std::vector<Scalar>(n, Scalar(0)));
        for (int i = 0; i < n; ++i) id[i][i] = Scalar(1);
        auto chk = is_re_solution(constant_matrix(n, id));
        CHECK(chk.solution);
    }
}

TEST_CASE("the 2x2 nilpotent Jordan block solves the reflection equation") {
    // all six defining relations vanish at J2, so J2 is a character; the
    // degenerate orbit it represents is outside the scope of the
    // non-embeddedness obstruction, which starts at block size three
    auto chk = is_re_solution(CandidateMatrix::parse(2, {{"0", "1"}, {"0", "0"}}));
    CHECK(chk.solution);
    CHECK(chk.residual.is_zero());
}

TEST_CASE("the 3x3 nilpotent Jordan block is not a solution") {
    auto chk = is_re_solution(
        CandidateMatrix::parse(3, {{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}}));
    CHECK(!chk.solution);
    CHECK(!chk.residual.is_zero());
}

TEST_CASE("obstructed Jordan types in n=3 are not solutions") {
    // block size two with n = 3 (condition (ii) of the obstruction)
    auto chk = is_re_solution(
        CandidateMatrix::parse(3, {{"0", "1", "0"}, {"0", "0", "0"}, {"0", "0", "4"}}));
    CHECK(!chk.solution);
    // three distinct nonzero eigenvalues (condition (iii))
    auto chk3 = is_re_solution(
        CandidateMatrix::parse(3, {{"1", "0", "0"}, {"0", "2", "0"}, {"0", "0", "3"}}));
    CHECK(!chk3.solution);
}

TEST_CASE("scaling invariance on randomized samples") {
    std::mt19937 rng(424242);
    std::vector<Scalar> factors = {Scalar(2), Scalar(-3), Scalar::q(),
                                   Scalar::q() + Scalar(1)};
    for (int trial = 0; trial < 12; ++trial) {
        int n = trial % 2 ? 2 : 3;
        CandidateMatrix b = random_matrix(n, rng);
        bool base = is_re_solution(b).solution;
        for (const Scalar& c : factors) {
            CandidateMatrix scaled = b;
            for (auto& row : scaled.entries)
                for (auto& e : row) e *= ParamPoly(c);
            CHECK(is_re_solution(scaled).solution == base);
        }
    }
}

TEST_CASE("at q=1 every matrix satisfies the specialized equation") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        int n = trial % 2 ? 2 : 3;
        CandidateMatrix b = random_matrix(n, rng);
        auto residual = re_residual(b);
        for (const auto& slot : residual.slots) {
            // residual polynomials vanish identically at q=1
            for (const auto& [e, c] : slot.value.terms()) CHECK(c.at_one() == 0);
        }
    }
}

TEST_CASE("parametric scan of the diagonal family at n=2") {
    CandidateMatrix fam = CandidateMatrix::parse(2, {{"a", "0"}, {"0", "b"}});
    REQUIRE(fam.params == std::vector<std::string>{"a", "b"});
    auto slots = scan_family(fam);
    // exactly two residual slots, and the constraint is (q - q^-1) b (a - b)
    REQUIRE(slots.size() == 2);
    Scalar mu = Scalar::q() - Scalar::q_power(-1);
    ParamPoly a = ParamPoly::variable(0), b = ParamPoly::variable(1);
    ParamPoly expect = (a * b - b * b) * ParamPoly(mu);
    bool found_pos = false, found_neg = false;
    for (const auto& slot : slots) {
        if (slot.value == expect) found_pos = true;
        if (slot.value == -expect) found_neg = true;
    }
    CHECK(found_pos);
    CHECK(found_neg);
}

TEST_CASE("scalar multiples of the identity scan to zero") {
    CandidateMatrix fam = CandidateMatrix::parse(2, {{"c", "0"}, {"0", "c"}});
    CHECK(scan_family(fam).empty());
}

TEST_CASE("parameter-free entries are required by is_re_solution") {
    CandidateMatrix fam = CandidateMatrix::parse(2, {{"a", "0"}, {"0", "1"}});
    CHECK_THROWS_AS(is_re_solution(fam), invalid_parameter_error);
}

TEST_CASE("matrix entry parsing") {
    CandidateMatrix m =
        CandidateMatrix::parse(2, {{"q^2-1", "a*b"}, {"(q+1)*a^2", "1/2"}});
    CHECK(m.params == std::vector<std::string>{"a", "b"});
    CHECK(m.entries[0][0] == ParamPoly(Scalar::q() * Scalar::q() - Scalar(1)));
    CHECK_THROWS_AS(CandidateMatrix::parse(2, {{"1/a", "0"}, {"0", "1"}}),
                    invalid_parameter_error);
    CHECK_THROWS_AS(CandidateMatrix::parse(2, {{"1", "2"}}), invalid_parameter_error);
}
