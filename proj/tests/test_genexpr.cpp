#include <catch2/catch_amalgamated.hpp>

#include <ghs/genexpr.hpp>

#include "oracles.hpp"

using namespace ghs;

namespace {

std::vector<Generator> power_sum_gens(const VarSetPtr& vs, const std::vector<int>& ks) {
    std::vector<Generator> gens;
    for (int k : ks) {
        Polynomial p = Polynomial::zero(vs);
        for (size_t i = 0; i < vs->size(); ++i)
            p += pow(Polynomial::variable(vs, static_cast<int>(i)), k);
        gens.push_back({"Q" + std::to_string(k), k, p});
    }
    return gens;
}

}  // namespace

TEST_CASE("weighted_monomials examples") {
    CHECK(weighted_monomials({2, 4}, 4) ==
          std::vector<std::vector<int>>{{2, 0}, {0, 1}});
    CHECK(weighted_monomials({2}, 3).empty());
    CHECK(weighted_monomials({1, 2, 3}, 3) ==
          std::vector<std::vector<int>>{{3, 0, 0}, {1, 1, 0}, {0, 0, 1}});
}

TEST_CASE("weighted_monomials is exhaustive and duplicate-free") {
    std::vector<std::vector<int>> weight_lists = {
        {2, 4}, {2, 3, 4}, {1, 2, 2, 3}, {2, 4, 6, 8}, {2, 2, 4, 4, 6}, {1, 2, 3, 4, 5, 6}};
    for (auto& w : weight_lists) {
        for (int target = 0; target <= 15; ++target) {
            auto got = weighted_monomials(w, target);
            auto expect = testing::enumerate_weighted(w, target);
            std::sort(got.begin(), got.end());
            std::sort(expect.begin(), expect.end());
            REQUIRE(got == expect);
            CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
        }
    }
}

TEST_CASE("express_in_generators on manifest squares") {
    auto ys = make_vars("y", 2);
    auto gens = power_sum_gens(ys, {2, 4});

    Polynomial R = pow(gens[0].poly, 2);  // (y1^2+y2^2)^2
    auto e = express_in_generators(R, gens);
    CHECK(e.linear_coefficient("Q4") == 0);
    CHECK(e.linear_coefficient("Q2") == 0);
    CHECK(e.terms().at({2, 0}) == 1);

    auto e2 = express_in_generators(gens[1].poly, gens);  // y1^4+y2^4
    CHECK(e2.linear_coefficient("Q4") == 1);
}

TEST_CASE("express_in_generators detects polynomials outside the subring") {
    auto ys = make_vars("y", 2);
    auto gens = power_sum_gens(ys, {2, 4});
    Polynomial R = pow(Polynomial::variable(ys, 0), 4);  // y1^4 is not symmetric
    CHECK_THROWS_AS(express_in_generators(R, gens), NotInSubring);
}

TEST_CASE("express_in_generators flags ambiguous linear parts") {
    auto xs = make_vars("x", 1);
    auto x = Polynomial::variable(xs, 0);
    std::vector<Generator> dependent = {{"A", 1, x}, {"B", 2, x * x}};
    CHECK_THROWS_AS(express_in_generators(x * x, dependent), AmbiguousExpression);
}

TEST_CASE("round-trip identity on random members of the subring") {
    testing::Rng rng(77);
    auto ys = make_vars("y", 3);
    auto gens = power_sum_gens(ys, {2, 3, 4});
    for (int trial = 0; trial < 25; ++trial) {
        // random element of the subring, homogeneous of weight 6
        Polynomial R = Polynomial::zero(ys);
        auto exps = weighted_monomials({2, 3, 4}, 6);
        for (auto& e : exps) {
            Polynomial t = Polynomial::constant(ys, rng.rational());
            for (size_t i = 0; i < e.size(); ++i)
                t *= pow(gens[i].poly, e[i]);
            R += t;
        }
        if (R.is_zero())
            continue;
        auto expr = express_in_generators(R, gens);
        CHECK(expand_expression(expr, gens) == R);
    }
}

TEST_CASE("express agrees with the evaluation-based oracle") {
    testing::Rng rng(424242);
    auto ys = make_vars("y", 3);
    // p1, p2, p3 generate all symmetric functions of three variables, so the
    // expression of p6 exists and is unique.
    auto gens = power_sum_gens(ys, {1, 2, 3});
    Polynomial p6 = Polynomial::zero(ys);
    for (int i = 0; i < 3; ++i)
        p6 += pow(Polynomial::variable(ys, i), 6);
    auto expr = express_in_generators(p6, gens);
    auto oracle = testing::express_by_evaluation(p6, gens, rng);
    REQUIRE(oracle.has_value());
    std::map<std::vector<int>, Rational> got(expr.terms().begin(), expr.terms().end());
    CHECK(got == *oracle);

    // and both routes reject non-members
    Polynomial bad = pow(Polynomial::variable(ys, 0), 6);
    CHECK(!testing::express_by_evaluation(bad, gens, rng).has_value());
    CHECK_THROWS_AS(express_in_generators(bad, gens), NotInSubring);
}

TEST_CASE("special A3 quartic: (y1+y2)^4 + (y1+y3)^4 + (y2+y3)^4") {
    // Power sums of A3 in induced coordinates: y4 = -(y1+y2+y3).
    auto ys = make_vars("y", 3);
    Polynomial s = Polynomial::zero(ys);
    for (int i = 0; i < 3; ++i)
        s += Polynomial::variable(ys, i);
    std::vector<Generator> gens;
    for (int k : {2, 3, 4}) {
        Polynomial p = pow(-s, k);
        for (int i = 0; i < 3; ++i)
            p += pow(Polynomial::variable(ys, i), k);
        gens.push_back({"Q" + std::to_string(k), k, p});
    }
    Polynomial R = Polynomial::zero(ys);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            R += pow(Polynomial::variable(ys, i) + Polynomial::variable(ys, j), 4);

    auto expr = express_in_generators(R, gens);
    // Frozen from the independent evaluation oracle: R = 3/2 Q2^2 - 2 Q4.
    testing::Rng rng(1337);
    auto oracle = testing::express_by_evaluation(R, gens, rng);
    REQUIRE(oracle.has_value());
    CHECK(oracle->at({2, 0, 0}) == Rational(3, 2));
    CHECK(oracle->at({0, 0, 1}) == Rational(-2));
    CHECK(expr.linear_coefficient("Q4") == Rational(-2));
    CHECK(expr.terms().at({2, 0, 0}) == Rational(3, 2));
    CHECK(expr.linear_coefficient("Q2") == 0);
    CHECK(expr.linear_coefficient("Q3") == 0);
}

TEST_CASE("linear_coefficient") {
    auto basis = make_basis({{"Q2", 2}, {"Q4", 4}, {"Q6", 6}});
    GeneratorExpression e(basis);
    e.add_term({2, 0, 0}, 1);  // Q2^2
    CHECK(e.linear_coefficient("Q4") == 0);

    GeneratorExpression f(basis);
    f.add_term({0, 0, 1}, 2);
    f.add_term({1, 1, 0}, 3);  // 2 Q6 + 3 Q2 Q4
    CHECK(f.linear_coefficient("Q6") == 2);
    CHECK(f.linear_coefficient("Q2") == 0);

    GeneratorExpression g(basis);
    g.add_term({3, 0, 0}, 1);  // Q2^3: no linear part at weight 6
    CHECK(g.linear_coefficient("Q2") == 0);
    CHECK(!g.has_linear_part());
    CHECK_THROWS(g.linear_coefficient("nope"));
}
