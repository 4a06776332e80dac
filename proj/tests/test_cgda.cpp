#include <catch2/catch_amalgamated.hpp>

#include <ghs/cgda.hpp>
#include <ghs/homotopy.hpp>

#include <fstream>
#include <sstream>

using namespace ghs;

namespace {

RankTable table(std::initializer_list<std::pair<int, int>> entries) {
    RankTable t;
    for (auto& [q, d] : entries)
        t.add(q, d);
    return t;
}

}  // namespace

TEST_CASE("flag manifolds: the differential vanishes identically") {
    SpaceDescriptor a1_flag{{Family::A, 1}, 1, 1, {}};
    FreeCGDA c = build_cartan_algebra(a1_flag);
    REQUIRE(c.odds.size() == 1);
    CHECK(!c.d[0].has_linear_part());
    CHECK(homotopy_ranks(sullivan_reduce(c)) == table({{2, 1}, {3, 1}}));

    SpaceDescriptor a2_flag{{Family::A, 2}, 1, 2, {}};
    FreeCGDA c2 = build_cartan_algebra(a2_flag);
    for (auto& d : c2.d)
        CHECK(!d.has_linear_part());
    CHECK(homotopy_ranks(sullivan_reduce(c2)) == table({{2, 2}, {3, 1}, {5, 1}}));
}

TEST_CASE("S4 = SO(5)/SO(4): Pfaffian squares away") {
    SpaceDescriptor s4{{Family::B, 2}, 1, 0, {{{Family::D, 2}, {0, 1}}}};
    FreeCGDA c = build_cartan_algebra(s4);
    REQUIRE(c.evens->symbols.size() == 2);
    CHECK(c.evens->symbols[0].weight == 2);
    CHECK(c.evens->symbols[1].weight == 2);
    REQUIRE(c.odds.size() == 2);
    CHECK(c.odds[0].weight == 2);
    CHECK(c.odds[1].weight == 4);
    CHECK(c.d[0].has_linear_part());   // d(z2) hits the quadratic generators
    CHECK(!c.d[1].has_linear_part());  // d(z4) is decomposable
    CHECK(homotopy_ranks(sullivan_reduce(c)) == table({{4, 1}, {7, 1}}));
}

TEST_CASE("spheres via the Cartan path") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> idx;
        for (int i = n - 1; i >= 0; --i)
            idx.push_back(i);
        SpaceDescriptor even_sphere{{Family::B, n}, 1, 0, {{{Family::D, n}, idx}}};
        INFO("S^" << 2 * n);
        CHECK(ranks_via_cartan(even_sphere) == table({{2 * n, 1}, {4 * n - 1, 1}}));
    }
    for (int n = 4; n <= 6; ++n) {
        std::vector<int> idx;
        for (int i = 1; i <= n - 1; ++i)
            idx.push_back(i);
        SpaceDescriptor odd_sphere{{Family::D, n}, 2, 0, {{{Family::B, n - 1}, idx}}};
        INFO("S^" << 2 * n - 1);
        CHECK(ranks_via_cartan(odd_sphere) == table({{2 * n - 1, 1}}));
    }
}

TEST_CASE("E6/F4: odd restrictions vanish, even ones are linear") {
    SpaceDescriptor d{{Family::E6, 6}, 2, 0, {{{Family::F4, 4}, {1, 2, 3, 4}}}};
    FreeCGDA c = build_cartan_algebra(d);
    REQUIRE(c.odds.size() == 6);
    // z5 and z9 have zero differential
    for (size_t i = 0; i < c.odds.size(); ++i) {
        if (c.odds[i].weight == 5 || c.odds[i].weight == 9)
            CHECK(c.d[i].is_zero());
        else
            CHECK(c.d[i].has_linear_part());
    }
    CHECK(ranks_via_cartan(d) == table({{9, 1}, {17, 1}}));
}

TEST_CASE("E6/F4 restricted invariants are algebraically independent") {
    // Chevalley: degrees 2,6,8,12 multiply to |W(F4)| = 1152, so full Jacobian
    // rank certifies that the restricted invariants generate the ring.
    Block b = exceptional_restriction({Family::E6, 6}, 2, {{Family::F4, 4}, {1, 2, 3, 4}});
    REQUIRE(b.target.gens.size() == 4);
    std::vector<Rational> pt = {Rational(1, 2), Rational(2), Rational(-3, 5), Rational(7)};
    Mat jac;
    for (auto& g : b.target.gens) {
        Vec row;
        for (int v = 0; v < 4; ++v)
            row.push_back(g.poly.partial(v).evaluate(pt));
        jac.push_back(std::move(row));
    }
    CHECK(rank(jac) == 4);
}

TEST_CASE("delta matrix shapes on the repeated D exponent") {
    // SO(16)/SO(4)xSO(12): at weight 8 the power sum is hit while the ambient
    // Pfaffian restricts to zero: rank 1 of a 2-row matrix.
    SpaceDescriptor d{{Family::D, 8}, 1, 0,
                      {{{Family::D, 2}, {0, 1}}, {{Family::D, 6}, {3, 4, 5, 6, 7, 8}}}};
    FreeCGDA c = build_cartan_algebra(d);
    Mat m8 = delta_matrix(c, 8);
    REQUIRE(m8.size() == 2);
    CHECK(rank(m8) == 1);

    // SO(16)/U(8): both weight-8 odd generators hit the single weight-8
    // generator of the isotropy, still rank 1
    SpaceDescriptor u8{{Family::D, 8}, 1, 1, {{{Family::A, 7}, {1, 2, 3, 4, 5, 6, 7}}}};
    FreeCGDA cu = build_cartan_algebra(u8);
    Mat mu = delta_matrix(cu, 8);
    REQUIRE(mu.size() == 2);
    int nonzero_rows = 0;
    for (auto& row : mu)
        for (auto& x : row)
            if (x != 0) {
                ++nonzero_rows;
                break;
            }
    CHECK(nonzero_rows == 2);  // both differentials are nonzero...
    CHECK(rank(mu) == 1);      // ...but proportional
}

TEST_CASE("differentials are weight-homogeneous in the evens") {
    SpaceDescriptor d{{Family::C, 3}, 1, 1, {{{Family::A, 2}, {1, 2}}}};
    FreeCGDA c = build_cartan_algebra(d);
    for (size_t i = 0; i < c.odds.size(); ++i) {
        for (auto& [e, coeff] : c.d[i].terms()) {
            int w = 0;
            for (size_t j = 0; j < e.size(); ++j)
                w += e[j] * c.evens->symbols[j].weight;
            CHECK(w == c.odds[i].weight);
        }
    }
}

TEST_CASE("fixture parsing round-trips and reduces") {
    std::string text =
        "# toy model\n"
        "even Q2 2\n"
        "even Q4 4\n"
        "odd z2 2\n"
        "odd z4 4\n"
        "odd z6 6\n"
        "d z2 = 3*Q2\n"
        "d z4 = 1/2*Q4 - Q2^2\n";
    std::istringstream in(text);
    FreeCGDA c = parse_cgda(in);
    REQUIRE(c.odds.size() == 3);
    CHECK(c.d[0].linear_coefficient("Q2") == 3);
    CHECK(c.d[1].linear_coefficient("Q4") == Rational(1, 2));
    CHECK(c.d[1].terms().at({2, 0}) == -1);
    CHECK(c.d[2].is_zero());
    CHECK(homotopy_ranks(sullivan_reduce(c)) == table({{11, 1}}));

    std::ostringstream out;
    write_cgda(out, c);
    std::istringstream in2(out.str());
    FreeCGDA c2 = parse_cgda(in2);
    CHECK(c2.evens->symbols == c.evens->symbols);
    CHECK(c2.odds == c.odds);
    for (size_t i = 0; i < c.d.size(); ++i)
        CHECK(c2.d[i].terms() == c.d[i].terms());
}

TEST_CASE("fixture parse errors") {
    std::istringstream bad1("even Q2\n");
    CHECK_THROWS_AS(parse_cgda(bad1), ParseError);
    std::istringstream bad2("odd z2 2\nd z3 = 0\n");
    CHECK_THROWS_AS(parse_cgda(bad2), ParseError);
    std::istringstream bad3("even Q2 2\nodd z2 2\nd z2 = Q3\n");
    CHECK_THROWS_AS(parse_cgda(bad3), ParseError);
}

TEST_CASE("the irreducible-isotropy fixture defeats the exponent rules") {
    std::ifstream in(std::string(GHS_TEST_DATA_DIR) + "/manturov_q5.cgda");
    REQUIRE(in.good());
    FreeCGDA c = parse_cgda(in);
    CHECK(c.evens->symbols.size() == 15);
    CHECK(c.odds.size() == 119);

    RankTable expected;
    expected.add(10, 1);  // 2q
    expected.add(9, 1);   // 2q-1
    for (int i = 17; i <= 120; ++i)
        expected.add(2 * i - 1, 1);
    CHECK(homotopy_ranks(sullivan_reduce(c)) == expected);
}

TEST_CASE("symbolic and generic differential routes agree") {
    for (auto& inst : instantiate_catalog(5)) {
        if (!inst.family->cartan_available)
            continue;
        INFO(inst.space.name);
        FreeCGDA fast = build_cartan_algebra(inst.space, true);
        FreeCGDA slow = build_cartan_algebra(inst.space, false);
        REQUIRE(fast.d.size() == slow.d.size());
        for (size_t i = 0; i < fast.d.size(); ++i)
            CHECK(fast.d[i].terms() == slow.d[i].terms());
    }
}
