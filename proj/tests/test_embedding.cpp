#include <catch2/catch_amalgamated.hpp>

#include <ghs/embedding.hpp>

#include "oracles.hpp"

using namespace ghs;

namespace {

Polynomial ambient_relation_sum(const VarSetPtr& vars, int count) {
    Polynomial s = Polynomial::zero(vars);
    for (int i = 0; i < count; ++i)
        s += Polynomial::variable(vars, i);
    return s;
}

// relations that hold identically on the fixed subspace, per ambient/category
std::vector<Polynomial> ambient_relations(const SpaceDescriptor& d, const VarSetPtr& vars) {
    std::vector<Polynomial> rel;
    auto x = [&](int i) { return Polynomial::variable(vars, i - 1); };  // 1-based
    int n = d.ambient.rank;
    if (d.ambient.family == Family::A && d.category == 1)
        rel.push_back(ambient_relation_sum(vars, n + 1));
    if (d.ambient.family == Family::G2)
        rel.push_back(ambient_relation_sum(vars, 3));
    if (d.ambient.family == Family::E6 && d.category == 1)
        rel.push_back(ambient_relation_sum(vars, 6));
    if (d.ambient.family == Family::A && d.category == 2 && n % 2 == 0) {
        int r = n / 2;
        rel.push_back(x(r + 1));
        for (int j = 1; j <= r; ++j)
            rel.push_back(x(j) + x(2 * r + 2 - j));
    }
    if (d.ambient.family == Family::A && d.category == 2 && n % 2 == 1) {
        int r = (n + 1) / 2;
        for (int j = 1; j <= r; ++j)
            rel.push_back(x(j) + x(2 * r + 1 - j));
    }
    if (d.ambient.family == Family::D && d.category == 2)
        rel.push_back(x(n));  // x_{r+1}
    if (d.ambient.family == Family::D && d.category == 3) {
        rel.push_back(x(4));
        rel.push_back(x(1) - x(2) - x(3));
    }
    if (d.ambient.family == Family::E6 && d.category == 2) {
        rel.push_back(x(1) + x(6) - x(2) - x(5));
        rel.push_back(x(3) + x(4) - x(2) - x(5));
    }
    return rel;
}

}  // namespace

TEST_CASE("classical restriction blocks") {
    SECTION("B4 > D3 via the affine end") {
        Block b = classical_restriction({Family::B, 4}, 1,
                                        {{Family::D, 3}, {2, 1, 0}});
        auto y = [&](int i) { return Polynomial::variable(b.target.vars, i - 1); };
        CHECK(b.images[2] == -y(1));  // x3 -> -y1
        CHECK(b.images[1] == -y(2));
        CHECK(b.images[0] == -y(3));
        CHECK(b.images[3].is_zero());  // x4 -> 0
    }
    SECTION("A_{2r} category 2 > B_l") {
        // r = 3, l = 2: x2 -> y1, x3 -> y2, x1 -> 0, then mirrors
        Block b = classical_restriction({Family::A, 6}, 2, {{Family::B, 2}, {2, 3}});
        auto y = [&](int i) { return Polynomial::variable(b.target.vars, i - 1); };
        CHECK(b.images[1] == y(1));
        CHECK(b.images[2] == y(2));
        CHECK(b.images[0].is_zero());
        CHECK(b.images[3].is_zero());       // x_{r+1} = x4
        CHECK(b.images[4] == -y(2));        // x5 = -x3
        CHECK(b.images[5] == -y(1));        // x6 = -x2
        CHECK(b.images[6].is_zero());       // x7 = -x1
    }
    SECTION("identity summand gives an identity matching") {
        Block b = classical_restriction({Family::B, 3}, 1, {{Family::B, 3}, {1, 2, 3}});
        for (int i = 0; i < 3; ++i)
            CHECK(b.images[i] == Polynomial::variable(b.target.vars, i));
    }
    SECTION("A-ambient chain folds the trailing coordinate") {
        Block b = classical_restriction({Family::A, 5}, 1, {{Family::A, 2}, {1, 2}});
        auto y = [&](int i) { return Polynomial::variable(b.target.vars, i - 1); };
        CHECK(b.images[0] == y(1));
        CHECK(b.images[1] == y(2));
        CHECK(b.images[2] == -(y(1) + y(2)));
        CHECK(b.images[3].is_zero());
    }
    SECTION("conjugate chains are canonicalized") {
        // {0,2,3} in B5 is conjugate to {1,2,3}
        Block a = classical_restriction({Family::B, 5}, 1, {{Family::A, 3}, {0, 2, 3}});
        Block c = classical_restriction({Family::B, 5}, 1, {{Family::A, 3}, {1, 2, 3}});
        CHECK(a.images == c.images);
        // {2,3,5} in D5 is conjugate to {2,3,4}
        Block d = classical_restriction({Family::D, 5}, 1, {{Family::A, 3}, {2, 3, 5}});
        Block e = classical_restriction({Family::D, 5}, 1, {{Family::A, 3}, {2, 3, 4}});
        CHECK(d.images == e.images);
    }
    SECTION("unlisted cases are rejected") {
        CHECK_THROWS_AS(
            classical_restriction({Family::B, 4}, 1, {{Family::A, 2}, {1, 3}}),
            UnlistedCase);
        CHECK_THROWS_AS(
            classical_restriction({Family::B, 4}, 1, {{Family::C, 2}, {0, 1}}),
            UnlistedCase);
        CHECK_THROWS_AS(
            classical_restriction({Family::A, 5}, 1, {{Family::A, 2}, {0, 1}}),
            UnlistedCase);
    }
}

TEST_CASE("special A3 blocks carry the fork quartic") {
    for (auto [ambient, cat, idx] :
         std::vector<std::tuple<SimpleType, int, std::vector<int>>>{
             {{Family::B, 4}, 1, {0, 2, 1}},
             {{Family::D, 5}, 1, {0, 2, 1}},
             {{Family::D, 5}, 1, {3, 4, 5}},
             {{Family::A, 8}, 2, {0, 2, 1}}}) {
        INFO(to_string(ambient) << " cat " << cat);
        Block b = classical_restriction(ambient, cat, {{Family::A, 3}, idx});
        // the restricted quartic power sum expressed in the induced A3
        // generators: 3/2 Q2^2 - 2 Q4 per block (category 2 doubles it)
        Polynomial p4 = Polynomial::zero(b.target.vars);
        for (auto& im : b.images)
            p4 += pow(im, 4);
        auto expr = express_in_generators(p4, b.target.gens);
        Rational scale = (cat == 2) ? 2 : 1;
        CHECK(expr.linear_coefficient("Q4") == Rational(-2) * scale);
        CHECK(expr.terms().at({2, 0, 0}) == Rational(3, 2) * scale);
    }
}

TEST_CASE("exceptional restriction blocks") {
    SECTION("E6 > A4") {
        Block b = exceptional_restriction({Family::E6, 6}, 1,
                                          {{Family::A, 4}, {1, 2, 3, 4}});
        auto y = [&](int i) { return Polynomial::variable(b.target.vars, i - 1); };
        for (int i = 1; i <= 4; ++i)
            CHECK(b.images[i - 1] == y(i));
        CHECK(b.images[4] == -(y(1) + y(2) + y(3) + y(4)));
        CHECK(b.images[5].is_zero());  // x6
        CHECK(b.images[6].is_zero());  // eps
    }
    SECTION("F4 > C3") {
        Block b = exceptional_restriction({Family::F4, 4}, 1, {{Family::C, 3}, {1, 2, 3}});
        auto y = [&](int i) { return Polynomial::variable(b.target.vars, i - 1); };
        CHECK(b.images[0] == y(1));
        CHECK(b.images[1] == -y(1));
        CHECK(b.images[2] == y(2) + y(3));
        CHECK(b.images[3] == y(2) - y(3));
    }
    SECTION("E6 category 2 > C3 in the forms") {
        Block b = exceptional_restriction({Family::E6, 6}, 2, {{Family::C, 3}, {1, 2, 3}});
        auto y = [&](int i) { return Polynomial::variable(b.target.vars, i - 1); };
        CHECK(b.images[0] == y(1));
        CHECK(b.images[3] == -y(3));
        CHECK(b.images[4] == -y(2));
        CHECK(b.images[5] == -y(1));
    }
    SECTION("D4 cubic twist > G2 respects the fixed-space relations") {
        Block b = exceptional_restriction({Family::D, 4}, 3, {{Family::G2, 2}, {1, 2}});
        CHECK(b.images[3].is_zero());
        CHECK(b.images[0] - b.images[1] - b.images[2] == Polynomial::zero(b.target.vars));
    }
    SECTION("unlisted exceptional case") {
        CHECK_THROWS_AS(
            exceptional_restriction({Family::F4, 4}, 1, {{Family::B, 2}, {3, 4}}),
            UnlistedCase);
    }
}

TEST_CASE("full restriction assembles blocks and torus") {
    SECTION("A5 with two summands and one torus coordinate") {
        SpaceDescriptor d{{Family::A, 5}, 1, 1,
                          {{{Family::A, 2}, {1, 2}}, {{Family::A, 1}, {4}}}};
        Restriction r = full_restriction(d);
        CHECK(r.torus_rank == 1);
        CHECK(r.h_gens.size() == 1 + 2 + 1);
        // sum of all six ambient coordinates dies identically
        Polynomial s = ambient_relation_sum(r.rho.source, 6);
        CHECK(substitute_linear(s, r.rho).is_zero());
    }
    SECTION("D5 category 2 with fixed algebra B4") {
        SpaceDescriptor d{{Family::D, 5}, 2, 0, {{{Family::B, 4}, {1, 2, 3, 4}}}};
        Restriction r = full_restriction(d);
        for (int i = 0; i < 4; ++i)
            CHECK(substitute_linear(Polynomial::variable(r.rho.source, i), r.rho) ==
                  Polynomial::variable(r.h_vars, i));
        CHECK(substitute_linear(Polynomial::variable(r.rho.source, 4), r.rho).is_zero());
    }
    SECTION("pure torus map") {
        SpaceDescriptor d{{Family::A, 2}, 1, 2, {}};
        Restriction r = full_restriction(d);
        CHECK(r.torus_rank == 2);
        CHECK(r.h_gens.size() == 2);
        for (auto& g : r.h_gens)
            CHECK(g.weight == 1);
        Polynomial s = ambient_relation_sum(r.rho.source, 3);
        CHECK(substitute_linear(s, r.rho).is_zero());
    }
    SECTION("Sp(3)/U(3): the torus direction is central") {
        SpaceDescriptor d{{Family::C, 3}, 1, 1, {{{Family::A, 2}, {1, 2}}}};
        Restriction r = full_restriction(d);
        // the torus coordinate u1 cancels in coordinate differences
        Polynomial x12 = substitute_linear(
            Polynomial::variable(r.rho.source, 0) - Polynomial::variable(r.rho.source, 1),
            r.rho);
        for (auto& [m, c] : x12.terms())
            CHECK(m.exponent_of(0) == 0);
    }
    SECTION("rank mismatch") {
        SpaceDescriptor d{{Family::A, 2}, 1, 3, {}};
        CHECK_THROWS_AS(full_restriction(d), RankMismatch);
        SpaceDescriptor e{{Family::C, 3}, 1, 2, {{{Family::A, 2}, {1, 2}}}};
        CHECK_THROWS_AS(full_restriction(e), RankMismatch);
    }
}

TEST_CASE("restriction maps preserve or annihilate weights and kill relations") {
    for (auto& inst : instantiate_catalog(6)) {
        if (!inst.family->cartan_available)
            continue;
        INFO(inst.space.name);
        Restriction r = full_restriction(inst.space);
        auto amb = ambient_generators(inst.space.ambient, inst.space.category);
        for (auto& g : amb.gens) {
            Polynomial im = substitute_linear(g.poly, r.rho);
            if (!im.is_zero())
                CHECK(*im.homogeneous_degree() == g.weight);
        }
        for (auto& rel : ambient_relations(inst.space, r.rho.source))
            CHECK(substitute_linear(rel, r.rho).is_zero());
    }
}

TEST_CASE("catalog sanity") {
    auto fams = catalog();
    CHECK(fams.size() == 26 + 9);
    auto insts = instantiate_catalog(8);
    CHECK(!insts.empty());
    // a few display names
    bool su6sp3 = false, e6f4 = false, s7 = false;
    for (auto& i : insts) {
        if (i.space.name == "SU(6)/Sp(3)")
            su6sp3 = true;
        if (i.space.name == "E6/F4")
            e6f4 = true;
        if (i.space.name == "SO(8)/SO(7)")
            s7 = true;
        CHECK(i.family->ambient_rank(i.n, i.k) <= 8);
    }
    CHECK(su6sp3);
    CHECK(e6f4);
    CHECK(s7);
    // symmetric rows are genuine fixed-point data: ranks add up per category
    for (auto& i : instantiate_catalog(8, /*symmetric_only=*/true)) {
        int total = i.space.torus_rank;
        for (auto& s : i.space.summands)
            total += s.type.rank;
        INFO(i.space.name);
        if (i.space.category == 1)
            CHECK(total == i.space.ambient.rank);
        else
            CHECK(total < i.space.ambient.rank);
    }
}
