#include <catch2/catch_amalgamated.hpp>

#include <ghs/homotopy.hpp>

using namespace ghs;

namespace {

RankTable table(std::initializer_list<std::pair<int, int>> entries) {
    RankTable t;
    for (auto& [q, d] : entries)
        t.add(q, d);
    return t;
}

SpaceDescriptor by_name(const std::string& name, int max_rank = 8) {
    for (auto& inst : instantiate_catalog(max_rank))
        if (inst.space.name == name)
            return inst.space;
    throw std::runtime_error("no catalog instance named " + name);
}

}  // namespace

TEST_CASE("theorem path on classical rows") {
    CHECK(ranks_via_theorem(by_name("SU(6)/Sp(3)")) == table({{5, 1}, {9, 1}}));
    CHECK(ranks_via_theorem(by_name("Sp(2)/U(2)")) == table({{2, 1}, {7, 1}}));
    CHECK(ranks_via_theorem(by_name("SO(8)/SO(4)xSO(4)")) ==
          table({{4, 3}, {7, 2}, {11, 1}}));
    CHECK(ranks_via_theorem(by_name("SO(8)/SO(2)xSO(6)")) ==
          table({{2, 1}, {6, 1}, {7, 1}, {11, 1}}));
    CHECK(ranks_via_theorem(by_name("SO(5)/SO(4)")) == table({{4, 1}, {7, 1}}));
    CHECK(ranks_via_theorem(by_name("SU(4)/SO(4)")) ==
          table({{4, 1}, {5, 1}, {7, 1}}));
    // the repeated exponent of D4 gives a two-dimensional odd group
    CHECK(ranks_via_theorem(by_name("SO(12)/SO(6)xSO(6)")) ==
          table({{4, 1}, {6, 2}, {8, 1}, {11, 2}, {15, 1}, {19, 1}}));
}

TEST_CASE("theorem path on the exceptional rows") {
    CHECK(ranks_via_theorem(by_name("G2/SO(4)")) == table({{4, 1}, {11, 1}}));
    CHECK(ranks_via_theorem(by_name("F4/SU(2)*Sp(3)")) ==
          table({{4, 1}, {8, 1}, {15, 1}, {23, 1}}));
    CHECK(ranks_via_theorem(by_name("F4/Spin(9)")) == table({{8, 1}, {23, 1}}));
    CHECK(ranks_via_theorem(by_name("E6/PSp(4)")) ==
          table({{8, 1}, {9, 1}, {17, 1}, {23, 1}}));
    CHECK(ranks_via_theorem(by_name("E6/F4")) == table({{9, 1}, {17, 1}}));
    CHECK(ranks_via_theorem(by_name("E6/SU(2)*SU(6)")) ==
          table({{4, 1}, {6, 1}, {8, 1}, {15, 1}, {17, 1}, {23, 1}}));
    CHECK(ranks_via_theorem(by_name("AdE6/T1*Spin(10)")) ==
          table({{2, 1}, {8, 1}, {17, 1}, {23, 1}}));
    CHECK(ranks_via_theorem(by_name("E7/SU*(8)")) ==
          table({{6, 1}, {8, 1}, {10, 1}, {14, 1}, {19, 1}, {23, 1}, {27, 1}, {35, 1}}));
    CHECK(ranks_via_theorem(by_name("E7/SU(2)*Spin(12)")) ==
          table({{4, 1}, {8, 1}, {12, 1}, {23, 1}, {27, 1}, {35, 1}}));
    CHECK(ranks_via_theorem(by_name("AdE7/T1*E6")) ==
          table({{2, 1}, {10, 1}, {18, 1}, {19, 1}, {27, 1}, {35, 1}}));
    CHECK(ranks_via_theorem(by_name("E8/SO(16)")) ==
          table({{8, 1}, {12, 1}, {16, 1}, {20, 1}, {35, 1}, {39, 1}, {47, 1}, {59, 1}}));
    CHECK(ranks_via_theorem(by_name("E8/SU(2)*E7")) ==
          table({{4, 1}, {12, 1}, {20, 1}, {39, 1}, {47, 1}, {59, 1}}));
}

TEST_CASE("cartan path on selected spaces") {
    CHECK(ranks_via_cartan(by_name("D4/G2")) == table({{7, 2}}));
    CHECK(ranks_via_cartan(by_name("E6/F4")) == table({{9, 1}, {17, 1}}));
    CHECK(ranks_via_cartan(by_name("SU(5)/SO(5)")) == table({{5, 1}, {9, 1}}));
    CHECK(ranks_via_cartan(by_name("G2/SO(4)")) == table({{4, 1}, {11, 1}}));
    CHECK(ranks_via_cartan(by_name("SO(10)/U(5)")) ==
          table({{2, 1}, {6, 1}, {11, 1}, {15, 1}}));
    CHECK(ranks_via_cartan(by_name("SO(8)/U(4)")) ==
          table({{2, 1}, {6, 1}, {7, 1}, {11, 1}}));
}

TEST_CASE("flag ranks") {
    CHECK(flag_ranks({Family::A, 2}, 2) == table({{2, 2}, {3, 1}, {5, 1}}));
    CHECK(flag_ranks({Family::D, 4}, 1) == table({{2, 1}, {3, 1}, {7, 2}, {11, 1}}));
    CHECK(flag_ranks({Family::A, 1}, 1) == table({{2, 1}, {3, 1}}));
    CHECK_THROWS_AS(flag_ranks({Family::A, 2}, 5), NotGeneralisedSymmetric);
}

TEST_CASE("totally non-cohomologous to zero tables") {
    ExponentMultiset a3 = exponents({Family::A, 3});
    ExponentMultiset just2;
    just2.add(2);
    CHECK(tncz_ranks(a3, just2) == table({{5, 1}, {7, 1}}));
    CHECK(tncz_ranks(a3, a3) == RankTable{});
    CHECK(tncz_ranks(exponents({Family::D, 4}), exponents({Family::B, 3})) ==
          table({{7, 1}}));
    ExponentMultiset too_many;
    too_many.add(2, 2);
    CHECK_THROWS(tncz_ranks(exponents({Family::A, 2}), too_many));
}

TEST_CASE("tncz agrees with the pipeline when the even part is empty") {
    for (auto* name : {"SU(5)/SO(5)", "SU(6)/Sp(3)", "E6/F4", "SO(8)/SO(7)"}) {
        SpaceDescriptor d = by_name(name);
        RankTable car = ranks_via_cartan(d);
        bool even_empty = true;
        for (auto& [q, dim] : car.dims)
            if (q % 2 == 0)
                even_empty = false;
        REQUIRE(even_empty);
        ExponentMultiset hexp;
        for (auto& s : d.summands)
            for (auto& [k, m] : exponents(s.type).entries)
                hexp.add(k, m);
        INFO(name);
        CHECK(tncz_ranks(exponents(d.ambient), hexp) == car);
    }
}

TEST_CASE("cross-check produces agreement reports") {
    MethodReport rep = cross_check(by_name("E6/F4"));
    REQUIRE(rep.agreement.has_value());
    CHECK(*rep.agreement);
    CHECK(rep.method == "both");
    CHECK(!rep.notes.empty());

    SpaceDescriptor flag{{Family::A, 2}, 1, 2, {}, "SU(3)/T"};
    MethodReport frep = cross_check(flag);
    CHECK(*frep.agreement);
    CHECK(frep.ranks == flag_ranks({Family::A, 2}, 2));
}

TEST_CASE("theorem and cartan paths agree on the catalog up to rank 6") {
    for (auto& inst : instantiate_catalog(6)) {
        if (!inst.family->cartan_available)
            continue;
        INFO(inst.space.name);
        CHECK(ranks_via_theorem(inst.space) == ranks_via_cartan(inst.space));
    }
}

TEST_CASE("descriptors outside the hypotheses are rejected") {
    // category 1 with a rank deficit is not a fixed-point algebra
    SpaceDescriptor bad{{Family::A, 5}, 1, 1,
                        {{{Family::A, 2}, {1, 2}}, {{Family::A, 1}, {4}}}};
    CHECK_THROWS_AS(ranks_via_theorem(bad), NotGeneralisedSymmetric);
    SpaceDescriptor bad2{{Family::B, 3}, 2, 0, {{{Family::B, 2}, {1, 2}}}};
    CHECK_THROWS_AS(ranks_via_theorem(bad2), NotGeneralisedSymmetric);
    // E7/E8 ambients have no cartan route
    CHECK_THROWS_AS(ranks_via_cartan(by_name("E8/SO(16)")), Unsupported);
}

TEST_CASE("symmetric table") {
    auto reports = symmetric_table(4);
    bool found = false;
    for (auto& rep : reports) {
        if (rep.space == "SU(4)/Sp(2)") {
            found = true;
            CHECK(rep.ranks == table({{5, 1}}));
            CHECK(rep.method == "both");
            REQUIRE(rep.agreement.has_value());
            CHECK(*rep.agreement);
        }
        if (rep.agreement.has_value())
            CHECK(*rep.agreement);
    }
    CHECK(found);
    // max_rank filter: only families with an ambient of rank <= 2
    auto small = symmetric_table(2);
    for (auto& rep : small)
        CHECK(!rep.space.empty());
    CHECK(small.size() < reports.size());
}
