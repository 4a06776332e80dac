#pragma once

#include "cgda.hpp"
#include "embedding.hpp"
#include "liedata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghs {

struct MethodReport {
    std::string space;
    std::string method;  // "theorem", "cartan" or "both"
    RankTable ranks;
    std::optional<bool> agreement;  // set for method == "both"
    std::vector<std::string> notes;
};

namespace detail {

// rank of the fixed Cartan subalgebra for the given automorphism class
inline int fixed_cartan_rank(const SimpleType& ambient, int category) {
    if (category == 1)
        return ambient.rank;
    if (category == 3)
        return 2;  // the cubic twist of D4
    switch (ambient.family) {
        case Family::A: return (ambient.rank + (ambient.rank % 2)) / 2;
        case Family::D: return ambient.rank - 1;
        case Family::E6: return 4;
        default:
            throw NotGeneralisedSymmetric("no outer class for " + to_string(ambient));
    }
}

inline void note(std::vector<std::string>* notes, const std::string& s) {
    if (notes)
        notes->push_back(s);
}

}  // namespace detail

// Closed-form assembly of the rank table from the exponent data. Every entry
// is annotated with the rule that produced it.
inline RankTable ranks_via_theorem(const SpaceDescriptor& space,
                                   std::vector<std::string>* notes = nullptr) {
    validate_ambient(space.ambient);
    if (space.category < 1 || space.category > 3)
        throw NotGeneralisedSymmetric("bad category");
    int fixed_rank = detail::fixed_cartan_rank(space.ambient, space.category);
    int total = space.torus_rank;
    ExponentMultiset hexp;
    for (auto& s : space.summands) {
        total += s.type.rank;
        for (auto& [k, m] : exponents(s.type).entries)
            hexp.add(k, m);
    }
    if (total != fixed_rank)
        throw NotGeneralisedSymmetric(
            "torus rank plus summand ranks must fill the fixed Cartan (" +
            std::to_string(fixed_rank) + ")");

    ExponentMultiset gexp = exponents(space.ambient);
    bool equal_rank = (space.category == 1);

    RankTable t;
    if (space.torus_rank > 0) {
        t.add(2, space.torus_rank);
        detail::note(notes, "pi2: central torus of rank " + std::to_string(space.torus_rank));
    }

    int max_exp = gexp.entries.back().first;
    for (auto& [p, m] : hexp.entries)
        max_exp = std::max(max_exp, p);
    for (int p = 2; p <= max_exp; ++p) {
        int vg = gexp.multiplicity(p);
        int vh = hexp.multiplicity(p);
        if (vg == 0 && vh == 0)
            continue;
        if (vh == 0) {
            t.add(2 * p - 1, vg);
            detail::note(notes, "pi" + std::to_string(2 * p - 1) + ": exponent " +
                                    std::to_string(p) + " of the group only, multiplicity " +
                                    std::to_string(vg));
            continue;
        }
        if (vg == 0) {
            t.add(2 * p, vh);
            detail::note(notes, "pi" + std::to_string(2 * p) + ": exponent " +
                                    std::to_string(p) +
                                    " of the isotropy only, multiplicity " +
                                    std::to_string(vh));
            continue;
        }
        bool delta_vanishes = !equal_rank && (p % 2 == 1);
        if (delta_vanishes) {
            // odd power sums restrict to zero under an outer class
            t.add(2 * p, vh);
            t.add(2 * p - 1, vg);
            detail::note(notes, "common odd exponent " + std::to_string(p) +
                                    " in the lower-rank case: differential vanishes");
        } else {
            t.add(2 * p, vh - 1);
            t.add(2 * p - 1, vg - 1);
            detail::note(notes, "common exponent " + std::to_string(p) +
                                    ": one matched generator pair cancels");
        }
    }
    return t;
}

// Full pipeline: Cartan algebra, linear-part ranks, generator degrees.
inline RankTable ranks_via_cartan(const SpaceDescriptor& space) {
    return homotopy_ranks(sullivan_reduce(build_cartan_algebra(space)));
}

// G/S for a torus S: the differential vanishes identically.
inline RankTable flag_ranks(const SimpleType& g, int torus_dim) {
    validate_ambient(g);
    if (torus_dim < 0 || torus_dim > g.rank)
        throw NotGeneralisedSymmetric("torus dimension out of range");
    RankTable t;
    t.add(2, torus_dim);
    for (auto& [k, m] : exponents(g).entries)
        t.add(2 * k - 1, m);
    return t;
}

// Totally non-cohomologous to zero: all even groups vanish and the odd ones
// are multiplicity differences.
inline RankTable tncz_ranks(const ExponentMultiset& gexp, const ExponentMultiset& hexp) {
    RankTable t;
    for (auto& [k, mh] : hexp.entries)
        if (mh > gexp.multiplicity(k))
            throw Error("isotropy exponent multiplicities exceed the group's");
    for (auto& [k, mg] : gexp.entries)
        t.add(2 * k - 1, mg - hexp.multiplicity(k));
    return t;
}

inline MethodReport cross_check(const SpaceDescriptor& space) {
    MethodReport rep;
    rep.space = space.name.empty() ? to_string(space.ambient) : space.name;
    rep.method = "both";
    RankTable thm = ranks_via_theorem(space, &rep.notes);
    RankTable car = ranks_via_cartan(space);
    rep.ranks = thm;
    rep.agreement = (thm == car);
    if (!*rep.agreement) {
        for (auto& [q, d] : thm.dims)
            if (car.dim(q) != d) {
                rep.notes.push_back("disagreement first at q=" + std::to_string(q) +
                                    ": theorem " + std::to_string(d) + ", cartan " +
                                    std::to_string(car.dim(q)));
                break;
            }
        for (auto& [q, d] : car.dims)
            if (thm.dim(q) == 0) {
                rep.notes.push_back("cartan-only entry at q=" + std::to_string(q));
                break;
            }
    }
    return rep;
}

// Every symmetric-space family instantiated up to the rank bound, computed by
// both methods where the Cartan path is available.
inline std::vector<MethodReport> symmetric_table(int max_rank) {
    std::vector<MethodReport> out;
    for (auto& inst : instantiate_catalog(max_rank, /*symmetric_only=*/true)) {
        if (inst.family->cartan_available) {
            MethodReport rep = cross_check(inst.space);
            rep.space = inst.space.name;
            out.push_back(std::move(rep));
        } else {
            MethodReport rep;
            rep.space = inst.space.name;
            rep.method = "theorem";
            rep.ranks = ranks_via_theorem(inst.space, &rep.notes);
            out.push_back(std::move(rep));
        }
    }
    return out;
}

}  // namespace ghs
