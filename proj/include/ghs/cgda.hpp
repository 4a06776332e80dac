#pragma once

#include "embedding.hpp"
#include "genexpr.hpp"
#include "liedata.hpp"
#include "linalg.hpp"
#include "newton.hpp"

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace ghs {

// q -> dim pi_q (x) Q, zero entries omitted
struct RankTable {
    std::map<int, int> dims;

    void add(int q, int d) {
        if (d == 0)
            return;
        dims[q] += d;
        if (dims[q] == 0)
            dims.erase(q);
    }
    int dim(int q) const {
        auto it = dims.find(q);
        return it == dims.end() ? 0 : it->second;
    }
    bool operator==(const RankTable&) const = default;

    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (auto& [q, d] : dims) {
            if (!first)
                out += ", ";
            first = false;
            out += "pi" + std::to_string(q) + ": " + std::to_string(d);
        }
        return out + "}";
    }
};

// A free simply connected CGDA: polynomial generators on even symbols,
// exterior generators on odd symbols, the differential of every odd generator
// expressed in the even symbols.
struct FreeCGDA {
    GeneratorBasisPtr evens;
    std::vector<GeneratorSymbol> odds;
    std::vector<GeneratorExpression> d;  // parallel to odds

    int even_count(int weight) const {
        int c = 0;
        for (auto& s : evens->symbols)
            if (s.weight == weight)
                ++c;
        return c;
    }
    int odd_count(int weight) const {
        int c = 0;
        for (auto& s : odds)
            if (s.weight == weight)
                ++c;
        return c;
    }
};

// dim V' per cohomological degree (even degrees 2w from surviving polynomial
// generators, odd degrees 2w-1 from surviving exterior generators)
struct MinimalModelSignature {
    std::map<int, int> multiplicity;
};

// d(z_k) = rho*(P_k) expressed in the isotropy generators. Classical
// signed-matching spaces use the Newton-identity assembly; everything else
// goes through substitution followed by an exact coefficient-matching solve.
// Both routes produce the same expression (it is unique for algebraically
// independent generators).
inline FreeCGDA build_cartan_algebra(const SpaceDescriptor& space,
                                     bool allow_symbolic = true) {
    GeneratorSet amb = ambient_generators(space.ambient, space.category);
    Restriction r = full_restriction(space);

    FreeCGDA c;
    std::vector<GeneratorSymbol> even_syms;
    for (auto& g : r.h_gens)
        even_syms.push_back({g.name, g.weight});
    c.evens = make_basis(std::move(even_syms));

    std::optional<std::vector<GeneratorExpression>> sym;
    if (allow_symbolic)
        sym = symbolic_differentials(space, r, amb, c.evens);

    for (size_t gi = 0; gi < amb.gens.size(); ++gi) {
        const Generator& g = amb.gens[gi];
        std::string zname = "z" + (g.name.substr(0, 1) == "P" || g.name.substr(0, 1) == "I"
                                       ? g.name.substr(1)
                                       : g.name);
        if (g.name == "Pf")
            zname = "zPf";
        c.odds.push_back({zname, g.weight});
        if (sym) {
            c.d.push_back((*sym)[gi]);
            continue;
        }
        Polynomial restricted = substitute_linear(g.poly, r.rho);
        GeneratorExpression expr = express_in_generators(restricted, r.h_gens);
        // re-seat the expression on the CGDA's own basis object
        GeneratorExpression seated(c.evens);
        for (auto& [e, coeff] : expr.terms())
            seated.add_term(e, coeff);
        c.d.push_back(std::move(seated));
    }
    return c;
}

// rows: odd generators of the weight; columns: even generators of the weight;
// entry: the linear coefficient of that even symbol in the differential.
inline Mat delta_matrix(const FreeCGDA& c, int weight) {
    std::vector<int> row_idx, col_idx;
    for (size_t i = 0; i < c.odds.size(); ++i)
        if (c.odds[i].weight == weight)
            row_idx.push_back(static_cast<int>(i));
    for (size_t j = 0; j < c.evens->symbols.size(); ++j)
        if (c.evens->symbols[j].weight == weight)
            col_idx.push_back(static_cast<int>(j));
    Mat m(row_idx.size(), Vec(col_idx.size(), Rational(0)));
    for (size_t i = 0; i < row_idx.size(); ++i)
        for (size_t j = 0; j < col_idx.size(); ++j)
            m[i][j] =
                c.d[row_idx[i]].linear_coefficient(c.evens->symbols[col_idx[j]].name);
    return m;
}

// One pass of the reduction V = Im(delta) + V' + W: per weight, the rank of
// the delta matrix removes one even and one odd generator each. Only
// dimensions are computed; no basis of V' is materialized.
inline MinimalModelSignature sullivan_reduce(const FreeCGDA& c) {
    std::map<int, std::pair<int, int>> counts;  // weight -> (odd, even)
    for (auto& s : c.odds)
        counts[s.weight].first++;
    for (auto& s : c.evens->symbols)
        counts[s.weight].second++;

    MinimalModelSignature sig;
    for (auto& [w, oe] : counts) {
        int r = 0;
        if (oe.first > 0 && oe.second > 0)
            r = rank(delta_matrix(c, w));
        int odd_left = oe.first - r;
        int even_left = oe.second - r;
        if (even_left > 0)
            sig.multiplicity[2 * w] += even_left;
        if (odd_left > 0)
            sig.multiplicity[2 * w - 1] += odd_left;
    }
    return sig;
}

inline RankTable homotopy_ranks(const MinimalModelSignature& sig) {
    RankTable t;
    for (auto& [q, m] : sig.multiplicity)
        t.add(q, m);
    return t;
}

// ---------------------------------------------------------------------------
// Text fixtures:  "even <symbol> <weight>", "odd <symbol> <weight>",
//                 "d <symbol> = <polynomial in even symbols>"
// ---------------------------------------------------------------------------

namespace detail {

inline bool symbol_char(char ch) {
    return isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '~' ||
           ch == '\'';
}

// parses "3/2*Q2^3*Q4 - Q6 + 7" style expressions over the declared symbols
inline GeneratorExpression parse_expression(const std::string& text,
                                            const GeneratorBasisPtr& basis) {
    GeneratorExpression out(basis);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto fail = [&](const std::string& why) { throw ParseError(why + " in '" + text + "'", i); };

    skip_ws();
    if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size())
        return out;

    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size())
            break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = (text[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;

        Rational coeff = sign;
        std::vector<int> exps(basis->symbols.size(), 0);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (i >= text.size())
                break;
            if (isdigit(static_cast<unsigned char>(text[i]))) {
                size_t start = i;
                while (i < text.size() &&
                       (isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
                    ++i;
                coeff *= parse_rational(text.substr(start, i - start));
                saw_factor = true;
            } else if (isalpha(static_cast<unsigned char>(text[i]))) {
                size_t start = i;
                while (i < text.size() && symbol_char(text[i]))
                    ++i;
                std::string name = text.substr(start, i - start);
                int idx = basis->index_of(name);
                if (idx < 0)
                    fail("unknown symbol '" + name + "'");
                int e = 1;
                skip_ws();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip_ws();
                    size_t s2 = i;
                    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                        ++i;
                    if (s2 == i)
                        fail("missing exponent");
                    e = std::stoi(text.substr(s2, i - s2));
                }
                exps[idx] += e;
                saw_factor = true;
            } else {
                fail("unexpected character");
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor)
            fail("empty term");
        out.add_term(exps, coeff);
    }
    return out;
}

}  // namespace detail

inline FreeCGDA parse_cgda(std::istream& in) {
    std::vector<GeneratorSymbol> evens, odds;
    std::vector<std::pair<std::string, std::string>> dlines;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#')
            continue;
        if (head == "even" || head == "odd") {
            std::string name;
            int weight;
            if (!(ls >> name >> weight))
                throw ParseError("bad generator line", lineno);
            (head == "even" ? evens : odds).push_back({name, weight});
        } else if (head == "d") {
            std::string name, eq;
            if (!(ls >> name >> eq) || eq != "=")
                throw ParseError("bad differential line", lineno);
            std::string rest;
            std::getline(ls, rest);
            dlines.emplace_back(name, rest);
        } else {
            throw ParseError("unknown directive '" + head + "'", lineno);
        }
    }
    FreeCGDA c;
    c.evens = make_basis(std::move(evens));
    c.odds = std::move(odds);
    c.d.assign(c.odds.size(), GeneratorExpression(c.evens));
    for (auto& [name, expr] : dlines) {
        int idx = -1;
        for (size_t i = 0; i < c.odds.size(); ++i)
            if (c.odds[i].name == name)
                idx = static_cast<int>(i);
        if (idx < 0)
            throw ParseError("differential of undeclared generator '" + name + "'", 0);
        c.d[idx] = detail::parse_expression(expr, c.evens);
    }
    return c;
}

inline void write_cgda(std::ostream& out, const FreeCGDA& c) {
    for (auto& s : c.evens->symbols)
        out << "even " << s.name << " " << s.weight << "\n";
    for (auto& s : c.odds)
        out << "odd " << s.name << " " << s.weight << "\n";
    for (size_t i = 0; i < c.odds.size(); ++i)
        if (!c.d[i].is_zero())
            out << "d " << c.odds[i].name << " = " << c.d[i].str() << "\n";
}

}  // namespace ghs
