#pragma once

#include "errors.hpp"
#include "polynomial.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ghs {

struct GeneratorSymbol {
    std::string name;
    int weight = 0;  // polynomial degree; cohomological degree is 2*weight
    bool operator==(const GeneratorSymbol&) const = default;
};

struct GeneratorBasis {
    std::vector<GeneratorSymbol> symbols;
    int index_of(std::string_view name) const {
        for (size_t i = 0; i < symbols.size(); ++i)
            if (symbols[i].name == name)
                return static_cast<int>(i);
        return -1;
    }
};

using GeneratorBasisPtr = std::shared_ptr<const GeneratorBasis>;

inline GeneratorBasisPtr make_basis(std::vector<GeneratorSymbol> symbols) {
    return std::make_shared<const GeneratorBasis>(GeneratorBasis{std::move(symbols)});
}

// A named invariant generator together with its defining polynomial.
struct Generator {
    std::string name;
    int weight = 0;
    Polynomial poly;
};

// A polynomial in abstract generator symbols. Terms are exponent vectors over
// the basis; the weighted degree of every term of a well-formed expression
// equals the weight of the expressed polynomial.
class GeneratorExpression {
public:
    GeneratorExpression() = default;
    explicit GeneratorExpression(GeneratorBasisPtr basis) : basis_(std::move(basis)) {}

    const GeneratorBasisPtr& basis() const { return basis_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exps, const Rational& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(exps, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rational linear_coefficient(std::string_view symbol) const {
        int idx = basis_ ? basis_->index_of(symbol) : -1;
        if (idx < 0)
            throw Error("unknown generator symbol '" + std::string(symbol) + "'");
        for (auto& [e, c] : terms_) {
            int total = 0;
            for (int k : e)
                total += k;
            if (total == 1 && e[idx] == 1)
                return c;
        }
        return Rational(0);
    }

    bool has_linear_part() const {
        for (auto& [e, c] : terms_) {
            int total = 0;
            for (int k : e)
                total += k;
            if (total == 1)
                return true;
        }
        return false;
    }

    GeneratorExpression& operator+=(const GeneratorExpression& o) {
        for (auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    friend GeneratorExpression operator*(const Rational& c, const GeneratorExpression& a) {
        GeneratorExpression r(a.basis_);
        if (c == 0)
            return r;
        for (auto& [e, coeff] : a.terms_)
            r.terms_[e] = c * coeff;
        return r;
    }

    friend GeneratorExpression operator*(const GeneratorExpression& a,
                                         const GeneratorExpression& b) {
        GeneratorExpression r(a.basis_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                std::vector<int> e(ea.size());
                for (size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    static GeneratorExpression one(const GeneratorBasisPtr& basis) {
        GeneratorExpression r(basis);
        r.add_term(std::vector<int>(basis->symbols.size(), 0), 1);
        return r;
    }

    static GeneratorExpression single(const GeneratorBasisPtr& basis, int index,
                                      int power = 1, const Rational& c = 1) {
        GeneratorExpression r(basis);
        std::vector<int> e(basis->symbols.size(), 0);
        e[index] = power;
        r.add_term(e, c);
        return r;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (auto& [e, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0)
                    a = -a;
            }
            first = false;
            std::string mono;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += basis_->symbols[i].name;
                if (e[i] > 1)
                    mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                out += to_string(a);
            } else {
                if (a != 1)
                    out += to_string(a) + "*";
                out += mono;
            }
        }
        return out;
    }

private:
    GeneratorBasisPtr basis_;
    std::map<std::vector<int>, Rational> terms_;
};

// All exponent vectors e with sum(e[i]*weights[i]) == target, in descending
// lexicographic order. weights must be positive.
inline std::vector<std::vector<int>> weighted_monomials(const std::vector<int>& weights,
                                                        int target) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(weights.size(), 0);
    auto rec = [&](auto&& self, size_t i, int rem) -> void {
        if (i == weights.size()) {
            if (rem == 0)
                out.push_back(cur);
            return;
        }
        if (weights[i] <= 0)
            throw Error("weights must be positive");
        for (int e = rem / weights[i]; e >= 0; --e) {
            cur[i] = e;
            self(self, i + 1, rem - e * weights[i]);
        }
        cur[i] = 0;
    };
    if (target >= 0)
        rec(rec, 0, target);
    return out;
}

inline GeneratorBasisPtr basis_of(const std::vector<Generator>& gens) {
    std::vector<GeneratorSymbol> syms;
    syms.reserve(gens.size());
    for (auto& g : gens)
        syms.push_back({g.name, g.weight});
    return make_basis(std::move(syms));
}

inline Polynomial expand_expression(const GeneratorExpression& expr,
                                    const std::vector<Generator>& gens) {
    if (gens.empty())
        throw Error("cannot expand over an empty generator set");
    Polynomial out = Polynomial::zero(gens[0].poly.vars());
    for (auto& [e, c] : expr.terms()) {
        Polynomial t = Polynomial::constant(out.vars(), c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                t *= pow(gens[i].poly, e[i]);
        out += t;
    }
    return out;
}

namespace detail {

// --- packed fast path -------------------------------------------------------
// Monomials in up to 16 variables with exponents < 16 pack into a u64 nibble
// per variable; polynomials become sorted coefficient vectors. This carries
// the elimination for every solve the pipeline produces; the map-based route
// below stays as the general fallback.

using PackedPoly = std::vector<std::pair<uint64_t, Rational>>;  // sorted by key

inline bool packable(size_t nvars, int degree) {
    return nvars <= 16 && degree >= 0 && degree <= 15;
}

inline PackedPoly pack_poly(const Polynomial& p) {
    PackedPoly out;
    out.reserve(p.terms().size());
    for (auto& [m, c] : p.terms()) {
        uint64_t key = 0;
        for (auto& [v, e] : m.factors)
            key |= static_cast<uint64_t>(e) << (4 * v);
        out.emplace_back(key, c);
    }
    std::sort(out.begin(), out.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

inline Polynomial unpack_poly(const PackedPoly& p, const VarSetPtr& vars) {
    Polynomial out(vars);
    for (auto& [key, c] : p) {
        Monomial m;
        for (size_t v = 0; v < vars->size(); ++v) {
            int e = static_cast<int>((key >> (4 * v)) & 0xf);
            if (e)
                m.factors.emplace_back(static_cast<int>(v), e);
        }
        out.add_term(m, c);
    }
    return out;
}

inline PackedPoly packed_mul(const PackedPoly& a, const PackedPoly& b) {
    std::map<uint64_t, Rational> acc;
    for (auto& [ka, ca] : a)
        for (auto& [kb, cb] : b) {
            auto [it, inserted] = acc.emplace(ka + kb, ca * cb);
            if (!inserted)
                it->second += ca * cb;
        }
    PackedPoly out;
    out.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0)
            out.emplace_back(k, c);
    return out;
}

// a -= f * b, both sorted
inline void packed_axpy(PackedPoly& a, const Rational& f, const PackedPoly& b) {
    PackedPoly out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(std::move(a[i++]));
        } else if (a[i].first > b[j].first) {
            out.emplace_back(b[j].first, -f * b[j].second);
            ++j;
        } else {
            Rational c = a[i].second - f * b[j].second;
            if (c != 0)
                out.emplace_back(a[i].first, std::move(c));
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i)
        out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j)
        out.emplace_back(b[j].first, -f * b[j].second);
    a = std::move(out);
}

struct PackedRow {
    PackedPoly poly;              // monic on its leading (largest) key
    std::vector<Rational> combo;  // poly == sum combo[j] * E_j
};

class PackedEliminator {
public:
    explicit PackedEliminator(size_t width) : width_(width) {}

    void reduce(PackedPoly& p, std::vector<Rational>& basis_combo) const {
        while (!p.empty()) {
            auto it = rows_.find(p.back().first);
            if (it == rows_.end())
                return;
            Rational f = p.back().second;
            packed_axpy(p, f, it->second.poly);
            for (size_t j = 0; j < width_; ++j)
                if (it->second.combo[j] != 0)
                    basis_combo[j] += f * it->second.combo[j];
        }
    }

    bool insert(PackedPoly p, std::vector<Rational> combo) {
        std::vector<Rational> used(width_, Rational(0));
        reduce(p, used);
        for (size_t j = 0; j < width_; ++j)
            combo[j] -= used[j];
        if (p.empty()) {
            null_combos_.push_back(std::move(combo));
            return false;
        }
        Rational inv = 1 / p.back().second;
        for (auto& [k, c] : p)
            c *= inv;
        for (auto& c : combo)
            c *= inv;
        uint64_t lead = p.back().first;
        rows_.emplace(lead, PackedRow{std::move(p), std::move(combo)});
        return true;
    }

    const std::vector<std::vector<Rational>>& null_combos() const { return null_combos_; }

private:
    size_t width_;
    std::map<uint64_t, PackedRow> rows_;
    std::vector<std::vector<Rational>> null_combos_;
};

// --- generic fallback -------------------------------------------------------

// Sparse exact elimination over polynomials viewed as coefficient vectors.
// Rows are kept monic on their leading monomial.
struct EliminationRow {
    Polynomial poly;            // residual, leading coefficient 1
    std::vector<Rational> combo;  // poly == sum combo[j] * E_j (pre-normalization applied)
};

class Eliminator {
public:
    explicit Eliminator(size_t width) : width_(width) {}

    // Reduces p in place; coeffs_out accumulates how much of each stored row
    // was subtracted, folded back to basis coordinates.
    void reduce(Polynomial& p, std::vector<Rational>& basis_combo) const {
        while (!p.is_zero()) {
            const Monomial& lead = p.terms().rbegin()->first;
            auto it = rows_.find(lead);
            if (it == rows_.end())
                return;
            Rational f = p.terms().rbegin()->second;
            p -= f * it->second.poly;
            for (size_t j = 0; j < width_; ++j)
                if (it->second.combo[j] != 0)
                    basis_combo[j] += f * it->second.combo[j];
        }
    }

    // Returns false (and records nothing) if the row reduced to zero; in that
    // case basis_combo holds a nullspace combination.
    bool insert(Polynomial p, std::vector<Rational> combo) {
        std::vector<Rational> used(width_, Rational(0));
        reduce(p, used);
        for (size_t j = 0; j < width_; ++j)
            combo[j] -= used[j];
        if (p.is_zero()) {
            null_combos_.push_back(std::move(combo));
            return false;
        }
        Rational lead = p.terms().rbegin()->second;
        Rational inv = 1 / lead;
        p = inv * p;
        for (auto& c : combo)
            c *= inv;
        Monomial lm = p.terms().rbegin()->first;
        rows_.emplace(std::move(lm), EliminationRow{std::move(p), std::move(combo)});
        return true;
    }

    const std::vector<std::vector<Rational>>& null_combos() const { return null_combos_; }

private:
    size_t width_;
    std::map<Monomial, EliminationRow, MonomialOrder> rows_;
    std::vector<std::vector<Rational>> null_combos_;
};

}  // namespace detail

// Writes a homogeneous polynomial R as a polynomial in the given generators by
// exact coefficient matching. Throws NotInSubring when no expression exists
// and AmbiguousExpression when the system is underdetermined in a way that
// changes the linear part.
inline GeneratorExpression express_in_generators(const Polynomial& R,
                                                 const std::vector<Generator>& gens) {
    GeneratorBasisPtr basis = basis_of(gens);
    GeneratorExpression result(basis);
    if (R.is_zero())
        return result;

    auto hdeg = R.homogeneous_degree();
    if (!hdeg)
        throw Error("express_in_generators requires a homogeneous polynomial");
    int w = *hdeg;

    std::vector<int> weights;
    for (auto& g : gens) {
        require_same_vars(g.poly.vars(), R.vars());
        auto gd = g.poly.homogeneous_degree();
        if (!gd || *gd != g.weight)
            throw Error("generator '" + g.name + "' is not homogeneous of its declared weight");
        weights.push_back(g.weight);
    }

    auto candidate_exps = weighted_monomials(weights, w);
    if (candidate_exps.empty())
        throw NotInSubring("no generator monomials exist in weight " + std::to_string(w));

    auto linear_slot = [&](const std::vector<int>& e) {
        int total = 0;
        for (int k : e)
            total += k;
        return total == 1;
    };

    std::vector<Rational> solution(candidate_exps.size(), Rational(0));

    if (detail::packable(R.vars()->size(), w)) {
        std::vector<std::vector<detail::PackedPoly>> powers(gens.size());
        auto gen_power = [&](size_t i, int e) -> const detail::PackedPoly& {
            auto& cache = powers[i];
            if (cache.empty()) {
                cache.push_back({{0, Rational(1)}});
                cache.push_back(detail::pack_poly(gens[i].poly));
            }
            while (static_cast<int>(cache.size()) <= e)
                cache.push_back(detail::packed_mul(cache.back(), cache[1]));
            return cache[e];
        };
        std::vector<detail::PackedPoly> expansions;
        expansions.reserve(candidate_exps.size());
        for (auto& e : candidate_exps) {
            detail::PackedPoly p = {{0, Rational(1)}};
            for (size_t i = 0; i < gens.size(); ++i)
                if (e[i] > 0)
                    p = detail::packed_mul(p, gen_power(i, e[i]));
            expansions.push_back(std::move(p));
        }

        detail::PackedEliminator elim(candidate_exps.size());
        for (size_t j = 0; j < expansions.size(); ++j) {
            std::vector<Rational> unit(candidate_exps.size(), Rational(0));
            unit[j] = 1;
            elim.insert(expansions[j], std::move(unit));
        }
        detail::PackedPoly residual = detail::pack_poly(R);
        elim.reduce(residual, solution);
        if (!residual.empty())
            throw NotInSubring("polynomial is not in the subring generated by the given set");
        for (auto& nc : elim.null_combos())
            for (size_t j = 0; j < candidate_exps.size(); ++j)
                if (nc[j] != 0 && linear_slot(candidate_exps[j]))
                    throw AmbiguousExpression(
                        "underdetermined expression with varying linear part");

        // round-trip identity on the packed data
        detail::PackedPoly back;
        for (size_t j = 0; j < candidate_exps.size(); ++j)
            if (solution[j] != 0)
                detail::packed_axpy(back, -solution[j], expansions[j]);
        detail::packed_axpy(back, Rational(1), detail::pack_poly(R));
        if (!back.empty())
            throw Error("internal error: expression round-trip failed");
    } else {
        // expansions, with power caching per generator
        std::vector<std::vector<Polynomial>> powers(gens.size());
        auto gen_power = [&](size_t i, int e) -> const Polynomial& {
            auto& cache = powers[i];
            if (cache.empty())
                cache.push_back(Polynomial::constant(R.vars(), 1));
            while (static_cast<int>(cache.size()) <= e)
                cache.push_back(cache.back() * gens[i].poly);
            return cache[e];
        };
        std::vector<Polynomial> expansions;
        expansions.reserve(candidate_exps.size());
        for (auto& e : candidate_exps) {
            Polynomial p = Polynomial::constant(R.vars(), 1);
            for (size_t i = 0; i < gens.size(); ++i)
                if (e[i] > 0)
                    p *= gen_power(i, e[i]);
            expansions.push_back(std::move(p));
        }

        detail::Eliminator elim(candidate_exps.size());
        for (size_t j = 0; j < expansions.size(); ++j) {
            std::vector<Rational> unit(candidate_exps.size(), Rational(0));
            unit[j] = 1;
            elim.insert(expansions[j], std::move(unit));
        }

        Polynomial residual = R;
        elim.reduce(residual, solution);
        if (!residual.is_zero())
            throw NotInSubring("polynomial is not in the subring generated by the given set");

        // Underdetermined solutions that differ in the linear part are a
        // caller bug (generators not algebraically independent here).
        for (auto& nc : elim.null_combos())
            for (size_t j = 0; j < candidate_exps.size(); ++j)
                if (nc[j] != 0 && linear_slot(candidate_exps[j]))
                    throw AmbiguousExpression(
                        "underdetermined expression with varying linear part");

        for (size_t j = 0; j < candidate_exps.size(); ++j)
            result.add_term(candidate_exps[j], solution[j]);
        Polynomial back = expand_expression(result, gens);
        if (!(back == R))
            throw Error("internal error: expression round-trip failed");
        return result;
    }

    for (size_t j = 0; j < candidate_exps.size(); ++j)
        result.add_term(candidate_exps[j], solution[j]);
    return result;
}

}  // namespace ghs
