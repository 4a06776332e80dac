#pragma once

#include "errors.hpp"
#include "genexpr.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

#include <array>
#include <string>
#include <vector>

namespace ghs {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };

struct SimpleType {
    Family family;
    int rank = 0;
    bool operator==(const SimpleType&) const = default;
};

inline std::string to_string(const SimpleType& t) {
    switch (t.family) {
        case Family::A: return "A" + std::to_string(t.rank);
        case Family::B: return "B" + std::to_string(t.rank);
        case Family::C: return "C" + std::to_string(t.rank);
        case Family::D: return "D" + std::to_string(t.rank);
        case Family::G2: return "G2";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
    }
    return "?";
}

inline SimpleType parse_simple_type(std::string_view s) {
    auto num = [&](size_t from) -> int {
        if (from >= s.size())
            throw ParseError("missing rank in type '" + std::string(s) + "'", from);
        int r = 0;
        for (size_t i = from; i < s.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("bad type '" + std::string(s) + "'", i);
            r = r * 10 + (s[i] - '0');
        }
        return r;
    };
    if (s.empty())
        throw ParseError("empty type", 0);
    switch (s[0]) {
        case 'A': return {Family::A, num(1)};
        case 'B': return {Family::B, num(1)};
        case 'C': return {Family::C, num(1)};
        case 'D': return {Family::D, num(1)};
        case 'G':
            if (s == "G2") return {Family::G2, 2};
            break;
        case 'F':
            if (s == "F4") return {Family::F4, 4};
            break;
        case 'E':
            if (s == "E6") return {Family::E6, 6};
            if (s == "E7") return {Family::E7, 7};
            if (s == "E8") return {Family::E8, 8};
            break;
    }
    throw ParseError("bad type '" + std::string(s) + "'", 0);
}

inline bool is_exceptional(const SimpleType& t) {
    return t.family == Family::G2 || t.family == Family::F4 || t.family == Family::E6 ||
           t.family == Family::E7 || t.family == Family::E8;
}

// Bounds for a simple summand of a fixed-point algebra. Low ranks are allowed
// where the uniform formulas produce the right data (B1 = C1 = A1 exponents,
// D2 = A1+A1, D3 = A3).
inline void validate_summand(const SimpleType& t) {
    int n = t.rank;
    bool ok = false;
    switch (t.family) {
        case Family::A: ok = n >= 1; break;
        case Family::B: ok = n >= 1; break;
        case Family::C: ok = n >= 1; break;
        case Family::D: ok = n >= 2; break;
        case Family::G2: ok = n == 2; break;
        case Family::F4: ok = n == 4; break;
        case Family::E6: ok = n == 6; break;
        case Family::E7: ok = n == 7; break;
        case Family::E8: ok = n == 8; break;
    }
    if (!ok)
        throw Unsupported("invalid rank for " + to_string(t));
}

// Bounds for an ambient simple group. C2 is accepted (Sp(2) rows need it).
inline void validate_ambient(const SimpleType& t) {
    validate_summand(t);
    int n = t.rank;
    if (t.family == Family::B && n < 2)
        throw Unsupported("ambient B requires rank >= 2");
    if (t.family == Family::C && n < 2)
        throw Unsupported("ambient C requires rank >= 2");
    if (t.family == Family::D && n < 4)
        throw Unsupported("ambient D requires rank >= 4");
}

inline int dimension(const SimpleType& t) {
    int n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 2);
        case Family::B:
        case Family::C: return n * (2 * n + 1);
        case Family::D: return n * (2 * n - 1);
        case Family::G2: return 14;
        case Family::F4: return 52;
        case Family::E6: return 78;
        case Family::E7: return 133;
        case Family::E8: return 248;
    }
    return 0;
}

struct ExponentMultiset {
    // (exponent, multiplicity), sorted by exponent
    std::vector<std::pair<int, int>> entries;

    int multiplicity(int k) const {
        for (auto& [e, m] : entries)
            if (e == k)
                return m;
        return 0;
    }
    int rank() const {
        int r = 0;
        for (auto& [e, m] : entries)
            r += m;
        return r;
    }
    std::vector<int> expanded() const {
        std::vector<int> out;
        for (auto& [e, m] : entries)
            for (int i = 0; i < m; ++i)
                out.push_back(e);
        return out;
    }
    void add(int k, int m = 1) {
        for (auto& [e, mm] : entries)
            if (e == k) {
                mm += m;
                return;
            }
        entries.emplace_back(k, m);
        std::sort(entries.begin(), entries.end());
    }
};

inline ExponentMultiset exponents(const SimpleType& t) {
    validate_summand(t);
    ExponentMultiset out;
    int n = t.rank;
    switch (t.family) {
        case Family::A:
            for (int k = 2; k <= n + 1; ++k)
                out.add(k);
            break;
        case Family::B:
        case Family::C:
            for (int k = 2; k <= 2 * n; k += 2)
                out.add(k);
            break;
        case Family::D:
            for (int k = 2; k <= 2 * n - 2; k += 2)
                out.add(k);
            out.add(n);
            break;
        case Family::G2:
            for (int k : {2, 6})
                out.add(k);
            break;
        case Family::F4:
            for (int k : {2, 6, 8, 12})
                out.add(k);
            break;
        case Family::E6:
            for (int k : {2, 5, 6, 8, 9, 12})
                out.add(k);
            break;
        case Family::E7:
            for (int k : {2, 6, 8, 10, 12, 14, 18})
                out.add(k);
            break;
        case Family::E8:
            for (int k : {2, 8, 12, 14, 18, 20, 24, 30})
                out.add(k);
            break;
    }
    return out;
}

struct GeneratorSet {
    VarSetPtr vars;
    std::vector<Generator> gens;
};

enum class GeneratorVariant { standard, takeuchi };

namespace detail {

inline Polynomial power_sum(const VarSetPtr& vs, int k, int count) {
    Polynomial p = Polynomial::zero(vs);
    for (int i = 0; i < count; ++i)
        p += pow(Polynomial::variable(vs, i), k);
    return p;
}

inline GeneratorSet classical_full_generators(const SimpleType& t) {
    GeneratorSet out;
    int n = t.rank;
    switch (t.family) {
        case Family::A: {
            out.vars = make_vars("x", n + 1);
            for (int k = 2; k <= n + 1; ++k)
                out.gens.push_back({"P" + std::to_string(k), k, power_sum(out.vars, k, n + 1)});
            break;
        }
        case Family::B:
        case Family::C: {
            out.vars = make_vars("x", n);
            for (int k = 2; k <= 2 * n; k += 2)
                out.gens.push_back({"P" + std::to_string(k), k, power_sum(out.vars, k, n)});
            break;
        }
        case Family::D: {
            out.vars = make_vars("x", n);
            for (int k = 2; k <= 2 * n - 2; k += 2)
                out.gens.push_back({"P" + std::to_string(k), k, power_sum(out.vars, k, n)});
            Polynomial pf = Polynomial::constant(out.vars, 1);
            for (int i = 0; i < n; ++i)
                pf *= Polynomial::variable(out.vars, i);
            out.gens.push_back({"Pf", n, pf});
            break;
        }
        default:
            throw Unsupported("not a classical type");
    }
    return out;
}

inline GeneratorSet g2_generators() {
    GeneratorSet out;
    out.vars = make_vars("x", 3);
    for (int k : {2, 6})
        out.gens.push_back(
            {"P" + std::to_string(k), k, Rational(2) * power_sum(out.vars, k, 3)});
    return out;
}

inline GeneratorSet f4_generators() {
    GeneratorSet out;
    out.vars = make_vars("x", 4);
    for (int k : {2, 6, 8, 12}) {
        Polynomial p = Polynomial::zero(out.vars);
        for (int i = 0; i < 4; ++i)
            for (int s : {1, -1})
                p += pow(Rational(s) * Polynomial::variable(out.vars, i), k);
        for (int mask = 0; mask < 16; ++mask) {
            Polynomial form = Polynomial::zero(out.vars);
            for (int i = 0; i < 4; ++i)
                form += Rational((mask >> i) & 1 ? -1 : 1, 2) *
                        Polynomial::variable(out.vars, i);
            p += pow(form, k);
        }
        out.gens.push_back({"P" + std::to_string(k), k, p});
    }
    return out;
}

inline GeneratorSet e6_standard_generators() {
    GeneratorSet out;
    std::vector<std::string> names;
    for (int i = 1; i <= 6; ++i)
        names.push_back("x" + std::to_string(i));
    names.push_back("eps");
    out.vars = make_vars(names);
    Polynomial eps = Polynomial::variable(out.vars, 6);
    for (int k : {2, 5, 6, 8, 9, 12}) {
        Polynomial p = Polynomial::zero(out.vars);
        for (int i = 0; i < 6; ++i) {
            Polynomial xi = Polynomial::variable(out.vars, i);
            p += pow(xi + eps, k) + pow(xi - eps, k);
        }
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                p += pow(-Polynomial::variable(out.vars, i) - Polynomial::variable(out.vars, j),
                         k);
        out.gens.push_back({"P" + std::to_string(k), k, p});
    }
    return out;
}

inline GeneratorSet e6_takeuchi_generators() {
    GeneratorSet out;
    out.vars = make_vars("x", 6);
    Polynomial s = Polynomial::zero(out.vars);
    for (int i = 0; i < 6; ++i)
        s += Polynomial::variable(out.vars, i);
    std::vector<Polynomial> forms;
    for (int i = 0; i < 6; ++i)
        forms.push_back(Polynomial::variable(out.vars, i) + Rational(1, 2) * s);
    for (int i = 0; i < 6; ++i)
        forms.push_back(Polynomial::variable(out.vars, i) - Rational(2, 3) * s);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            forms.push_back(-Polynomial::variable(out.vars, i) -
                            Polynomial::variable(out.vars, j) + Rational(1, 2) * s);
    for (int k : {2, 5, 6, 8, 9, 12}) {
        Polynomial p = Polynomial::zero(out.vars);
        for (auto& f : forms)
            p += pow(f, k);
        out.gens.push_back({"I" + std::to_string(k), k, Rational(1, 2) * p});
    }
    return out;
}

}  // namespace detail

// The printed generator sets of the Weyl-invariant polynomial algebras, in
// the full ambient coordinates (A_n keeps all n+1 variables, G2 all three,
// E6 carries eps alongside x1..x6).
inline GeneratorSet invariant_generators(const SimpleType& t,
                                         GeneratorVariant variant = GeneratorVariant::standard) {
    validate_summand(t);
    if (variant == GeneratorVariant::takeuchi) {
        if (t.family != Family::E6)
            throw Unsupported("Takeuchi-form generators exist only for E6");
        return detail::e6_takeuchi_generators();
    }
    switch (t.family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::D:
            return detail::classical_full_generators(t);
        case Family::G2:
            return detail::g2_generators();
        case Family::F4:
            return detail::f4_generators();
        case Family::E6:
            return detail::e6_standard_generators();
        case Family::E7:
        case Family::E8:
            throw Unsupported("invariant generators for " + to_string(t) +
                              " are not available");
    }
    throw Unsupported("unreachable");
}

// Generator sets in reduced coordinates for use as restriction targets: types
// with a sum-zero relation keep only the free variables, with the last
// coordinate folded in as minus the sum. This makes membership in the
// invariant subring an honest statement about formal polynomials.
inline GeneratorSet summand_generators(const SimpleType& t) {
    validate_summand(t);
    GeneratorSet out;
    int n = t.rank;
    switch (t.family) {
        case Family::A: {
            out.vars = make_vars("y", n);
            Polynomial s = Polynomial::zero(out.vars);
            for (int i = 0; i < n; ++i)
                s += Polynomial::variable(out.vars, i);
            for (int k = 2; k <= n + 1; ++k) {
                Polynomial p = pow(-s, k);
                for (int i = 0; i < n; ++i)
                    p += pow(Polynomial::variable(out.vars, i), k);
                out.gens.push_back({"Q" + std::to_string(k), k, p});
            }
            break;
        }
        case Family::B:
        case Family::C: {
            out.vars = make_vars("y", n);
            for (int k = 2; k <= 2 * n; k += 2)
                out.gens.push_back(
                    {"Q" + std::to_string(k), k, detail::power_sum(out.vars, k, n)});
            break;
        }
        case Family::D: {
            out.vars = make_vars("y", n);
            for (int k = 2; k <= 2 * n - 2; k += 2)
                out.gens.push_back(
                    {"Q" + std::to_string(k), k, detail::power_sum(out.vars, k, n)});
            Polynomial pf = Polynomial::constant(out.vars, 1);
            for (int i = 0; i < n; ++i)
                pf *= Polynomial::variable(out.vars, i);
            out.gens.push_back({"Pf", n, pf});
            break;
        }
        case Family::G2: {
            out.vars = make_vars("y", 2);
            Polynomial s = Polynomial::variable(out.vars, 0) + Polynomial::variable(out.vars, 1);
            for (int k : {2, 6}) {
                Polynomial p = pow(Polynomial::variable(out.vars, 0), k) +
                               pow(Polynomial::variable(out.vars, 1), k) + pow(-s, k);
                out.gens.push_back({"Q" + std::to_string(k), k, Rational(2) * p});
            }
            break;
        }
        case Family::F4: {
            GeneratorSet full = detail::f4_generators();
            out.vars = make_vars("y", 4);
            std::vector<int> id = {0, 1, 2, 3};
            for (auto& g : full.gens)
                out.gens.push_back(
                    {"Q" + std::to_string(g.weight), g.weight, g.poly.relabel(out.vars, id)});
            break;
        }
        default:
            throw Unsupported("no summand generator set for " + to_string(t));
    }
    return out;
}

struct CoordinateFrame {
    VarSetPtr vars;
    Mat rows;  // rows H_0, H_1, ...; entry (i, j) = value of variable j on H_i
};

namespace detail {

inline CoordinateFrame zero_frame(VarSetPtr vars, int nrows) {
    CoordinateFrame f;
    f.vars = std::move(vars);
    f.rows.assign(nrows, Vec(f.vars->size(), Rational(0)));
    return f;
}

}  // namespace detail

// Kac-basis coordinate matrices. category 1: inner automorphisms (extended
// diagram); category 2: standard outer automorphisms (A_{2r}, A_{2r-1},
// D_{r+1}, E6); category 3: the cubic twist of D4.
inline CoordinateFrame kac_basis_matrix(const SimpleType& t, int category) {
    validate_ambient(t);
    int n = t.rank;
    auto zero = [](VarSetPtr vars, int nrows) { return detail::zero_frame(std::move(vars), nrows); };

    if (category == 1) {
        switch (t.family) {
            case Family::A: {
                auto f = zero(make_vars("x", n + 1), n + 1);
                for (int i = 1; i <= n; ++i)
                    f.rows[i][i - 1] += 1;  // p_ii = 1
                for (int i = 1; i <= n + 1; ++i)
                    f.rows[i - 1][i - 1] += -1;  // p_{i-1,i} = -1
                f.rows[0][n] += 1;  // p_{0,n+1} = 1
                return f;
            }
            case Family::B: {
                auto f = zero(make_vars("x", n), n + 1);
                for (int i = 1; i <= n - 1; ++i)
                    f.rows[i][i - 1] += 1;
                for (int i = 1; i <= n; ++i)
                    f.rows[i - 1][i - 1] += -1;
                f.rows[0][1] += -1;  // p_02 = -1
                f.rows[n][n - 1] += 2;  // p_nn = 2
                return f;
            }
            case Family::C: {
                auto f = zero(make_vars("x", n), n + 1);
                for (int i = 1; i <= n; ++i)
                    f.rows[i][i - 1] += 1;
                for (int i = 1; i <= n; ++i)
                    f.rows[i - 1][i - 1] += -1;
                return f;
            }
            case Family::D: {
                auto f = zero(make_vars("x", n), n + 1);
                for (int i = 1; i <= n; ++i)
                    f.rows[i][i - 1] += 1;
                for (int i = 1; i <= n; ++i)
                    f.rows[i - 1][i - 1] += -1;
                f.rows[0][1] += -1;     // p_02 = -1
                f.rows[n][n - 2] += 1;  // p_{n,n-1} = 1
                return f;
            }
            case Family::G2: {
                auto f = zero(make_vars("x", 3), 3);
                f.rows[0] = {-1, 0, 1};
                f.rows[1] = {1, -2, 1};
                f.rows[2] = {0, 1, -1};
                return f;
            }
            case Family::F4: {
                auto f = zero(make_vars("x", 4), 5);
                f.rows[0] = {-1, -1, 0, 0};
                f.rows[1] = {1, -1, -1, -1};
                f.rows[2] = {0, 0, 0, 2};
                f.rows[3] = {0, 0, 1, -1};
                f.rows[4] = {0, 1, -1, 0};
                return f;
            }
            case Family::E6: {
                std::vector<std::string> names;
                for (int i = 1; i <= 6; ++i)
                    names.push_back("x" + std::to_string(i));
                names.push_back("eps");
                auto f = zero(make_vars(names), 7);
                for (int i = 1; i <= 5; ++i)
                    f.rows[i][i - 1] = 1;
                for (int i = 2; i <= 6; ++i)
                    f.rows[i - 1][i - 1] += -1;
                for (int i = 1; i <= 3; ++i)
                    f.rows[6][i - 1] = Rational(-1, 2);
                for (int i = 4; i <= 6; ++i)
                    f.rows[6][i - 1] = Rational(1, 2);
                f.rows[0][6] = -1;             // p_{0,eps} = -1
                f.rows[6][6] = Rational(1, 2); // p_{6,eps} = 1/2
                return f;
            }
            case Family::E7: {
                auto f = zero(make_vars("x", 8), 8);
                for (int i = 1; i <= 6; ++i)
                    f.rows[i][i - 1] = 1;
                for (int i = 2; i <= 7; ++i)
                    f.rows[i - 1][i - 1] += -1;
                for (int i = 1; i <= 4; ++i)
                    f.rows[7][i - 1] = Rational(-1, 2);
                for (int i = 5; i <= 8; ++i)
                    f.rows[7][i - 1] = Rational(1, 2);
                f.rows[0][6] = 1;   // p_07 = 1
                f.rows[0][7] = -1;  // p_08 = -1
                return f;
            }
            case Family::E8: {
                auto f = zero(make_vars("x", 8), 9);
                for (int i = 1; i <= 7; ++i)
                    f.rows[i][i - 1] = 1;
                for (int i = 1; i <= 8; ++i)
                    f.rows[i - 1][i - 1] += -1;
                // affine row: -1/3 in columns 1..5, 2/3 in columns 6..8
                for (int i = 1; i <= 5; ++i)
                    f.rows[8][i - 1] = Rational(-1, 3);
                for (int i = 6; i <= 8; ++i)
                    f.rows[8][i - 1] = Rational(2, 3);
                return f;
            }
        }
    }

    if (category == 2) {
        switch (t.family) {
            case Family::A: {
                if (n % 2 == 0) {
                    // A_{2r}, r >= 1
                    int r = n / 2;
                    auto f = zero(make_vars("x", 2 * r + 1), r + 1);
                    for (int i = 1; i <= r - 1; ++i)
                        f.rows[i][i - 1] += 1;
                    for (int i = 1; i <= r; ++i)
                        f.rows[i - 1][i - 1] += -1;
                    f.rows[r][r - 1] += 2;  // p_rr = 2
                    // column r+1 vanishes; mirror columns x_{2r+2-j} = -x_j
                    for (int i = 0; i <= r; ++i)
                        for (int j = 1; j <= r; ++j)
                            f.rows[i][2 * r + 1 - j] = -f.rows[i][j - 1];
                    return f;
                }
                // A_{2r-1}, r >= 2
                int r = (n + 1) / 2;
                if (r < 2)
                    throw Unsupported("A1 has no category-2 frame");
                auto f = zero(make_vars("x", 2 * r), r + 1);
                for (int i = 1; i <= r; ++i)
                    f.rows[i][i - 1] += 1;
                for (int i = 1; i <= r; ++i)
                    f.rows[i - 1][i - 1] += -1;
                f.rows[0][1] += -1;  // p_02 = -1
                // mirror columns x_{2r+1-j} = -x_j
                for (int i = 0; i <= r; ++i)
                    for (int j = 1; j <= r; ++j)
                        f.rows[i][2 * r - j] = -f.rows[i][j - 1];
                return f;
            }
            case Family::D: {
                // D_{r+1}, r >= 2 (x_{r+1} vanishes on the fixed subspace)
                int r = n - 1;
                auto f = zero(make_vars("x", r + 1), r + 1);
                for (int i = 1; i <= r - 1; ++i) {
                    f.rows[i][i - 1] = 1;
                    f.rows[i][i] = -1;
                }
                f.rows[0][0] = -2;      // p_01 = -2
                f.rows[r][r - 1] = 2;   // p_rr = 2
                return f;
            }
            case Family::E6: {
                auto f = zero(make_vars("a", 6), 5);
                f.rows[0] = {-2, -1, -1, -1, -1, 0};
                f.rows[1] = {1, -1, 0, 0, 1, -1};
                f.rows[2] = {0, 1, -1, 1, -1, 0};
                f.rows[3] = {0, 0, 1, -1, 0, 0};
                f.rows[4] = {0, 0, 0, 1, 1, 1};
                return f;
            }
            default:
                break;
        }
        throw Unsupported("no category-2 frame for " + to_string(t));
    }

    if (category == 3) {
        if (t.family == Family::D && n == 4) {
            auto f = detail::zero_frame(make_vars("x", 4), 3);
            f.rows[0] = {-2, -1, -1, 0};
            f.rows[1] = {1, -1, 2, 0};
            f.rows[2] = {0, 1, -1, 0};
            return f;
        }
        throw Unsupported("category 3 exists only for D4");
    }

    throw Unsupported("bad category " + std::to_string(category));
}

// Ambient invariant generators in the coordinates of the matching Kac frame.
// Category 2 for E6 uses the Takeuchi forms reduced to the fixed subspace:
// b_i = -a_{7-i} and c_{ij} = -a_i + a_{7-j} there, so for even k
//   I_k = sum_i a_i^k + sum over the six orbit representatives c^k,
// and odd power sums cancel to zero identically.
inline GeneratorSet ambient_generators(const SimpleType& t, int category) {
    if (category == 2 && t.family == Family::E6) {
        GeneratorSet out;
        out.vars = make_vars("a", 6);
        const std::array<std::pair<int, int>, 6> reps = {
            {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}}};
        for (int k : {2, 5, 6, 8, 9, 12}) {
            Polynomial p = Polynomial::zero(out.vars);
            if (k % 2 == 0) {
                for (int i = 0; i < 6; ++i)
                    p += pow(Polynomial::variable(out.vars, i), k);
                for (auto& [i, j] : reps)
                    p += pow(-Polynomial::variable(out.vars, i - 1) +
                                 Polynomial::variable(out.vars, 7 - j - 1),
                             k);
            }
            out.gens.push_back({"I" + std::to_string(k), k, p});
        }
        return out;
    }
    return invariant_generators(t, GeneratorVariant::standard);
}

}  // namespace ghs
