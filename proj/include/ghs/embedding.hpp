#pragma once

#include "errors.hpp"
#include "genexpr.hpp"
#include "liedata.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

namespace ghs {

// A simple summand of the fixed-point algebra, located by the Kac-basis rows
// spanning its Cartan subalgebra.
struct SummandSpec {
    SimpleType type;
    std::vector<int> basis_indices;
    bool operator==(const SummandSpec&) const = default;
};

struct SpaceDescriptor {
    SimpleType ambient;
    int category = 1;  // 1 inner, 2 outer, 3 the cubic twist of D4
    int torus_rank = 0;
    std::vector<SummandSpec> summands;
    std::string name;      // display label
    std::string kac_type;  // inert metadata
};

// One summand's share of the restriction: the images of every ambient
// coordinate inside the summand's own (reduced) coordinates, together with
// the generator set used on that summand.
struct Block {
    GeneratorSet target;
    std::vector<Polynomial> images;  // indexed by ambient variable
};

namespace detail {

inline std::vector<int> sorted_indices(const SummandSpec& s) {
    std::vector<int> v = s.basis_indices;
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw UnlistedCase("duplicate basis indices");
    return v;
}

inline bool is_consecutive(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] != v[i - 1] + 1)
            return false;
    return !v.empty();
}

inline bool is_range(const std::vector<int>& v, int lo, int hi) {
    if (static_cast<int>(v.size()) != hi - lo + 1)
        return false;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != lo + i)
            return false;
    return true;
}

inline Block fresh_block(const SimpleType& summand, size_t ambient_vars) {
    Block b;
    b.target = summand_generators(summand);
    b.images.assign(ambient_vars, Polynomial::zero(b.target.vars));
    return b;
}

inline Polynomial tvar(const Block& b, int i) {  // 1-based target variable
    return Polynomial::variable(b.target.vars, i - 1);
}

// minus the sum of all target variables: the folded-in last coordinate of a
// reduced sum-zero type
inline Polynomial tlast(const Block& b) {
    Polynomial s = Polynomial::zero(b.target.vars);
    for (size_t i = 0; i < b.target.vars->size(); ++i)
        s += Polynomial::variable(b.target.vars, static_cast<int>(i));
    return -s;
}

// x_{p+1} -> y_1, ..., x_{p+l} -> y_l, x_{p+l+1} -> -(y_1+...+y_l)
inline void a_chain_images(Block& b, int p, int l) {
    for (int i = 1; i <= l; ++i)
        b.images[p + i - 1] = tvar(b, i);
    b.images[p + l] = tlast(b);
}

// x_l -> -y_1, ..., x_1 -> -y_l   (descending match ending at the affine end)
inline void descending_images(Block& b, int l) {
    for (int i = 1; i <= l; ++i)
        b.images[l - i] = -tvar(b, i);
}

// x_{m-l+1} -> y_1, ..., x_m -> y_l
inline void ascending_images(Block& b, int m, int l) {
    for (int i = 1; i <= l; ++i)
        b.images[m - l + i - 1] = tvar(b, i);
}

// The A3 spanned by both fork nodes; restriction carried by the proof's
// quartic (y_i + y_j) pattern. `signs` fixes the orientation per coordinate.
inline void special_a3_images(Block& b, const std::array<int, 3>& coords,
                              const std::array<int, 3>& signs) {
    // pair sums in induced A3 coordinates
    Polynomial y1 = tvar(b, 1), y2 = tvar(b, 2), y3 = tvar(b, 3);
    std::array<Polynomial, 3> sums = {y1 + y2, y1 + y3, y2 + y3};
    for (int i = 0; i < 3; ++i)
        b.images[coords[i]] = Rational(signs[i]) * sums[i];
}

inline bool is_special_a3(const SimpleType& type, const std::vector<int>& idx, int lo0,
                          int lo1, int lo2) {
    return type.family == Family::A && type.rank == 3 &&
           idx == std::vector<int>{lo0, lo1, lo2};
}

// Conjugation by a diagram automorphism: an A-chain using the affine fork node
// 0 instead of node 1 is moved onto {1,...,m}; in D_n likewise at the right
// fork. Applied only to A-type summands.
inline std::vector<int> canonicalize_chain(const SimpleType& ambient, int category,
                                           const SimpleType& type, std::vector<int> idx) {
    if (type.family != Family::A || idx.empty())
        return idx;
    bool fork_left = false;
    switch (ambient.family) {
        case Family::B:
        case Family::D: fork_left = (category == 1); break;
        case Family::A: fork_left = (category == 2 && ambient.rank % 2 == 1); break;
        default: break;
    }
    if (fork_left && idx[0] == 0 && idx.size() >= 2 && idx[1] == 2 &&
        is_consecutive({idx.begin() + 1, idx.end()})) {
        idx[0] = 1;
        std::sort(idx.begin(), idx.end());
    }
    if (ambient.family == Family::D && category == 1) {
        int n = ambient.rank;
        if (idx.back() == n && idx.size() >= 2 && idx[idx.size() - 2] == n - 2 &&
            is_consecutive({idx.begin(), idx.end() - 1}))
            idx.back() = n - 1;
    }
    return idx;
}

}  // namespace detail

// The signed coordinate matchings of the classical case tables.
inline Block classical_restriction(const SimpleType& ambient, int category,
                                   const SummandSpec& s) {
    using namespace detail;
    validate_ambient(ambient);
    validate_summand(s.type);
    int n = ambient.rank;
    int l = s.type.rank;
    auto idx = sorted_indices(s);
    if (static_cast<int>(idx.size()) != l)
        throw UnlistedCase("basis index count differs from the summand rank");

    auto unlisted = [&] {
        return UnlistedCase("no case for " + to_string(s.type) + " inside " +
                            to_string(ambient) + " cat " + std::to_string(category) +
                            " with the given basis");
    };

    if (category == 1) {
        size_t width = (ambient.family == Family::A) ? n + 1 : n;
        switch (ambient.family) {
            case Family::A: {
                if (s.type.family != Family::A)
                    throw unlisted();
                if (!is_consecutive(idx) || idx[0] < 1 || idx.back() > n)
                    throw unlisted();
                Block b = fresh_block(s.type, width);
                a_chain_images(b, idx[0] - 1, l);
                return b;
            }
            case Family::B:
            case Family::C:
            case Family::D: {
                // the special A3 sits on both fork nodes
                if (ambient.family != Family::C && is_special_a3(s.type, idx, 0, 1, 2)) {
                    Block b = fresh_block(s.type, width);
                    special_a3_images(b, {0, 1, 2}, {+1, -1, -1});
                    return b;
                }
                if (ambient.family == Family::D && s.type.family == Family::A &&
                    s.type.rank == 3 && idx == std::vector<int>{n - 2, n - 1, n}) {
                    Block b = fresh_block(s.type, width);
                    // x_n -> y1+y2, x_{n-1} -> -(y1+y3), x_{n-2} -> y2+y3
                    special_a3_images(b, {static_cast<int>(n - 1), static_cast<int>(n - 2),
                                          static_cast<int>(n - 3)},
                                      {+1, -1, +1});
                    return b;
                }
                auto cidx = canonicalize_chain(ambient, category, s.type, idx);
                if (s.type.family == Family::A) {
                    if (!is_consecutive(cidx) || cidx[0] < 1 || cidx.back() > n - 1)
                        throw unlisted();
                    Block b = fresh_block(s.type, width);
                    a_chain_images(b, cidx[0] - 1, l);
                    return b;
                }
                bool left_ok = false, right_ok = false;
                switch (ambient.family) {
                    case Family::B:
                        left_ok = (s.type.family == Family::D);
                        right_ok = (s.type.family == Family::B);
                        break;
                    case Family::C:
                        left_ok = right_ok = (s.type.family == Family::C);
                        break;
                    case Family::D:
                        left_ok = right_ok = (s.type.family == Family::D);
                        break;
                    default: break;
                }
                if (left_ok && is_range(idx, 0, l - 1)) {
                    Block b = fresh_block(s.type, width);
                    descending_images(b, l);
                    return b;
                }
                if (right_ok && is_range(idx, n - l + 1, n)) {
                    Block b = fresh_block(s.type, width);
                    ascending_images(b, n, l);
                    return b;
                }
                throw unlisted();
            }
            default:
                throw unlisted();  // exceptional ambients use exceptional_restriction
        }
    }

    if (category == 2 && ambient.family == Family::A && n % 2 == 0) {
        int r = n / 2;
        size_t width = 2 * r + 1;
        Block b = fresh_block(s.type, width);
        if (is_special_a3(s.type, idx, 0, 1, 2)) {
            special_a3_images(b, {0, 1, 2}, {-1, -1, -1});
        } else if (s.type.family == Family::B && is_range(idx, r - l + 1, r)) {
            ascending_images(b, r, l);
        } else if (s.type.family == Family::C && is_range(idx, 0, l - 1)) {
            descending_images(b, l);
        } else if (s.type.family == Family::A) {
            auto cidx = canonicalize_chain(ambient, category, s.type, idx);
            if (!is_consecutive(cidx) || cidx[0] < 1 || cidx.back() > r - 1)
                throw unlisted();
            a_chain_images(b, cidx[0] - 1, l);
        } else {
            throw unlisted();
        }
        // the fixed subspace satisfies x_{r+1} = 0 and x_{2r+2-j} = -x_j
        b.images[r] = Polynomial::zero(b.target.vars);
        for (int j = 1; j <= r; ++j)
            b.images[2 * r + 2 - j - 1] = -b.images[j - 1];
        return b;
    }

    if (category == 2 && ambient.family == Family::A && n % 2 == 1) {
        int r = (n + 1) / 2;
        size_t width = 2 * r;
        Block b = fresh_block(s.type, width);
        if (s.type.family == Family::D && is_range(idx, 0, l - 1)) {
            descending_images(b, l);
        } else if (s.type.family == Family::C && is_range(idx, r - l + 1, r)) {
            ascending_images(b, r, l);
        } else if (s.type.family == Family::A) {
            auto cidx = canonicalize_chain(ambient, category, s.type, idx);
            if (!is_consecutive(cidx) || cidx[0] < 1 || cidx.back() > r - 1)
                throw unlisted();
            a_chain_images(b, cidx[0] - 1, l);
        } else {
            throw unlisted();
        }
        // mirror relation x_{2r+1-j} = -x_j on the fixed subspace
        for (int j = 1; j <= r; ++j)
            b.images[2 * r + 1 - j - 1] = -b.images[j - 1];
        return b;
    }

    if (category == 2 && ambient.family == Family::D) {
        int r = n - 1;
        size_t width = r + 1;
        Block b = fresh_block(s.type, width);
        if (s.type.family == Family::B && is_range(idx, 0, l - 1)) {
            descending_images(b, l);
        } else if (s.type.family == Family::B && is_range(idx, r - l + 1, r)) {
            ascending_images(b, r, l);
        } else if (s.type.family == Family::A) {
            auto cidx = canonicalize_chain(ambient, category, s.type, idx);
            if (!is_consecutive(cidx) || cidx[0] < 1 || cidx.back() > r - 1)
                throw unlisted();
            a_chain_images(b, cidx[0] - 1, l);
        } else {
            throw unlisted();
        }
        b.images[r] = Polynomial::zero(b.target.vars);  // x_{r+1} = 0
        return b;
    }

    throw unlisted();
}

// The explicit maps of the exceptional-ambient cases, plus the cubic-twist
// D4 ⊃ G2 identification.
inline Block exceptional_restriction(const SimpleType& ambient, int category,
                                     const SummandSpec& s) {
    using namespace detail;
    auto idx = sorted_indices(s);
    auto unlisted = [&] {
        return UnlistedCase("no exceptional case for " + to_string(s.type) + " inside " +
                            to_string(ambient) + " cat " + std::to_string(category));
    };

    auto lin = [](const Block& b, std::initializer_list<std::pair<int, Rational>> combo) {
        Polynomial p = Polynomial::zero(b.target.vars);
        for (auto& [i, c] : combo)
            p += c * Polynomial::variable(b.target.vars, i - 1);
        return p;
    };

    if (ambient.family == Family::G2 && category == 1) {
        if (s.type.family != Family::A || s.type.rank != 1 || idx.size() != 1)
            throw unlisted();
        Block b = fresh_block(s.type, 3);
        Polynomial y = tvar(b, 1);
        switch (idx[0]) {
            case 0: b.images = {-y, Polynomial::zero(b.target.vars), y}; break;
            case 1: b.images = {y, Rational(-2) * y, y}; break;
            case 2: b.images = {Polynomial::zero(b.target.vars), y, -y}; break;
            default: throw unlisted();
        }
        return b;
    }

    if (ambient.family == Family::F4 && category == 1) {
        if (s.type == SimpleType{Family::B, 3} && idx == std::vector<int>{2, 3, 4}) {
            Block b = fresh_block(s.type, 4);
            b.images = {Polynomial::zero(b.target.vars), tvar(b, 1), tvar(b, 2), tvar(b, 3)};
            return b;
        }
        if (s.type == SimpleType{Family::B, 4} && idx == std::vector<int>{0, 2, 3, 4}) {
            Block b = fresh_block(s.type, 4);
            b.images = {-tvar(b, 1), tvar(b, 2), tvar(b, 3), tvar(b, 4)};
            return b;
        }
        if (s.type == SimpleType{Family::C, 3} && idx == std::vector<int>{1, 2, 3}) {
            Block b = fresh_block(s.type, 4);
            b.images = {tvar(b, 1), -tvar(b, 1), tvar(b, 2) + tvar(b, 3),
                        tvar(b, 2) - tvar(b, 3)};
            return b;
        }
        if (s.type == SimpleType{Family::A, 1} && idx == std::vector<int>{0}) {
            Block b = fresh_block(s.type, 4);
            Polynomial y = tvar(b, 1);
            b.images = {-y, -y, Polynomial::zero(b.target.vars),
                        Polynomial::zero(b.target.vars)};
            return b;
        }
        throw unlisted();
    }

    if (ambient.family == Family::E6 && category == 1) {
        // ambient variables x1..x6, eps
        if (s.type == SimpleType{Family::A, 4} && idx == std::vector<int>{1, 2, 3, 4}) {
            Block b = fresh_block(s.type, 7);
            a_chain_images(b, 0, 4);  // x1..x4 -> y1..y4, x5 -> -(sum)
            return b;
        }
        if (s.type == SimpleType{Family::A, 5} && idx == std::vector<int>{1, 2, 3, 4, 5}) {
            Block b = fresh_block(s.type, 7);
            a_chain_images(b, 0, 5);  // x1..x5 -> y1..y5, x6 -> -(sum)
            return b;
        }
        if (s.type == SimpleType{Family::D, 4} && idx == std::vector<int>{2, 3, 4, 6}) {
            Block b = fresh_block(s.type, 7);
            Polynomial y = Polynomial::zero(b.target.vars);
            for (int i = 1; i <= 4; ++i)
                y += Rational(1, 4) * tvar(b, i);
            b.images[0] = -y;
            for (int i = 1; i <= 4; ++i)
                b.images[i] = tvar(b, i) - y;
            b.images[5] = y;
            b.images[6] = y;
            return b;
        }
        if (s.type == SimpleType{Family::D, 5} && idx == std::vector<int>{1, 2, 3, 4, 6}) {
            Block b = fresh_block(s.type, 7);
            Polynomial y = Polynomial::zero(b.target.vars);
            for (int i = 1; i <= 5; ++i)
                y += Rational(1, 4) * tvar(b, i);
            for (int i = 1; i <= 5; ++i)
                b.images[i - 1] = tvar(b, i) - y;
            b.images[5] = y;
            b.images[6] = y;
            return b;
        }
        if (s.type == SimpleType{Family::A, 1} && idx == std::vector<int>{0}) {
            Block b = fresh_block(s.type, 7);
            b.images[6] = -tvar(b, 1);  // the affine direction is the eps-axis
            return b;
        }
        throw unlisted();
    }

    if (ambient.family == Family::E6 && category == 2) {
        if (s.type == SimpleType{Family::B, 3} && idx == std::vector<int>{2, 3, 4}) {
            Block b = fresh_block(s.type, 6);
            Rational h(1, 2);
            b.images = {Polynomial::zero(b.target.vars),
                        lin(b, {{1, h}, {2, h}, {3, h}}),
                        lin(b, {{1, h}, {2, h}, {3, -h}}),
                        lin(b, {{1, h}, {2, -h}, {3, h}}),
                        lin(b, {{1, h}, {2, -h}, {3, -h}}),
                        tvar(b, 1)};
            return b;
        }
        if (s.type == SimpleType{Family::C, 3} && idx == std::vector<int>{1, 2, 3}) {
            Block b = fresh_block(s.type, 6);
            b.images = {tvar(b, 1),  tvar(b, 2),  tvar(b, 3),
                        -tvar(b, 3), -tvar(b, 2), -tvar(b, 1)};
            return b;
        }
        if (s.type == SimpleType{Family::C, 4} && idx == std::vector<int>{0, 1, 2, 3}) {
            Block b = fresh_block(s.type, 6);
            Polynomial y1 = tvar(b, 1);
            b.images = {-y1 + tvar(b, 2), -y1 + tvar(b, 3), -y1 + tvar(b, 4),
                        -y1 - tvar(b, 4), -y1 - tvar(b, 3), -y1 - tvar(b, 2)};
            return b;
        }
        if (s.type == SimpleType{Family::F4, 4} && idx == std::vector<int>{1, 2, 3, 4}) {
            // No printed coordinate identification exists for this block. The
            // summand fills the whole fixed Cartan, and the restrictions of
            // I2, I6, I8, I12 have the invariant degrees of F4 and multiply
            // to |W(F4)|, so they serve as the generator set directly
            // (independence is asserted by the test suite).
            Block b;
            b.target.vars = make_vars("c", 4);
            CoordinateFrame f = kac_basis_matrix(ambient, 2);
            std::vector<Polynomial> images(6, Polynomial::zero(b.target.vars));
            for (int j = 0; j < 6; ++j)
                for (int i = 1; i <= 4; ++i)
                    images[j] += f.rows[i][j] * Polynomial::variable(b.target.vars, i - 1);
            auto amb = ambient_generators(ambient, 2);
            auto sub = LinearSubstitution::make(amb.vars, b.target.vars, images);
            for (auto& g : amb.gens) {
                if (g.weight % 2 == 1)
                    continue;  // odd invariants vanish on the fixed subspace
                b.target.gens.push_back(
                    {"Q" + std::to_string(g.weight), g.weight, substitute_linear(g.poly, sub)});
            }
            b.images = std::move(images);
            return b;
        }
        throw unlisted();
    }

    if (ambient.family == Family::D && ambient.rank == 4 && category == 3) {
        if (s.type == SimpleType{Family::G2, 2} && idx == std::vector<int>{1, 2}) {
            Block b = fresh_block(s.type, 4);
            Polynomial w1 = tvar(b, 1), w2 = tvar(b, 2);
            b.images = {w1, w1 + w2, -w2, Polynomial::zero(b.target.vars)};
            return b;
        }
        throw unlisted();
    }

    throw unlisted();
}

inline Block restriction_block(const SimpleType& ambient, int category,
                               const SummandSpec& s) {
    if (is_exceptional(ambient) || category == 3)
        return exceptional_restriction(ambient, category, s);
    return classical_restriction(ambient, category, s);
}

// The assembled restriction map of a space, with the generator data of the
// fixed-point subalgebra attached.
struct Restriction {
    LinearSubstitution rho;  // ambient coordinates -> H coordinates
    VarSetPtr h_vars;        // u1..ut, then per-summand variables
    std::vector<Generator> h_gens;  // torus coordinates first, weight 1
    int torus_rank = 0;

    // structural data, consumed by the symbolic differential assembly
    std::vector<Block> blocks;          // per summand, in local coordinates
    std::vector<int> block_var_offset;  // first h_vars index of each block
    std::vector<int> block_gen_offset;  // first h_gens index of each block
    std::vector<Vec> torus_vectors;     // ambient coordinates of the torus directions
};

namespace detail {

inline Mat hessian(const Polynomial& p) {
    size_t nv = p.vars()->size();
    Mat h(nv, Vec(nv, Rational(0)));
    for (size_t i = 0; i < nv; ++i) {
        Polynomial pi = p.partial(static_cast<int>(i));
        for (size_t j = i; j < nv; ++j) {
            Polynomial pij = pi.partial(static_cast<int>(j));
            h[i][j] = pij.constant_term();
            h[j][i] = h[i][j];
        }
    }
    return h;
}

}  // namespace detail

inline Restriction full_restriction(const SpaceDescriptor& space) {
    validate_ambient(space.ambient);
    CoordinateFrame frame = kac_basis_matrix(space.ambient, space.category);
    size_t width = frame.vars->size();

    std::vector<Block> blocks;
    std::vector<Vec> span_vecs;
    int summand_rank_total = 0;
    for (auto& s : space.summands) {
        blocks.push_back(restriction_block(space.ambient, space.category, s));
        summand_rank_total += s.type.rank;
        for (int i : s.basis_indices) {
            if (i < 0 || static_cast<size_t>(i) >= frame.rows.size())
                throw UnlistedCase("basis index out of range");
            span_vecs.push_back(frame.rows[i]);
        }
    }

    // torus directions: the metric-orthogonal complement of the summand span
    // inside the fixed Cartan (the bilinear form is the Hessian of P2)
    Rref cartan = rref(frame.rows);
    int cartan_dim = static_cast<int>(cartan.m.size());
    if (summand_rank_total + space.torus_rank > cartan_dim)
        throw RankMismatch("torus rank plus summand ranks exceeds the fixed Cartan");

    std::vector<Vec> torus_vecs;
    if (space.torus_rank > 0) {
        Mat metric = detail::hessian(ambient_generators(space.ambient, space.category)
                                         .gens.front()
                                         .poly);
        Mat constraints;
        for (auto& s : span_vecs) {
            Vec bs = mat_vec(metric, s);
            Vec row;
            for (auto& t : cartan.m)
                row.push_back(dot(t, bs));
            constraints.push_back(std::move(row));
        }
        if (constraints.empty())
            constraints.push_back(Vec(cartan.m.size(), Rational(0)));
        auto lambda_basis = nullspace(constraints);
        if (static_cast<int>(lambda_basis.size()) < space.torus_rank)
            throw RankMismatch("complement smaller than the requested torus rank");
        for (int t = 0; t < space.torus_rank; ++t) {
            Vec v(width, Rational(0));
            for (size_t a = 0; a < cartan.m.size(); ++a)
                for (size_t j = 0; j < width; ++j)
                    v[j] += lambda_basis[t][a] * cartan.m[a][j];
            make_primitive(v);
            torus_vecs.push_back(std::move(v));
        }
    }

    // combined H namespace
    std::vector<std::string> names;
    for (int t = 1; t <= space.torus_rank; ++t)
        names.push_back("u" + std::to_string(t));
    std::vector<std::vector<int>> relabel_maps;
    std::vector<int> var_offsets;
    for (size_t k = 0; k < blocks.size(); ++k) {
        std::vector<int> map;
        var_offsets.push_back(static_cast<int>(names.size()));
        for (auto& nm : blocks[k].target.vars->names) {
            map.push_back(static_cast<int>(names.size()));
            names.push_back("s" + std::to_string(k + 1) + "." + nm);
        }
        relabel_maps.push_back(std::move(map));
    }
    VarSetPtr h_vars = make_vars(names);

    std::vector<Polynomial> images(width, Polynomial::zero(h_vars));
    for (size_t j = 0; j < width; ++j) {
        for (int t = 0; t < space.torus_rank; ++t)
            images[j] += torus_vecs[t][j] * Polynomial::variable(h_vars, t);
        for (size_t k = 0; k < blocks.size(); ++k)
            images[j] += blocks[k].images[j].relabel(h_vars, relabel_maps[k]);
    }

    Restriction out;
    out.h_vars = h_vars;
    out.torus_rank = space.torus_rank;
    for (int t = 0; t < space.torus_rank; ++t)
        out.h_gens.push_back(
            {"u" + std::to_string(t + 1), 1, Polynomial::variable(h_vars, t)});
    for (size_t k = 0; k < blocks.size(); ++k) {
        out.block_gen_offset.push_back(static_cast<int>(out.h_gens.size()));
        for (auto& g : blocks[k].target.gens)
            out.h_gens.push_back({"s" + std::to_string(k + 1) + "." + g.name, g.weight,
                                  g.poly.relabel(h_vars, relabel_maps[k])});
    }
    out.rho = LinearSubstitution::make(frame.vars, h_vars, std::move(images));
    out.blocks = std::move(blocks);
    out.block_var_offset = std::move(var_offsets);
    out.torus_vectors = std::move(torus_vecs);
    return out;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

struct CatalogFamily {
    std::string name;       // parameterized label, e.g. "SU(2n)/Sp(n)"
    int nparams = 0;        // 0, 1 (n) or 2 (n, k)
    std::string constraint; // printed parameter constraint, if any
    bool symmetric = true;  // appears in the symmetric-space table
    bool cartan_available = true;
    std::function<bool(int, int)> valid;              // parameter admissibility
    std::function<int(int, int)> ambient_rank;
    std::function<SpaceDescriptor(int, int)> make;
    std::function<std::string(int, int)> display;     // concrete label
};

namespace detail {

inline std::vector<int> range_ints(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i)
        v.push_back(i);
    return v;
}

inline SummandSpec summand(Family f, int rank, std::vector<int> idx) {
    return SummandSpec{SimpleType{f, rank}, std::move(idx)};
}

}  // namespace detail

inline std::vector<CatalogFamily> catalog() {
    using detail::range_ints;
    using detail::summand;
    std::vector<CatalogFamily> fams;
    auto I = [](int v) { return std::to_string(v); };

    fams.push_back({"SU(2n+1)/SO(2n+1)", 1, "", true, true,
                    [](int n, int) { return n >= 1; },
                    [](int n, int) { return 2 * n; },
                    [](int n, int) {
                        SpaceDescriptor d{{Family::A, 2 * n}, 2, 0,
                                          {summand(Family::B, n, range_ints(1, n))}};
                        return d;
                    },
                    [I](int n, int) { return "SU(" + I(2 * n + 1) + ")/SO(" + I(2 * n + 1) + ")"; }});

    fams.push_back({"SU(2n)/SO(2n)", 1, "", true, true,
                    [](int n, int) { return n >= 2; },
                    [](int n, int) { return 2 * n - 1; },
                    [](int n, int) {
                        SpaceDescriptor d{{Family::A, 2 * n - 1}, 2, 0,
                                          {summand(Family::D, n, range_ints(0, n - 1))}};
                        return d;
                    },
                    [I](int n, int) { return "SU(" + I(2 * n) + ")/SO(" + I(2 * n) + ")"; }});

    fams.push_back({"SU(2n)/Sp(n)", 1, "", true, true,
                    [](int n, int) { return n >= 2; },
                    [](int n, int) { return 2 * n - 1; },
                    [](int n, int) {
                        SpaceDescriptor d{{Family::A, 2 * n - 1}, 2, 0,
                                          {summand(Family::C, n, range_ints(1, n))}};
                        return d;
                    },
                    [I](int n, int) { return "SU(" + I(2 * n) + ")/Sp(" + I(n) + ")"; }});

    fams.push_back({"U(n+1)/U(k)xU(n-k+1)", 2, "k <= (n+1)/2", true, true,
                    [](int n, int k) { return n >= 1 && k >= 1 && 2 * k <= n + 1; },
                    [](int n, int) { return n; },
                    [](int n, int k) {
                        SpaceDescriptor d{{Family::A, n}, 1, 1, {}};
                        if (k >= 2)
                            d.summands.push_back(summand(Family::A, k - 1, range_ints(1, k - 1)));
                        if (n - k >= 1)
                            d.summands.push_back(summand(Family::A, n - k, range_ints(k + 1, n)));
                        return d;
                    },
                    [I](int n, int k) {
                        return "U(" + I(n + 1) + ")/U(" + I(k) + ")xU(" + I(n - k + 1) + ")";
                    }});

    fams.push_back({"SO(2n+1)/SO(2)xSO(2n-1)", 1, "", true, true,
                    [](int n, int) { return n >= 2; },
                    [](int n, int) { return n; },
                    [](int n, int) {
                        SpaceDescriptor d{{Family::B, n}, 1, 1,
                                          {summand(Family::B, n - 1, range_ints(2, n))}};
                        return d;
                    },
                    [I](int n, int) {
                        return "SO(" + I(2 * n + 1) + ")/SO(2)xSO(" + I(2 * n - 1) + ")";
                    }});

    fams.push_back({"SO(2n+1)/SO(2k)xSO(2n+1-2k)", 2, "2 <= k <= (n+1)/2", true, true,
                    [](int n, int k) { return n >= 3 && k >= 2 && 2 * k <= n + 1; },
                    [](int n, int) { return n; },
                    [](int n, int k) {
                        SpaceDescriptor d{{Family::B, n}, 1, 0,
                                          {summand(Family::D, k, range_ints(0, k - 1))}};
                        if (n - k >= 1)
                            d.summands.push_back(summand(Family::B, n - k, range_ints(k + 1, n)));
                        return d;
                    },
                    [I](int n, int k) {
                        return "SO(" + I(2 * n + 1) + ")/SO(" + I(2 * k) + ")xSO(" +
                               I(2 * n + 1 - 2 * k) + ")";
                    }});

    fams.push_back({"SO(2n+1)/SO(2n)", 1, "", true, true,
                    [](int n, int) { return n >= 2; },
                    [](int n, int) { return n; },
                    [](int n, int) {
                        SpaceDescriptor d{{Family::B, n}, 1, 0,
                                          {summand(Family::D, n, range_ints(0, n - 1))}};
                        return d;
                    },
                    [I](int n, int) { return "SO(" + I(2 * n + 1) + ")/SO(" + I(2 * n) + ")"; }});

    fams.push_back({"Sp(n)/U(n)", 1, "", true, true,
                    [](int n, int) { return n >= 2; },
                    [](int n, int) { return n; },
                    [](int n, int) {
                        SpaceDescriptor d{{Family::C, n}, 1, 1,
                                          {summand(Family::A, n - 1, range_ints(1, n - 1))}};
                        return d;
                    },
                    [I](int n, int) { return "Sp(" + I(n) + ")/U(" + I(n) + ")"; }});

    fams.push_back({"Sp(n)/Sp(k)xSp(n-k)", 2, "k <= n/2", true, true,
                    [](int n, int k) { return n >= 2 && k >= 1 && 2 * k <= n; },
                    [](int n, int) { return n; },
                    [](int n, int k) {
                        SpaceDescriptor d{{Family::C, n}, 1, 0,
                                          {summand(Family::C, k, range_ints(0, k - 1)),
                                           summand(Family::C, n - k, range_ints(k + 1, n))}};
                        return d;
                    },
                    [I](int n, int k) {
                        return "Sp(" + I(n) + ")/Sp(" + I(k) + ")xSp(" + I(n - k) + ")";
                    }});

    fams.push_back({"SO(2n)/SO(2)xSO(2n-2)", 1, "", true, true,
                    [](int n, int) { return n >= 4; },
                    [](int n, int) { return n; },
                    [](int n, int) {
                        SpaceDescriptor d{{Family::D, n}, 1, 1,
                                          {summand(Family::D, n - 1, range_ints(2, n))}};
                        return d;
                    },
                    [I](int n, int) {
                        return "SO(" + I(2 * n) + ")/SO(2)xSO(" + I(2 * n - 2) + ")";
                    }});

    fams.push_back({"SO(2n)/SO(2k)xSO(2n-2k)", 2, "2 <= k <= n/2", true, true,
                    [](int n, int k) { return n >= 4 && k >= 2 && 2 * k <= n; },
                    [](int n, int) { return n; },
                    [](int n, int k) {
                        SpaceDescriptor d{{Family::D, n}, 1, 0,
                                          {summand(Family::D, k, range_ints(0, k - 1)),
                                           summand(Family::D, n - k, range_ints(k + 1, n))}};
                        return d;
                    },
                    [I](int n, int k) {
                        return "SO(" + I(2 * n) + ")/SO(" + I(2 * k) + ")xSO(" +
                               I(2 * n - 2 * k) + ")";
                    }});

    fams.push_back({"SO(2n)/SO(2k+1)xSO(2n-2k-1)", 2, "k <= (n-1)/2", true, true,
                    [](int n, int k) { return n >= 4 && k >= 1 && 2 * k <= n - 1; },
                    [](int n, int) { return n; },
                    [](int n, int k) {
                        SpaceDescriptor d{{Family::D, n}, 2, 0,
                                          {summand(Family::B, k, range_ints(0, k - 1)),
                                           summand(Family::B, n - k - 1,
                                                   range_ints(k + 1, n - 1))}};
                        return d;
                    },
                    [I](int n, int k) {
                        return "SO(" + I(2 * n) + ")/SO(" + I(2 * k + 1) + ")xSO(" +
                               I(2 * n - 2 * k - 1) + ")";
                    }});

    fams.push_back({"SO(2n)/SO(2n-1)", 1, "", true, true,
                    [](int n, int) { return n >= 4; },
                    [](int n, int) { return n; },
                    [](int n, int) {
                        SpaceDescriptor d{{Family::D, n}, 2, 0,
                                          {summand(Family::B, n - 1, range_ints(1, n - 1))}};
                        return d;
                    },
                    [I](int n, int) { return "SO(" + I(2 * n) + ")/SO(" + I(2 * n - 1) + ")"; }});

    fams.push_back({"SO(2n)/U(n)", 1, "", true, true,
                    [](int n, int) { return n >= 4; },
                    [](int n, int) { return n; },
                    [](int n, int) {
                        SpaceDescriptor d{{Family::D, n}, 1, 1,
                                          {summand(Family::A, n - 1, range_ints(1, n - 1))}};
                        return d;
                    },
                    [I](int n, int) { return "SO(" + I(2 * n) + ")/U(" + I(n) + ")"; }});

    auto fixed = [&](const std::string& name, bool cartan, SpaceDescriptor d, int rank,
                     bool symmetric = true) {
        d.name = name;
        fams.push_back({name, 0, "", symmetric, cartan,
                        [](int, int) { return true; },
                        [rank](int, int) { return rank; },
                        [d](int, int) { return d; },
                        [name](int, int) { return name; }});
    };

    fixed("G2/SO(4)", true,
          {{Family::G2, 2}, 1, 0, {summand(Family::A, 1, {0}), summand(Family::A, 1, {1})}},
          2);
    fixed("F4/SU(2)*Sp(3)", true,
          {{Family::F4, 4}, 1, 0, {summand(Family::A, 1, {0}), summand(Family::C, 3, {1, 2, 3})}},
          4);
    fixed("F4/Spin(9)", true,
          {{Family::F4, 4}, 1, 0, {summand(Family::B, 4, {0, 4, 3, 2})}}, 4);
    fixed("E6/PSp(4)", true,
          {{Family::E6, 6}, 2, 0, {summand(Family::C, 4, {0, 1, 2, 3})}}, 6);
    fixed("E6/F4", true, {{Family::E6, 6}, 2, 0, {summand(Family::F4, 4, {1, 2, 3, 4})}}, 6);
    fixed("E6/SU(2)*SU(6)", true,
          {{Family::E6, 6}, 1, 0,
           {summand(Family::A, 1, {0}), summand(Family::A, 5, {1, 2, 3, 4, 5})}},
          6);
    fixed("AdE6/T1*Spin(10)", true,
          {{Family::E6, 6}, 1, 1, {summand(Family::D, 5, {1, 2, 3, 4, 6})}}, 6);
    fixed("E7/SU*(8)", false, {{Family::E7, 7}, 1, 0, {summand(Family::A, 7, {1, 2, 3, 4, 5, 6, 7})}},
          7);
    fixed("E7/SU(2)*Spin(12)", false,
          {{Family::E7, 7}, 1, 0, {summand(Family::A, 1, {0}), summand(Family::D, 6, {2, 3, 4, 5, 6, 7})}},
          7);
    fixed("AdE7/T1*E6", false, {{Family::E7, 7}, 1, 1, {summand(Family::E6, 6, {1, 2, 3, 4, 5, 6})}},
          7);
    fixed("E8/SO(16)", false, {{Family::E8, 8}, 1, 0, {summand(Family::D, 8, {1, 2, 3, 4, 5, 6, 7, 8})}},
          8);
    fixed("E8/SU(2)*E7", false,
          {{Family::E8, 8}, 1, 0, {summand(Family::A, 1, {0}), summand(Family::E7, 7, {2, 3, 4, 5, 6, 7, 8})}},
          8);

    // generalised (non-symmetric) spaces exercised by the cross-checks
    fixed("D4/G2", true, {{Family::D, 4}, 3, 0, {summand(Family::G2, 2, {1, 2})}}, 4, false);
    fixed("F4/T1*Spin(7)", true,
          {{Family::F4, 4}, 1, 1, {summand(Family::B, 3, {2, 3, 4})}}, 4, false);
    fixed("E6/T2*SU(5)", true,
          {{Family::E6, 6}, 1, 2, {summand(Family::A, 4, {1, 2, 3, 4})}}, 6, false);
    fixed("E6/T2*Spin(8)", true,
          {{Family::E6, 6}, 1, 2, {summand(Family::D, 4, {2, 3, 4, 6})}}, 6, false);
    fixed("E6'/T1*Spin(7)", true,
          {{Family::E6, 6}, 2, 1, {summand(Family::B, 3, {2, 3, 4})}}, 6, false);
    fixed("E6'/T1*Sp(3)", true,
          {{Family::E6, 6}, 2, 1, {summand(Family::C, 3, {1, 2, 3})}}, 6, false);
    fixed("SO(9)/SU(4)*SU(2)", true,
          {{Family::B, 4}, 1, 0, {summand(Family::A, 3, {0, 2, 1}), summand(Family::B, 1, {4})}},
          4, false);
    fixed("SU(9)/SU(4)*T1", true,
          {{Family::A, 8}, 2, 1, {summand(Family::A, 3, {0, 2, 1})}}, 8, false);
    fixed("SO(10)/SU(4)*T2", true,
          {{Family::D, 5}, 1, 2, {summand(Family::A, 3, {3, 4, 5})}}, 5, false);

    return fams;
}

struct CatalogInstance {
    const CatalogFamily* family;
    int n = 0, k = 0;
    SpaceDescriptor space;
};

inline std::vector<CatalogInstance> instantiate_catalog(int max_rank,
                                                        bool symmetric_only = false) {
    std::vector<CatalogInstance> out;
    static const std::vector<CatalogFamily> fams = catalog();
    for (auto& f : fams) {
        if (symmetric_only && !f.symmetric)
            continue;
        if (f.nparams == 0) {
            if (f.ambient_rank(0, 0) <= max_rank) {
                CatalogInstance ci{&f, 0, 0, f.make(0, 0)};
                ci.space.name = f.display(0, 0);
                out.push_back(std::move(ci));
            }
            continue;
        }
        for (int n = 1; n <= 2 * max_rank + 2; ++n) {
            int kmax = (f.nparams == 2) ? n : 1;
            for (int k = 1; k <= kmax; ++k) {
                if (!f.valid(n, k) || f.ambient_rank(n, k) > max_rank)
                    continue;
                CatalogInstance ci{&f, n, k, f.make(n, k)};
                ci.space.name = f.display(n, k);
                out.push_back(std::move(ci));
            }
        }
    }
    return out;
}

}  // namespace ghs
