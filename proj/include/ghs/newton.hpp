#pragma once

// Symbolic assembly of the Cartan differentials for classical spaces. When
// every summand block is a signed coordinate matching with block-constant
// torus forms, the restricted power sums reduce, via the binomial theorem and
// Newton's identities, to exact recurrences in the generator symbols. No
// multivariate expansion takes place, which is what makes the rank-8 spaces
// (weight-16 expressions in eight variables) immediate.

#include "embedding.hpp"
#include "genexpr.hpp"
#include "liedata.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ghs {
namespace detail {

// Power sums and elementary symmetric functions of one block's virtual
// coordinates, expressed in the global even-generator basis.
//   A_l:    l+1 sum-zero coordinates, generators Q_2..Q_{l+1}
//   B/C_l:  squares z_i = y_i^2, generators Q_2..Q_{2l} are p_1(z)..p_l(z)
//   D_l:    as B/C but e_l(z) = Pf^2 and Q_{2l} is absent
class BlockPowerSums {
public:
    BlockPowerSums(const SimpleType& type, GeneratorBasisPtr basis, int gen_offset)
        : type_(type), basis_(std::move(basis)), off_(gen_offset) {}

    bool supported() const {
        switch (type_.family) {
            case Family::A:
            case Family::B:
            case Family::C:
            case Family::D: return true;
            default: return false;
        }
    }

    int virtual_count() const {
        return type_.family == Family::A ? type_.rank + 1 : type_.rank;
    }

    // \hat p_j = sum over the virtual coordinates of the j-th power;
    // nullopt when it is not in the invariant ring (odd j on B/C/D blocks).
    std::optional<GeneratorExpression> power_sum(int j) {
        if (j == 0)
            return Rational(virtual_count()) * GeneratorExpression::one(basis_);
        if (type_.family == Family::A)
            return a_power(j);
        if (j % 2 == 1)
            return std::nullopt;
        return z_power(j / 2);
    }

    // e_m of the virtual coordinates (A blocks) -- used by Pfaffian assembly
    GeneratorExpression a_elementary(int m) {
        if (type_.family != Family::A)
            throw Error("a_elementary on a non-A block");
        return a_elem(m);
    }

private:
    GeneratorExpression a_power(int j) {
        auto it = pc_.find(j);
        if (it != pc_.end())
            return it->second;
        int N = virtual_count();
        GeneratorExpression r(basis_);
        if (j == 1) {
            // sum-zero
        } else if (j <= N) {
            r = GeneratorExpression::single(basis_, off_ + (j - 2));
        } else {
            for (int m = 2; m <= N; ++m) {
                Rational sign = (m % 2 == 1) ? 1 : -1;
                r += sign * (a_elem(m) * a_power(j - m));
            }
        }
        pc_.emplace(j, r);
        return r;
    }

    GeneratorExpression a_elem(int m) {
        auto it = ec_.find(m);
        if (it != ec_.end())
            return it->second;
        int N = virtual_count();
        GeneratorExpression r(basis_);
        if (m == 0) {
            r = GeneratorExpression::one(basis_);
        } else if (m == 1 || m > N) {
            // e_1 = p_1 = 0; e_m = 0 beyond the variable count
        } else {
            for (int i = 2; i <= m; ++i) {
                Rational sign = (i % 2 == 1) ? 1 : -1;
                r += sign * (a_elem(m - i) * a_power(i));
            }
            r = Rational(1, m) * r;
        }
        ec_.emplace(m, r);
        return r;
    }

    // p_m of the squared coordinates
    GeneratorExpression z_power(int m) {
        auto it = pc_.find(m);
        if (it != pc_.end())
            return it->second;
        int N = type_.rank;
        bool dtype = (type_.family == Family::D);
        int top = dtype ? N - 1 : N;  // generators cover p_1(z)..p_top(z)
        GeneratorExpression r(basis_);
        if (m <= top) {
            r = GeneratorExpression::single(basis_, off_ + (m - 1));
        } else if (dtype && m == N) {
            // p_N = sum_{i<N} (-1)^{i-1} e_i p_{N-i} + (-1)^{N-1} N e_N
            for (int i = 1; i < N; ++i) {
                Rational sign = (i % 2 == 1) ? 1 : -1;
                r += sign * (z_elem(i) * z_power(N - i));
            }
            r += Rational((N % 2 == 1) ? N : -N) * z_elem(N);
        } else {
            for (int i = 1; i <= N; ++i) {
                Rational sign = (i % 2 == 1) ? 1 : -1;
                r += sign * (z_elem(i) * z_power(m - i));
            }
        }
        pc_.emplace(m, r);
        return r;
    }

    GeneratorExpression z_elem(int m) {
        auto it = ec_.find(m);
        if (it != ec_.end())
            return it->second;
        int N = type_.rank;
        bool dtype = (type_.family == Family::D);
        GeneratorExpression r(basis_);
        if (m == 0) {
            r = GeneratorExpression::one(basis_);
        } else if (m > N) {
            // zero
        } else if (dtype && m == N) {
            // e_N(z) = (y_1...y_N)^2 = Pf^2
            r = GeneratorExpression::single(basis_, off_ + (N - 1), 2);
        } else {
            for (int i = 1; i <= m; ++i) {
                Rational sign = (i % 2 == 1) ? 1 : -1;
                r += sign * (z_elem(m - i) * z_power(i));
            }
            r = Rational(1, m) * r;
        }
        ec_.emplace(m, r);
        return r;
    }

    SimpleType type_;
    GeneratorBasisPtr basis_;
    int off_;
    std::map<int, GeneratorExpression> pc_, ec_;
};

struct CoordHit {
    int block = -1;    // -1: no block touches this coordinate
    int virt = 0;      // 1-based virtual coordinate within the block
    int sign = 0;      // +1 or -1
};

// classify a block-local image as 0, +-(single variable), or the sum-zero fold
inline std::optional<CoordHit> classify_image(const Polynomial& im, int block,
                                              int virtuals, bool a_type) {
    if (im.is_zero())
        return CoordHit{};
    if (im.degree() != 1)
        return std::nullopt;
    size_t nvars = im.vars()->size();
    if (im.terms().size() == 1) {
        auto& [m, c] = *im.terms().begin();
        if (c != 1 && c != -1)
            return std::nullopt;
        return CoordHit{block, m.factors[0].first + 1, c == 1 ? 1 : -1};
    }
    // the fold -(y_1 + ... + y_l) is the last virtual coordinate of an A block
    if (a_type && im.terms().size() == nvars) {
        for (auto& [m, c] : im.terms())
            if (c != -1)
                return std::nullopt;
        return CoordHit{block, virtuals, 1};
    }
    return std::nullopt;
}

}  // namespace detail

// Builds every differential d(z_k) symbolically. Returns nullopt when the
// space is outside the signed-matching shape (exceptional blocks, the special
// A3 fixtures); callers then fall back to the generic expansion route.
inline std::optional<std::vector<GeneratorExpression>> symbolic_differentials(
    const SpaceDescriptor& space, const Restriction& r, const GeneratorSet& amb,
    const GeneratorBasisPtr& evens) {
    using detail::BlockPowerSums;
    using detail::CoordHit;

    switch (space.ambient.family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::D: break;
        default: return std::nullopt;
    }
    if (space.category != 1 && space.category != 2)
        return std::nullopt;

    std::vector<BlockPowerSums> sums;
    for (size_t k = 0; k < r.blocks.size(); ++k) {
        SimpleType t = space.summands[k].type;
        BlockPowerSums b(t, evens, r.block_gen_offset[k]);
        if (!b.supported())
            return std::nullopt;
        sums.push_back(std::move(b));
    }

    size_t width = r.rho.source->size();
    std::vector<CoordHit> hits(width);
    for (size_t j = 0; j < width; ++j) {
        CoordHit found{};
        for (size_t k = 0; k < r.blocks.size(); ++k) {
            bool a_type = space.summands[k].type.family == Family::A;
            auto h = detail::classify_image(r.blocks[k].images[j], static_cast<int>(k),
                                            sums[k].virtual_count(), a_type);
            if (!h)
                return std::nullopt;
            if (h->block >= 0) {
                if (found.block >= 0)
                    return std::nullopt;  // two blocks on one coordinate
                found = *h;
            }
        }
        hits[j] = found;
    }

    // torus forms per coordinate, as expressions in the weight-1 generators
    std::vector<GeneratorExpression> tau(width, GeneratorExpression(evens));
    for (size_t j = 0; j < width; ++j)
        for (int t = 0; t < r.torus_rank; ++t)
            if (r.torus_vectors[t][j] != 0)
                tau[j] += r.torus_vectors[t][j] *
                          GeneratorExpression::single(evens, t);

    auto expr_pow = [&](const GeneratorExpression& base, int e) {
        GeneratorExpression out = GeneratorExpression::one(evens);
        for (int i = 0; i < e; ++i)
            out = out * base;
        return out;
    };

    std::vector<GeneratorExpression> result;
    for (auto& g : amb.gens) {
        if (g.name == "Pf") {
            // product of all coordinate images
            GeneratorExpression pf = GeneratorExpression::one(evens);
            bool zero = false;
            for (size_t j = 0; j < width && !zero; ++j)
                if (hits[j].block < 0 && tau[j].is_zero())
                    zero = true;
            if (zero) {
                result.push_back(GeneratorExpression(evens));
                continue;
            }
            // per-block factors
            bool bad = false;
            for (size_t k = 0; k < r.blocks.size() && !bad; ++k) {
                int N = sums[k].virtual_count();
                std::vector<int> seen(N + 1, 0);
                int sign_prod = 1;
                bool uniform_tau = true;
                GeneratorExpression gamma(evens);
                bool first = true;
                for (size_t j = 0; j < width; ++j) {
                    if (hits[j].block != static_cast<int>(k))
                        continue;
                    seen[hits[j].virt]++;
                    sign_prod *= hits[j].sign;
                    if (first) {
                        gamma = tau[j];
                        first = false;
                    } else if (!(gamma.terms() == tau[j].terms())) {
                        uniform_tau = false;
                    }
                }
                for (int v = 1; v <= N; ++v)
                    if (seen[v] != 1) {
                        bad = true;
                        break;
                    }
                if (bad)
                    break;
                Family tf = space.summands[k].type.family;
                if (gamma.is_zero()) {
                    GeneratorExpression factor(evens);
                    if (tf == Family::D) {
                        factor = GeneratorExpression::single(
                            evens, r.block_gen_offset[k] + space.summands[k].type.rank - 1);
                    } else if (tf == Family::A) {
                        factor = sums[k].a_elementary(N);
                    } else {
                        bad = true;  // product of B/C coordinates is not invariant
                        break;
                    }
                    pf = pf * (Rational(sign_prod) * factor);
                } else {
                    // product of (sign*y + gamma): needs an A block with a
                    // uniform sign; prod = sum_m sigma^m e_m gamma^{N-m}
                    int sigma = 0;
                    bool sign_uniform = true;
                    for (size_t j = 0; j < width; ++j)
                        if (hits[j].block == static_cast<int>(k)) {
                            if (sigma == 0)
                                sigma = hits[j].sign;
                            else if (hits[j].sign != sigma)
                                sign_uniform = false;
                        }
                    if (tf != Family::A || !uniform_tau || !sign_uniform) {
                        bad = true;
                        break;
                    }
                    GeneratorExpression factor(evens);
                    for (int m = 0; m <= N; ++m) {
                        Rational c = (sigma == -1 && m % 2 == 1) ? -1 : 1;
                        factor += c * (sums[k].a_elementary(m) * expr_pow(gamma, N - m));
                    }
                    pf = pf * factor;
                }
            }
            if (bad)
                return std::nullopt;
            for (size_t j = 0; j < width; ++j)
                if (hits[j].block < 0)
                    pf = pf * tau[j];
            result.push_back(std::move(pf));
            continue;
        }

        // power sum of weight k: per coordinate (s y + tau)^k expanded
        int kw = g.weight;
        GeneratorExpression expr(evens);
        for (size_t j = 0; j < width; ++j)
            expr += expr_pow(tau[j], kw);  // the m = 0 binomial term
        // binomial coefficients
        std::vector<Rational> binom(kw + 1);
        binom[0] = 1;
        for (int m = 1; m <= kw; ++m)
            binom[m] = binom[m - 1] * (kw - m + 1) / m;
        for (size_t k = 0; k < r.blocks.size(); ++k) {
            int N = sums[k].virtual_count();
            for (int m = 1; m <= kw; ++m) {
                // c(v) = sum over coordinates hitting (block, v) of s^m tau^{k-m}
                std::vector<GeneratorExpression> cv(N + 1, GeneratorExpression(evens));
                for (size_t j = 0; j < width; ++j) {
                    if (hits[j].block != static_cast<int>(k))
                        continue;
                    Rational s = (hits[j].sign == -1 && m % 2 == 1) ? -1 : 1;
                    cv[hits[j].virt] += s * expr_pow(tau[j], kw - m);
                }
                bool uniform = true;
                for (int v = 2; v <= N; ++v)
                    if (!(cv[v].terms() == cv[1].terms()))
                        uniform = false;
                if (!uniform)
                    return std::nullopt;
                if (cv[1].is_zero())
                    continue;
                auto pj = sums[k].power_sum(m);
                if (!pj)
                    return std::nullopt;
                expr += binom[m] * (cv[1] * (*pj));
            }
        }
        result.push_back(std::move(expr));
    }
    return result;
}

}  // namespace ghs
