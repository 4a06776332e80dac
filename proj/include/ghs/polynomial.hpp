#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ghs {

// An ordered variable namespace. Polynomials over different namespaces never
// mix; restriction maps are the only bridge between them.
struct VarSet {
    std::vector<std::string> names;

    int index_of(std::string_view name) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name)
                return static_cast<int>(i);
        return -1;
    }
    size_t size() const { return names.size(); }
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(VarSet{std::move(names)});
}

// x1, x2, ..., xn
inline VarSetPtr make_vars(const std::string& prefix, int count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (int i = 1; i <= count; ++i)
        names.push_back(prefix + std::to_string(i));
    return make_vars(std::move(names));
}

inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || (a && b && a->names == b->names);
}

inline void require_same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    if (!same_vars(a, b))
        throw NamespaceMismatch("variable namespaces differ");
}

// Product of variables to positive powers; no zero exponents stored.
struct Monomial {
    // (variable index, exponent), strictly increasing in the index.
    std::vector<std::pair<int, int>> factors;

    int degree() const {
        int d = 0;
        for (auto& [v, e] : factors)
            d += e;
        return d;
    }

    int exponent_of(int var) const {
        for (auto& [v, e] : factors)
            if (v == var)
                return e;
        return 0;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.factors.reserve(factors.size() + o.factors.size());
        size_t i = 0, j = 0;
        while (i < factors.size() && j < o.factors.size()) {
            if (factors[i].first < o.factors[j].first)
                r.factors.push_back(factors[i++]);
            else if (factors[i].first > o.factors[j].first)
                r.factors.push_back(o.factors[j++]);
            else {
                r.factors.emplace_back(factors[i].first, factors[i].second + o.factors[j].second);
                ++i, ++j;
            }
        }
        for (; i < factors.size(); ++i)
            r.factors.push_back(factors[i]);
        for (; j < o.factors.size(); ++j)
            r.factors.push_back(o.factors[j]);
        return r;
    }

    bool operator==(const Monomial&) const = default;
};

// Graded lexicographic: degree first, then variable-wise comparison. The map's
// last entry is the leading term.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        // lex on the exponent sequence (earlier variable, larger exponent = larger)
        size_t i = 0, j = 0;
        while (i < a.factors.size() && j < b.factors.size()) {
            if (a.factors[i].first != b.factors[j].first)
                // the one holding the earlier variable is lex-larger
                return a.factors[i].first > b.factors[j].first;
            if (a.factors[i].second != b.factors[j].second)
                return a.factors[i].second < b.factors[j].second;
            ++i, ++j;
        }
        return i == a.factors.size() && j != b.factors.size();
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    explicit Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {}

    static Polynomial zero(VarSetPtr vars) { return Polynomial(std::move(vars)); }

    static Polynomial constant(VarSetPtr vars, Rational c) {
        Polynomial p(std::move(vars));
        if (c != 0)
            p.terms_[Monomial{}] = std::move(c);
        return p;
    }

    static Polynomial variable(VarSetPtr vars, int index) {
        if (index < 0 || static_cast<size_t>(index) >= vars->size())
            throw UnassignedVariable("variable index out of range");
        Polynomial p(std::move(vars));
        p.terms_[Monomial{{{index, 1}}}] = 1;
        return p;
    }

    static Polynomial variable(const VarSetPtr& vars, std::string_view name) {
        int idx = vars->index_of(name);
        if (idx < 0)
            throw UnassignedVariable("unknown variable '" + std::string(name) + "'");
        return variable(vars, idx);
    }

    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {  // -1 for the zero polynomial
        return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
    }

    std::optional<int> homogeneous_degree() const {
        if (terms_.empty())
            return std::nullopt;
        int d = terms_.begin()->first.degree();
        if (terms_.rbegin()->first.degree() != d)
            return std::nullopt;
        return d;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Monomial{}); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_vars(vars_, o.vars_);
        for (auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        require_same_vars(vars_, o.vars_);
        for (auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r(a.vars_);
        for (auto& [m, c] : a.terms_)
            r.terms_[m] = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_vars(a.vars_, b.vars_);
        Polynomial r(a.vars_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_)
                r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Rational& c, const Polynomial& a) {
        Polynomial r(a.vars_);
        if (c == 0)
            return r;
        for (auto& [m, coef] : a.terms_)
            r.terms_[m] = c * coef;
        return r;
    }

    bool operator==(const Polynomial& o) const {
        return same_vars(vars_, o.vars_) && terms_ == o.terms_;
    }

    // Partial derivative; used for exact Jacobian rank checks.
    Polynomial partial(int var) const {
        Polynomial r(vars_);
        for (auto& [m, c] : terms_) {
            int e = m.exponent_of(var);
            if (e == 0)
                continue;
            Monomial d;
            for (auto& [v, k] : m.factors) {
                if (v == var) {
                    if (k > 1)
                        d.factors.emplace_back(v, k - 1);
                } else {
                    d.factors.emplace_back(v, k);
                }
            }
            r.add_term(d, c * e);
        }
        return r;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != vars_->size())
            throw UnassignedVariable("evaluation point has wrong dimension");
        Rational total = 0;
        for (auto& [m, c] : terms_) {
            Rational t = c;
            for (auto& [v, e] : m.factors) {
                Rational p = point[v];
                for (int k = 0; k < e; ++k)
                    t *= p;
            }
            total += t;
        }
        return total;
    }

    // Same polynomial over a (super-)namespace; `map[i]` is the index of old
    // variable i in the target namespace.
    Polynomial relabel(VarSetPtr target, const std::vector<int>& map) const {
        Polynomial r(std::move(target));
        for (auto& [m, c] : terms_) {
            Monomial t;
            for (auto& [v, e] : m.factors)
                t.factors.emplace_back(map[v], e);
            std::sort(t.factors.begin(), t.factors.end());
            r.add_term(t, c);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0)
                    a = -a;
            }
            first = false;
            bool need_coeff = (a != 1) || m.factors.empty();
            if (need_coeff)
                os << to_string(a);
            for (size_t i = 0; i < m.factors.size(); ++i) {
                if (need_coeff || i > 0)
                    os << "*";
                os << vars_->names[m.factors[i].first];
                if (m.factors[i].second > 1)
                    os << "^" << m.factors[i].second;
            }
        }
        return os.str();
    }

private:
    VarSetPtr vars_;
    TermMap terms_;
};

namespace detail {

// Monomials in up to 16 variables with exponents < 16 pack into one u64
// nibble per variable; polynomials become key-sorted coefficient vectors.
// Every solve and substitution the pipeline produces fits this shape.
using PackedPoly = std::vector<std::pair<uint64_t, Rational>>;

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

// a -= f * b, both key-sorted
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

}  // namespace detail

inline Polynomial pow(const Polynomial& p, int k) {
    if (k < 0)
        throw Error("negative polynomial power");
    Polynomial result = Polynomial::constant(p.vars(), 1);
    Polynomial base = p;
    while (k > 0) {
        if (k & 1)
            result *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return result;
}

// A linear substitution sending each source variable to a homogeneous linear
// polynomial (possibly zero) over the target namespace.
struct LinearSubstitution {
    VarSetPtr source;
    VarSetPtr target;
    std::vector<Polynomial> images;  // one per source variable

    static LinearSubstitution make(VarSetPtr source, VarSetPtr target,
                                   std::vector<Polynomial> images) {
        if (images.size() != source->size())
            throw UnassignedVariable("substitution must assign every source variable");
        for (auto& im : images) {
            require_same_vars(im.vars(), target);
            if (!im.is_zero() && (im.degree() != 1 || im.constant_term() != 0))
                throw Error("substitution image must be linear with zero constant term");
        }
        return LinearSubstitution{std::move(source), std::move(target), std::move(images)};
    }
};

inline Polynomial substitute_linear(const Polynomial& p, const LinearSubstitution& sub) {
    require_same_vars(p.vars(), sub.source);

    if (detail::packable(sub.target->size(), p.degree())) {
        std::vector<std::vector<detail::PackedPoly>> powers(sub.images.size());
        auto image_power = [&](int var, int exp) -> const detail::PackedPoly& {
            auto& cache = powers[var];
            if (cache.empty()) {
                cache.push_back({{0, Rational(1)}});
                cache.push_back(detail::pack_poly(sub.images[var]));
            }
            while (static_cast<int>(cache.size()) <= exp)
                cache.push_back(detail::packed_mul(cache.back(), cache[1]));
            return cache[exp];
        };
        detail::PackedPoly acc;
        for (auto& [m, c] : p.terms()) {
            detail::PackedPoly term = {{0, c}};
            for (auto& [v, e] : m.factors) {
                term = detail::packed_mul(term, image_power(v, e));
                if (term.empty())
                    break;
            }
            detail::packed_axpy(acc, Rational(-1), term);
        }
        return detail::unpack_poly(acc, sub.target);
    }

    // powers of each image, grown on demand
    std::vector<std::vector<Polynomial>> powers(sub.images.size());
    auto image_power = [&](int var, int exp) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty())
            cache.push_back(Polynomial::constant(sub.target, 1));
        while (static_cast<int>(cache.size()) <= exp)
            cache.push_back(cache.back() * sub.images[var]);
        return cache[exp];
    };
    Polynomial result(sub.target);
    for (auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(sub.target, c);
        for (auto& [v, e] : m.factors) {
            term *= image_power(v, e);
            if (term.is_zero())
                break;
        }
        result += term;
    }
    return result;
}

}  // namespace ghs
