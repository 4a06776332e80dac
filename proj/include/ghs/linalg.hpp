#pragma once

#include "rational.hpp"

#include <numeric>
#include <vector>

namespace ghs {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Reduced row echelon form with deterministic pivoting (first nonzero entry,
// scanning columns left to right).
struct Rref {
    Mat m;
    std::vector<int> pivot_cols;  // one per nonzero row
};

inline Rref rref(Mat a) {
    Rref out;
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[r], a[p]);
        Rational inv = a[r][c];
        for (size_t j = c; j < cols; ++j)
            a[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        out.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    a.resize(r);
    out.m = std::move(a);
    return out;
}

inline int rank(const Mat& a) {
    return static_cast<int>(rref(a).pivot_cols.size());
}

// Basis of { x : a x = 0 }, free variables set to 1 in column order.
inline std::vector<Vec> nullspace(const Mat& a) {
    size_t cols = a.empty() ? 0 : a[0].size();
    Rref rr = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : rr.pivot_cols)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vec v(cols, Rational(0));
        v[f] = 1;
        for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Scale to coprime integers with positive leading entry.
inline void make_primitive(Vec& v) {
    Integer lcm_den = 1;
    for (auto& x : v)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    Integer gcd_num = 0;
    for (auto& x : v)
        gcd_num = boost::multiprecision::gcd(gcd_num, numerator(x) * (lcm_den / denominator(x)));
    if (gcd_num == 0)
        return;
    Rational scale(lcm_den, gcd_num);
    if (scale < 0)
        scale = -scale;
    for (auto& x : v)
        x *= scale;
    for (auto& x : v) {
        if (x == 0)
            continue;
        if (x < 0)
            for (auto& y : v)
                y = -y;
        break;
    }
}

inline Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
    Vec r(m.size(), Rational(0));
    for (size_t i = 0; i < m.size(); ++i)
        r[i] = dot(m[i], v);
    return r;
}

}  // namespace ghs
