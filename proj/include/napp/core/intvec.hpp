#pragma once

#include "napp/core/rational.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace napp {

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;

inline long long checked_add(long long a, long long b)
{
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in lattice arithmetic");
    return r;
}

inline long long checked_mul(long long a, long long b)
{
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in lattice arithmetic");
    return r;
}

inline long long dot(const IVec& a, const IVec& b)
{
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

inline IVec add(const IVec& a, const IVec& b)
{
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = checked_add(a[i], b[i]);
    return r;
}

inline IVec sub(const IVec& a, const IVec& b)
{
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = checked_add(a[i], -b[i]);
    return r;
}

inline IVec scaled(const IVec& a, long long k)
{
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = checked_mul(a[i], k);
    return r;
}

inline bool is_zero(const IVec& a)
{
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

inline long long content(const IVec& a)
{
    long long g = 0;
    for (long long x : a)
        g = std::gcd(g, std::llabs(x));
    return g;
}

inline IVec primitive(const IVec& a)
{
    long long g = content(a);
    if (g == 0)
        throw std::invalid_argument("primitive of the zero vector");
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] / g;
    return r;
}

namespace detail {

inline __int128 small_det(const IMat& m, std::size_t n, unsigned used_cols, std::size_t row)
{
    if (row == n)
        return 1;
    __int128 s = 0;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (used_cols & (1u << j))
            continue;
        if (m[row][j] != 0)
            s += sign * static_cast<__int128>(m[row][j]) * small_det(m, n, used_cols | (1u << j), row + 1);
        sign = -sign;
    }
    return s;
}

} // namespace detail

inline Integer det(const IMat& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n <= 5) {
        bool small = true;
        for (const auto& r : m)
            for (long long x : r)
                if (x > (1LL << 18) || x < -(1LL << 18))
                    small = false;
        if (small) {
            __int128 v = detail::small_det(m, n, 0u, 0);
            if (v > static_cast<__int128>(LLONG_MAX) || v < static_cast<__int128>(LLONG_MIN))
                throw std::overflow_error("64-bit overflow in determinant");
            return Integer(static_cast<long>(v));
        }
    }
    // Bareiss fraction-free elimination.
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Integer(static_cast<long>(m[i][j]));
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Generalized cross product of d-1 vectors in Z^d: the vector u with
// <u, x> = det(rows..., x).
inline IVec cross(const IMat& rows, std::size_t d)
{
    IVec u(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        IMat minor;
        for (const auto& r : rows) {
            IVec row;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i)
                    row.push_back(r[j]);
            minor.push_back(row);
        }
        Integer c = det(minor);
        if (((rows.size() + i) & 1) != 0)
            c = -c;
        u[i] = to_ll(c);
    }
    return u;
}

inline std::size_t rank(const IMat& rows)
{
    if (rows.empty())
        return 0;
    std::vector<QVec> a;
    for (const auto& r : rows) {
        QVec q;
        for (long long x : r)
            q.emplace_back(static_cast<long>(x));
        a.push_back(q);
    }
    std::size_t rk = 0, cols = a[0].size();
    for (std::size_t c = 0; c < cols && rk < a.size(); ++c) {
        std::size_t p = rk;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[rk], a[p]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rk || a[i][c] == 0)
                continue;
            Rational f = a[i][c] / a[rk][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[rk][j];
        }
        ++rk;
    }
    return rk;
}

// Extended gcd: returns g >= 0 and x, y with a x + b y = g.
inline long long ext_gcd(long long a, long long b, long long& x, long long& y)
{
    long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        long long q = a / b;
        long long t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

inline IMat identity_matrix(std::size_t d)
{
    IMat m(d, IVec(d, 0));
    for (std::size_t i = 0; i < d; ++i)
        m[i][i] = 1;
    return m;
}

inline IVec mat_vec(const IMat& m, const IVec& v)
{
    IVec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        r[i] = dot(m[i], v);
    return r;
}

// Unimodular U with U u = e_1, for primitive u.
inline IMat unimodular_completion(const IVec& u)
{
    const std::size_t d = u.size();
    IMat U = identity_matrix(d);
    IVec v = u;
    for (std::size_t i = d - 1; i >= 1; --i) {
        long long a = v[i - 1], b = v[i];
        if (b == 0)
            continue;
        long long x, y;
        long long g = ext_gcd(a, b, x, y);
        // rows (i-1, i) <- [[x, y], [-b/g, a/g]] * rows (i-1, i)
        long long p = -b / g, q = a / g;
        for (std::size_t j = 0; j < d; ++j) {
            long long r0 = U[i - 1][j], r1 = U[i][j];
            U[i - 1][j] = checked_add(checked_mul(x, r0), checked_mul(y, r1));
            U[i][j] = checked_add(checked_mul(p, r0), checked_mul(q, r1));
        }
        v[i - 1] = g;
        v[i] = 0;
    }
    if (v[0] == -1) {
        for (auto& x : U[0])
            x = -x;
        v[0] = 1;
    }
    if (v[0] != 1)
        throw std::invalid_argument("unimodular completion needs a primitive vector");
    return U;
}

} // namespace napp
