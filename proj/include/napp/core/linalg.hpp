#pragma once

#include "napp/core/intvec.hpp"
#include "napp/core/rational.hpp"

#include <optional>
#include <stdexcept>

namespace napp {

inline QVec to_q(const IVec& v)
{
    QVec q;
    q.reserve(v.size());
    for (long long x : v)
        q.emplace_back(static_cast<long>(x));
    return q;
}

inline Rational dot(const QVec& a, const QVec& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline Rational dot(const QVec& a, const IVec& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0)
            s += a[i] * static_cast<long>(b[i]);
    return s;
}

inline Rational det(QMat a)
{
    const std::size_t n = a.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0)
                continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j)
                a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

// Solves A x = b for square nonsingular A; nullopt when singular.
inline std::optional<QVec> solve(QMat a, QVec b)
{
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j)
                a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    QVec x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

inline std::optional<QMat> inverse(const QMat& a)
{
    const std::size_t n = a.size();
    QMat inv(n, QVec(n));
    for (std::size_t j = 0; j < n; ++j) {
        QVec e(n, 0);
        e[j] = 1;
        auto col = solve(a, e);
        if (!col)
            return std::nullopt;
        for (std::size_t i = 0; i < n; ++i)
            inv[i][j] = (*col)[i];
    }
    return inv;
}

// Basis of {x : M x = 0}.
inline std::vector<QVec> nullspace(QMat a, std::size_t cols)
{
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = 0; j < cols; ++j)
            a[r][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col)
        is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        QVec x(cols, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            x[pivot_col[i]] = -a[i][f];
        basis.push_back(x);
    }
    return basis;
}

inline std::size_t rank(const QMat& rows, std::size_t cols)
{
    return cols - nullspace(rows, cols).size();
}

// Scales a rational vector to the primitive integer vector on the same ray.
inline IVec primitive_integer(const QVec& v)
{
    Integer l = 1;
    for (const auto& x : v)
        l = lcm(l, x.get_den());
    IVec r;
    for (const auto& x : v) {
        Rational y = x * l;
        r.push_back(to_ll(y.get_num()));
    }
    return primitive(r);
}

} // namespace napp
