#pragma once

#include "napp/core/linalg.hpp"
#include "napp/testconfig/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace napp {

struct Polytope {
    std::vector<QVec> vertices;
};

namespace detail {

inline Rational factorial(std::size_t d)
{
    Rational f = 1;
    for (std::size_t i = 2; i <= d; ++i)
        f *= static_cast<long>(i);
    return f;
}

} // namespace detail

// Volume of P_h = {m : <m, u_rho> >= -h(rho)} for convex h, from the
// barycentric subdivision of its face lattice indexed by flags of cones.
inline Rational fan_polytope_volume(const Fan& fan, const std::vector<Rational>& h)
{
    const std::size_t d = static_cast<std::size_t>(fan.dim);
    std::vector<QVec> vert;
    for (const auto& cone : fan.cones) {
        QVec l = linear_on_cone(fan, cone, h);
        for (auto& x : l)
            x = -x;
        vert.push_back(l);
    }
    // p_tau = mean of the vertices of the face dual to tau.
    std::map<std::vector<int>, QVec> bary;
    auto point = [&](const std::vector<int>& tau) -> const QVec& {
        auto it = bary.find(tau);
        if (it != bary.end())
            return it->second;
        QVec p(d, 0);
        long cnt = 0;
        for (std::size_t c = 0; c < fan.cones.size(); ++c) {
            const auto& cone = fan.cones[c];
            if (!std::includes(cone.begin(), cone.end(), tau.begin(), tau.end()))
                continue;
            for (std::size_t i = 0; i < d; ++i)
                p[i] += vert[c][i];
            ++cnt;
        }
        for (auto& x : p)
            x /= cnt;
        return bary.emplace(tau, p).first->second;
    };
    Rational total = 0;
    const QVec& p0 = point({});
    for (const auto& cone : fan.cones) {
        std::vector<int> perm(cone);
        do {
            QMat M;
            std::vector<int> tau;
            for (std::size_t k = 0; k < d; ++k) {
                tau.push_back(perm[k]);
                std::vector<int> s(tau);
                std::sort(s.begin(), s.end());
                const QVec& p = point(s);
                QVec row(d);
                for (std::size_t i = 0; i < d; ++i)
                    row[i] = p[i] - p0[i];
                M.push_back(row);
            }
            total += abs(det(M));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return total / detail::factorial(d);
}

// MV(P_{h_1}, ..., P_{h_d}) for convex h_i by polarization, normalized so that
// MV(P, ..., P) = d! vol(P).
inline Rational fan_mixed_volume(const Fan& fan, const std::vector<std::vector<Rational>>& hs)
{
    const std::size_t d = hs.size();
    Rational total = 0;
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        std::vector<Rational> sum(fan.rays.size(), 0);
        int k = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (1u << i)) {
                ++k;
                for (std::size_t r = 0; r < sum.size(); ++r)
                    sum[r] += hs[i][r];
            }
        Rational v = fan_polytope_volume(fan, sum);
        if ((d - k) % 2)
            total -= v;
        else
            total += v;
    }
    return total;
}

namespace detail {

struct HullFacet {
    QVec normal; // <normal, x> <= offset on the polytope
    Rational offset;
};

inline std::size_t affine_rank(const std::vector<QVec>& pts)
{
    if (pts.empty())
        return 0;
    QMat rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec r(pts[i].size());
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] = pts[i][k] - pts[0][k];
        rows.push_back(r);
    }
    return rank(rows, pts[0].size());
}

// Facets of a full-dimensional point configuration by brute force over d-subsets.
inline std::vector<HullFacet> hull_facets(const std::vector<QVec>& pts)
{
    const std::size_t d = pts[0].size();
    std::set<std::pair<QVec, Rational>> seen;
    std::vector<HullFacet> out;
    for_each_subset(pts.size(), d, [&](const std::vector<int>& sub) {
        QMat rows;
        for (std::size_t i = 1; i < sub.size(); ++i) {
            QVec r(d);
            for (std::size_t k = 0; k < d; ++k)
                r[k] = pts[sub[i]][k] - pts[sub[0]][k];
            rows.push_back(r);
        }
        auto ns = nullspace(rows, d);
        if (ns.size() != 1)
            return;
        QVec a = to_q(primitive_integer(ns[0]));
        Rational b = dot(a, pts[sub[0]]);
        bool pos = false, neg = false;
        for (const auto& p : pts) {
            Rational v = dot(a, p) - b;
            pos |= v > 0;
            neg |= v < 0;
        }
        if (pos && neg)
            return;
        if (pos) {
            for (auto& x : a)
                x = -x;
            b = -b;
        }
        if (seen.emplace(a, b).second)
            out.push_back(HullFacet{a, b});
    });
    return out;
}

inline std::vector<QVec> dedupe(std::vector<QVec> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace detail

// Exact d-volume of conv(pts) in Q^d, by pyramids over facets from an
// interior point and projection of each facet to a coordinate hyperplane.
inline Rational hull_volume(std::vector<QVec> pts)
{
    pts = detail::dedupe(std::move(pts));
    if (pts.empty())
        return 0;
    const std::size_t d = pts[0].size();
    if (detail::affine_rank(pts) < d)
        return 0;
    if (d == 1) {
        auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
        return (*hi)[0] - (*lo)[0];
    }
    QVec c(d, 0);
    for (const auto& p : pts)
        for (std::size_t k = 0; k < d; ++k)
            c[k] += p[k];
    for (auto& x : c)
        x /= static_cast<long>(pts.size());
    Rational total = 0;
    for (const auto& F : detail::hull_facets(pts)) {
        std::size_t j = 0;
        while (F.normal[j] == 0)
            ++j;
        std::vector<QVec> proj;
        for (const auto& p : pts)
            if (dot(F.normal, p) == F.offset) {
                QVec q;
                for (std::size_t k = 0; k < d; ++k)
                    if (k != j)
                        q.push_back(p[k]);
                proj.push_back(q);
            }
        Rational height = F.offset - dot(F.normal, c);
        total += height * hull_volume(proj) / abs(F.normal[j]);
    }
    return total / static_cast<long>(d);
}

inline std::vector<QVec> hull_vertices(const std::vector<QVec>& pts)
{
    auto u = detail::dedupe(pts);
    if (u.size() <= 1)
        return u;
    const std::size_t d = u[0].size();
    const std::size_t ar = detail::affine_rank(u);
    if (ar < d) {
        // Project to coordinates that are injective on the affine hull.
        QMat dirs;
        for (std::size_t i = 1; i < u.size(); ++i) {
            QVec r(d);
            for (std::size_t k = 0; k < d; ++k)
                r[k] = u[i][k] - u[0][k];
            dirs.push_back(r);
        }
        std::vector<std::size_t> cols;
        for (std::size_t k = 0; k < d && cols.size() < ar; ++k) {
            QMat sub;
            for (const auto& r : dirs) {
                QVec x;
                for (std::size_t c : cols)
                    x.push_back(r[c]);
                x.push_back(r[k]);
                sub.push_back(x);
            }
            if (rank(sub, cols.size() + 1) == cols.size() + 1)
                cols.push_back(k);
        }
        std::vector<QVec> proj;
        for (const auto& p : u) {
            QVec q;
            for (std::size_t c : cols)
                q.push_back(p[c]);
            proj.push_back(q);
        }
        auto pv = hull_vertices(proj);
        std::vector<QVec> out;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (std::find(pv.begin(), pv.end(), proj[i]) != pv.end())
                out.push_back(u[i]);
        return out;
    }
    if (d == 1) {
        auto [lo, hi] = std::minmax_element(u.begin(), u.end());
        return {*lo, *hi};
    }
    auto facets = detail::hull_facets(u);
    std::vector<QVec> out;
    for (const auto& p : u) {
        QMat tight;
        for (const auto& F : facets)
            if (dot(F.normal, p) == F.offset)
                tight.push_back(F.normal);
        if (rank(tight, d) == d)
            out.push_back(p);
    }
    return out;
}

inline Polytope minkowski_sum(const Polytope& a, const Polytope& b)
{
    std::vector<QVec> pts;
    for (const auto& p : a.vertices)
        for (const auto& q : b.vertices) {
            QVec s(p.size());
            for (std::size_t k = 0; k < p.size(); ++k)
                s[k] = p[k] + q[k];
            pts.push_back(s);
        }
    return Polytope{hull_vertices(pts)};
}

// Mixed volume of d polytopes in Q^d, normalized so MV(P, ..., P) = d! vol(P).
inline Rational mixed_volume(const std::vector<Polytope>& ps)
{
    const std::size_t d = ps.size();
    if (d == 0)
        throw std::invalid_argument("mixed volume of no polytopes");
    for (const auto& p : ps) {
        if (p.vertices.empty())
            throw std::invalid_argument("empty polytope");
        for (const auto& v : p.vertices)
            if (v.size() != d)
                throw std::invalid_argument("mixed volume needs d polytopes in Q^d");
    }
    Rational total = 0;
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        Polytope sum{{QVec(d, 0)}};
        int k = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (1u << i)) {
                ++k;
                sum = minkowski_sum(sum, ps[i]);
            }
        Rational v = hull_volume(sum.vertices);
        if ((d - k) % 2)
            total -= v;
        else
            total += v;
    }
    return total;
}

} // namespace napp
