#pragma once

#include "napp/core/intvec.hpp"
#include "napp/valuations/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace napp {

struct Facet {
    IVec normal;     // primitive, nonnegative
    long long value; // min of <normal, p> over the polyhedron

    friend bool operator<(const Facet& a, const Facet& b)
    {
        return std::tie(a.normal, a.value) < std::tie(b.normal, b.value);
    }
    friend bool operator==(const Facet& a, const Facet& b) { return a.normal == b.normal && a.value == b.value; }
};

// Drops points lying in q + R^d_{>=0} for another point q; pts sorted and unique.
inline std::vector<IVec> undominated(const std::vector<IVec>& pts)
{
    std::vector<IVec> out;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : pts) {
            if (q == p)
                continue;
            bool ge = true;
            for (std::size_t i = 0; i < p.size() && ge; ++i)
                ge = p[i] >= q[i];
            if (ge) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            out.push_back(p);
    }
    return out;
}

namespace detail {

// Facets of conv(points) + R^d_{>=0}, by enumeration of hyperplanes spanned by
// points and coordinate directions. Slow; kept as a reference.
inline std::vector<Facet> orthant_polyhedron_facets_brute(std::vector<IVec> pts)
{
    if (pts.empty())
        throw std::invalid_argument("empty point set");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    pts = undominated(pts);
    const std::size_t d = pts[0].size();
    const std::size_t N = pts.size();
    std::set<Facet> found;

    std::vector<std::size_t> chosen;
    IMat rows;
    auto try_rows = [&](const IVec& base) {
        IVec u = cross(rows, d);
        if (is_zero(u))
            return;
        bool has_pos = false, has_neg = false;
        for (long long x : u) {
            has_pos |= x > 0;
            has_neg |= x < 0;
        }
        if (has_pos && has_neg)
            return;
        if (has_neg)
            for (auto& x : u)
                x = -x;
        u = primitive(u);
        long long h = dot(u, base);
        for (const auto& p : pts)
            if (dot(u, p) < h)
                return;
        found.insert(Facet{u, h});
    };

    // Choose k >= 1 points (first is the base) and d - k coordinate directions.
    std::function<void(std::size_t, std::size_t)> pick_dirs;
    std::function<void(std::size_t)> pick_pts;
    std::size_t k_target = 0;
    pick_dirs = [&](std::size_t start, std::size_t need) {
        if (need == 0) {
            try_rows(pts[chosen[0]]);
            return;
        }
        for (std::size_t i = start; i < d; ++i) {
            IVec e(d, 0);
            e[i] = 1;
            rows.push_back(e);
            pick_dirs(i + 1, need - 1);
            rows.pop_back();
        }
    };
    pick_pts = [&](std::size_t start) {
        if (chosen.size() == k_target) {
            pick_dirs(0, d - k_target);
            return;
        }
        for (std::size_t i = start; i < N; ++i) {
            chosen.push_back(i);
            bool pushed = chosen.size() > 1;
            if (pushed)
                rows.push_back(sub(pts[i], pts[chosen[0]]));
            pick_pts(i + 1);
            if (pushed)
                rows.pop_back();
            chosen.pop_back();
        }
    };
    for (k_target = 1; k_target <= std::min(d, N); ++k_target)
        pick_pts(0);
    return {found.begin(), found.end()};
}

} // namespace detail

// Facets of conv(points) + R^d_{>=0}: extreme rays (u, h) of the cone
// u >= 0, <u, p> >= h, by the double description method.
inline std::vector<Facet> orthant_polyhedron_facets(std::vector<IVec> pts)
{
    if (pts.empty())
        throw std::invalid_argument("empty point set");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    pts = undominated(pts);
    const std::size_t d = pts[0].size();
    const std::size_t D = d + 1;
    // Constraint rows: e_i (i < d), then (p, -1).
    std::vector<IVec> rows;
    for (std::size_t i = 0; i < d; ++i) {
        IVec e(D, 0);
        e[i] = 1;
        rows.push_back(e);
    }
    for (const auto& p : pts) {
        IVec r = p;
        r.push_back(-1);
        rows.push_back(r);
    }
    // Exact big-integer rays: intermediate cones can have large generators.
    using ZVec = std::vector<Integer>;
    struct Ray {
        ZVec y;
        std::vector<bool> zero;
    };
    auto zdot = [](const IVec& r, const ZVec& y) {
        Integer s = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            s += Integer(static_cast<long>(r[i])) * y[i];
        return s;
    };
    auto zero_set = [&](const ZVec& y, std::size_t upto) {
        std::vector<bool> z(rows.size(), false);
        for (std::size_t k = 0; k < upto; ++k)
            z[k] = zdot(rows[k], y) == 0;
        return z;
    };
    // Simplicial start from e_0..e_{d-1} and the first point.
    std::vector<Ray> rays;
    for (std::size_t k = 0; k < d; ++k) {
        ZVec y(D, 0);
        y[k] = 1;
        y[d] = static_cast<long>(pts[0][k]);
        rays.push_back(Ray{y, zero_set(y, d + 1)});
    }
    {
        ZVec y(D, 0);
        y[d] = -1;
        rays.push_back(Ray{y, zero_set(y, d + 1)});
    }
    for (std::size_t c = d + 1; c < rows.size(); ++c) {
        std::vector<Integer> val(rays.size());
        for (std::size_t k = 0; k < rays.size(); ++k)
            val[k] = zdot(rows[c], rays[k].y);
        std::vector<Ray> next;
        for (std::size_t k = 0; k < rays.size(); ++k)
            if (val[k] >= 0) {
                Ray r = rays[k];
                r.zero[c] = val[k] == 0;
                next.push_back(r);
            }
        for (std::size_t a = 0; a < rays.size(); ++a) {
            if (val[a] <= 0)
                continue;
            for (std::size_t b = 0; b < rays.size(); ++b) {
                if (val[b] >= 0)
                    continue;
                // Combinatorial adjacency: no third ray vanishes on the common zeros.
                std::vector<bool> common(rows.size());
                std::size_t cnt = 0;
                for (std::size_t k = 0; k < c; ++k) {
                    common[k] = rays[a].zero[k] && rays[b].zero[k];
                    cnt += common[k];
                }
                if (cnt + 2 < D)
                    continue;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == a || k == b)
                        continue;
                    bool sup = true;
                    for (std::size_t j = 0; j < c && sup; ++j)
                        if (common[j] && !rays[k].zero[j])
                            sup = false;
                    if (sup)
                        adjacent = false;
                }
                if (!adjacent)
                    continue;
                ZVec y(D);
                Integer g = 0;
                for (std::size_t i = 0; i < D; ++i) {
                    y[i] = val[a] * rays[b].y[i] - val[b] * rays[a].y[i];
                    g = gcd(g, y[i]);
                }
                for (auto& x : y)
                    x /= g;
                common[c] = true;
                next.push_back(Ray{y, common});
            }
        }
        rays = std::move(next);
    }
    std::vector<Facet> out;
    for (const auto& r : rays) {
        IVec u;
        for (std::size_t i = 0; i < d; ++i)
            u.push_back(to_ll(r.y[i]));
        if (is_zero(u))
            continue;
        out.push_back(Facet{u, to_ll(r.y[d])});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Points of `pts` that are vertices of conv(pts) + R^d_{>=0}.
inline std::vector<IVec> orthant_polyhedron_vertices(std::vector<IVec> pts, const std::vector<Facet>& facets)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<IVec> out;
    if (pts.empty())
        return out;
    const std::size_t d = pts[0].size();
    for (const auto& p : pts) {
        IMat tight;
        for (const auto& f : facets)
            if (dot(f.normal, p) == f.value)
                tight.push_back(f.normal);
        if (rank(tight) == d)
            out.push_back(p);
    }
    return out;
}

inline std::vector<IVec> orthant_polyhedron_vertices(const std::vector<IVec>& pts)
{
    return orthant_polyhedron_vertices(pts, orthant_polyhedron_facets(pts));
}

struct NewtonPolyhedron {
    std::vector<IVec> vertices;
    std::vector<Facet> facets;

    bool contains(const IVec& a) const
    {
        for (const auto& f : facets)
            if (dot(f.normal, a) < f.value)
                return false;
        return true;
    }
};

inline NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I)
{
    if (I.is_zero())
        throw std::invalid_argument("Newton polyhedron of the zero ideal");
    NewtonPolyhedron np;
    np.facets = orthant_polyhedron_facets(I.gens());
    np.vertices = orthant_polyhedron_vertices(I.gens(), np.facets);
    return np;
}

inline MonomialIdeal integral_closure(const MonomialIdeal& I)
{
    if (I.is_zero())
        throw std::invalid_argument("integral closure of the zero ideal");
    if (I.is_unit())
        return I;
    NewtonPolyhedron np = newton_polyhedron(I);
    const int d = I.nvars();
    IVec hi(d, 0);
    for (const auto& v : np.vertices)
        for (int i = 0; i < d; ++i)
            hi[i] = std::max(hi[i], v[i]);
    std::vector<IVec> members;
    IVec a(d, 0);
    while (true) {
        if (np.contains(a))
            members.push_back(a);
        int i = 0;
        while (i < d && a[i] == hi[i]) {
            a[i] = 0;
            ++i;
        }
        if (i == d)
            break;
        ++a[i];
    }
    return MonomialIdeal(d, std::move(members), I.chart());
}

} // namespace napp
