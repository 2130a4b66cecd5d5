#pragma once

#include "napp/core/intvec.hpp"
#include "napp/core/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace napp {

// Complete simplicial fan: primitive rays and maximal cones as sorted ray-index lists.
struct Fan {
    int dim = 0;
    std::vector<IVec> rays;
    std::vector<std::vector<int>> cones;
};

struct Wall {
    std::vector<int> face; // d - 1 rays
    int cone1, cone2;
    int opp1, opp2; // ray of cone1 (resp. cone2) not on the wall
};

namespace detail {

inline IMat rows_of(const std::vector<IVec>& rays, const std::vector<int>& idx)
{
    IMat m;
    for (int i : idx)
        m.push_back(rays[i]);
    return m;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            f(cur);
            return;
        }
        for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
            cur.push_back(static_cast<int>(i));
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

// Integer basis of the orthogonal complement of span(rows) in Q^d.
inline IMat orthogonal_complement(const IMat& rows, std::size_t d)
{
    QMat a;
    for (const auto& r : rows)
        a.push_back(to_q(r));
    IMat out;
    for (const auto& v : nullspace(a, d))
        out.push_back(primitive_integer(v));
    return out;
}

} // namespace detail

// Facets of the cone spanned by `cone` (ray indices), as sorted index subsets.
inline std::vector<std::vector<int>> cone_facets(const std::vector<IVec>& rays, const std::vector<int>& cone)
{
    const std::size_t d = rays[cone[0]].size();
    IMat R = detail::rows_of(rays, cone);
    const std::size_t k = rank(R);
    IMat comp = detail::orthogonal_complement(R, d);
    std::set<std::vector<int>> out;
    if (k == 1)
        return {};
    detail::for_each_subset(cone.size(), k - 1, [&](const std::vector<int>& sub) {
        IMat rows;
        for (int i : sub)
            rows.push_back(R[i]);
        for (const auto& c : comp)
            rows.push_back(c);
        IVec u = cross(rows, d);
        if (is_zero(u))
            return;
        bool pos = false, neg = false;
        std::vector<int> on;
        for (std::size_t i = 0; i < cone.size(); ++i) {
            long long x = dot(u, R[i]);
            pos |= x > 0;
            neg |= x < 0;
            if (x == 0)
                on.push_back(cone[i]);
        }
        if (pos && neg)
            return;
        std::sort(on.begin(), on.end());
        out.insert(on);
    });
    return {out.begin(), out.end()};
}

// Pulling triangulation: repeatedly cone the lowest-index ray over the facets
// that avoid it. Compatible across common faces for a fixed global order.
inline std::vector<std::vector<int>> pulling_triangulation(const std::vector<IVec>& rays, std::vector<int> cell)
{
    std::sort(cell.begin(), cell.end());
    const std::size_t k = rank(detail::rows_of(rays, cell));
    if (cell.size() == k)
        return {cell};
    const int v = cell.front();
    std::vector<std::vector<int>> out;
    for (const auto& F : cone_facets(rays, cell)) {
        if (std::binary_search(F.begin(), F.end(), v))
            continue;
        for (auto T : pulling_triangulation(rays, F)) {
            T.push_back(v);
            std::sort(T.begin(), T.end());
            out.push_back(T);
        }
    }
    return out;
}

inline std::vector<Wall> fan_walls(const Fan& fan)
{
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> faces;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        const auto& cone = fan.cones[c];
        for (std::size_t drop = 0; drop < cone.size(); ++drop) {
            std::vector<int> f;
            for (std::size_t i = 0; i < cone.size(); ++i)
                if (i != drop)
                    f.push_back(cone[i]);
            faces[f].emplace_back(static_cast<int>(c), cone[drop]);
        }
    }
    std::vector<Wall> walls;
    for (const auto& [f, users] : faces) {
        if (users.size() != 2)
            throw std::logic_error("fan is not complete: a codimension-one face lies on " +
                                   std::to_string(users.size()) + " maximal cones");
        walls.push_back(Wall{f, users[0].first, users[1].first, users[0].second, users[1].second});
    }
    return walls;
}

// Linear function l on a simplicial full-dimensional cone with l(u_r) = values[r].
inline QVec linear_on_cone(const Fan& fan, const std::vector<int>& cone, const std::vector<Rational>& values)
{
    QMat A;
    QVec b;
    for (int r : cone) {
        A.push_back(to_q(fan.rays[r]));
        b.push_back(values[r]);
    }
    auto x = solve(A, b);
    if (!x)
        throw std::logic_error("degenerate maximal cone");
    return *x;
}

// Coefficients of x in the ray basis of each maximal cone, first cone with all
// coefficients nonnegative.
inline std::optional<std::pair<int, QVec>> locate(const Fan& fan, const QVec& x)
{
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        const auto& cone = fan.cones[c];
        QMat A(fan.dim, QVec(fan.dim));
        for (int j = 0; j < fan.dim; ++j)
            for (int i = 0; i < fan.dim; ++i)
                A[i][j] = static_cast<long>(fan.rays[cone[j]][i]);
        auto coef = solve(A, x);
        if (!coef)
            continue;
        bool ok = std::all_of(coef->begin(), coef->end(), [](const Rational& r) { return r >= 0; });
        if (ok)
            return std::make_pair(static_cast<int>(c), *coef);
    }
    return std::nullopt;
}

// Every maximal cone of the checked fan is contained in a maximal cone of `coarse`.
inline bool refines(const Fan& fine, const Fan& coarse)
{
    for (const auto& cone : fine.cones) {
        QVec centre(fine.dim, 0);
        for (int r : cone)
            for (int i = 0; i < fine.dim; ++i)
                centre[i] += static_cast<long>(fine.rays[r][i]);
        auto loc = locate(coarse, centre);
        if (!loc)
            return false;
        const auto& target = coarse.cones[loc->first];
        QMat A(fine.dim, QVec(fine.dim));
        for (int j = 0; j < fine.dim; ++j)
            for (int i = 0; i < fine.dim; ++i)
                A[i][j] = static_cast<long>(coarse.rays[target[j]][i]);
        for (int r : cone) {
            auto c = solve(A, to_q(fine.rays[r]));
            if (!c || !std::all_of(c->begin(), c->end(), [](const Rational& x) { return x >= 0; }))
                return false;
        }
    }
    return true;
}

inline int find_ray(const Fan& fan, const IVec& r)
{
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        if (fan.rays[i] == r)
            return static_cast<int>(i);
    return -1;
}

// Star subdivision at the primitive sum of the rays of `face`; returns the new ray index.
inline int stellar_subdivide(Fan& fan, const std::vector<int>& face)
{
    IVec sum(fan.dim, 0);
    for (int r : face)
        sum = add(sum, fan.rays[r]);
    IVec nr = primitive(sum);
    if (find_ray(fan, nr) >= 0)
        throw std::invalid_argument("stellar subdivision at an existing ray");
    fan.rays.push_back(nr);
    const int id = static_cast<int>(fan.rays.size()) - 1;
    std::vector<std::vector<int>> cones;
    for (const auto& cone : fan.cones) {
        bool contains = std::all_of(face.begin(), face.end(),
                                    [&](int r) { return std::binary_search(cone.begin(), cone.end(), r); });
        if (!contains) {
            cones.push_back(cone);
            continue;
        }
        for (int r : face) {
            std::vector<int> c;
            for (int x : cone)
                if (x != r)
                    c.push_back(x);
            c.push_back(id);
            std::sort(c.begin(), c.end());
            cones.push_back(c);
        }
    }
    fan.cones = std::move(cones);
    return id;
}

inline bool is_convex(const Fan& fan, const std::vector<Rational>& h)
{
    for (const auto& w : fan_walls(fan)) {
        QVec l = linear_on_cone(fan, fan.cones[w.cone1], h);
        if (dot(l, fan.rays[w.opp2]) > h[w.opp2])
            return false;
    }
    return true;
}

} // namespace napp
