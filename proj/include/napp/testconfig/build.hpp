#pragma once

#include "napp/flagideal/flag_ideal.hpp"
#include "napp/flagideal/gauss.hpp"
#include "napp/testconfig/fan.hpp"
#include "napp/valuations/newton.hpp"
#include "napp/valuations/weight.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace napp {

// Toric test configuration of P^n: a complete simplicial fan in N x Z
// (coordinates (w_1..w_n, s)) refining the fan of P^n x P^1.
struct ToricTestConfig {
    int n = 1;
    Fan fan;
    std::vector<bool> vertical; // s > 0
    std::vector<long long> b;   // s-component on vertical rays, 0 elsewhere
    std::vector<Rational> witness; // strictly convex support function on the fan
    std::vector<FlagIdeal> sources;

    std::vector<int> vertical_rays() const
    {
        std::vector<int> r;
        for (std::size_t i = 0; i < vertical.size(); ++i)
            if (vertical[i])
                r.push_back(static_cast<int>(i));
        return r;
    }

    QVec ray_N(int r) const
    {
        QVec w;
        for (int i = 0; i < n; ++i)
            w.emplace_back(static_cast<long>(fan.rays[r][i]));
        return w;
    }

    long long ray_s(int r) const { return fan.rays[r][n]; }

    // v_E = ord_E / b_E as a weight on a chart containing it.
    Weight vertex_weight(int r) const
    {
        if (!vertical[r])
            throw std::invalid_argument("not a vertical ray");
        QVec w = ray_N(r);
        for (auto& x : w)
            x /= static_cast<long>(b[r]);
        return weight_from_N(w);
    }
};

namespace detail {

// Ray of the base fan of P^n in N coordinates: e_1..e_n and e_0 = -(1,..,1).
inline IVec base_ray(int n, int i)
{
    IVec r(n, 0);
    if (i == 0)
        std::fill(r.begin(), r.end(), -1);
    else
        r[i - 1] = 1;
    return r;
}

// Local chart coordinates (W_i for i != j, s) to global (w, s).
inline IVec local_to_global(int n, int j, const IVec& x)
{
    IVec W(n + 1, 0);
    std::size_t k = 0;
    for (int i = 0; i <= n; ++i)
        if (i != j)
            W[i] = x[k++];
    IVec g;
    for (int i = 1; i <= n; ++i)
        g.push_back(W[i] - W[0]);
    g.push_back(x[n]);
    return g;
}

inline std::vector<IVec> dehomogenize(const std::vector<IVec>& hom, int j)
{
    std::vector<IVec> out;
    for (const auto& p : hom) {
        IVec q;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (static_cast<int>(i) != j)
                q.push_back(p[i]);
        out.push_back(q);
    }
    return out;
}

inline std::vector<IVec> minkowski_reduced(const std::vector<IVec>& a, const std::vector<IVec>& b)
{
    std::vector<IVec> s;
    for (const auto& p : a)
        for (const auto& q : b)
            s.push_back(add(p, q));
    return orthant_polyhedron_vertices(s);
}

inline bool ray_order(const IVec& a, const IVec& b)
{
    auto cls = [](const IVec& r) { return r.back() > 0 ? 0 : (r.back() == 0 ? 1 : 2); };
    if (cls(a) != cls(b))
        return cls(a) < cls(b);
    return a < b;
}

} // namespace detail

// Values of the support-function witness before perturbation: the convex
// function attached to the sources plus multiples of h_H and max(s, 0).
inline Rational witness_base(const ToricTestConfig& tc, int r)
{
    QVec w = tc.ray_N(r);
    Rational s = static_cast<long>(tc.ray_s(r));
    QVec W = homogeneous_from_N(w);
    Rational K = 0, c = 0, val = 0;
    for (const auto& a : tc.sources) {
        long long kmax = 0, lmax = 0;
        for (const auto& p : a.homogeneous_points()) {
            long long deg = 0;
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                deg += p[i];
            kmax = std::max(kmax, deg);
            lmax = std::max(lmax, p.back());
        }
        K += static_cast<long>(kmax);
        c += static_cast<long>(lmax);
        if (s > 0)
            val -= flag_support(a, W, s);
    }
    val += (K + 1) * hyperplane_support(w);
    if (s > 0)
        val += (c + 1) * s;
    return val;
}

inline bool strictly_convex(const Fan& fan, const std::vector<Rational>& h, bool fiber_only = false, int n = 0)
{
    for (const auto& wall : fan_walls(fan)) {
        if (fiber_only) {
            bool horizontal = std::all_of(wall.face.begin(), wall.face.end(),
                                          [&](int r) { return fan.rays[r][n] == 0; });
            if (horizontal)
                continue;
        }
        QVec l = linear_on_cone(fan, fan.cones[wall.cone1], h);
        if (!(dot(l, fan.rays[wall.opp2]) < h[wall.opp2]))
            return false;
    }
    return true;
}

namespace detail {

// Integer rows r with r . h > 0 <=> h strictly convex across each wall.
inline std::vector<std::vector<Integer>> wall_rows(const Fan& fan)
{
    std::vector<std::vector<Integer>> rows;
    for (const auto& wall : fan_walls(fan)) {
        const auto& cone = fan.cones[wall.cone1];
        const std::size_t d = cone.size();
        QMat Mt(d, QVec(d));
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i)
                Mt[i][j] = static_cast<long>(fan.rays[cone[j]][i]);
        auto c = *solve(Mt, to_q(fan.rays[wall.opp2]));
        Integer den = 1;
        for (const auto& x : c)
            den = lcm(den, x.get_den());
        std::vector<Integer> row(fan.rays.size(), 0);
        row[wall.opp2] = den;
        for (std::size_t j = 0; j < d; ++j) {
            Rational v = c[j] * Rational(den);
            row[cone[j]] -= v.get_num();
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace detail

// Strictly convex g = t * base - x with x supported on the vertical rays, found
// by the perceptron iteration on the wall inequalities; integer valued.
inline void compute_witness(ToricTestConfig& tc)
{
    const std::size_t R = tc.fan.rays.size();
    std::vector<Rational> base(R);
    Integer den = 1;
    for (std::size_t r = 0; r < R; ++r) {
        base[r] = witness_base(tc, static_cast<int>(r));
        den = lcm(den, base[r].get_den());
    }
    std::vector<Integer> b(R);
    for (std::size_t r = 0; r < R; ++r)
        b[r] = Rational(base[r] * Rational(den)).get_num();
    auto rows = detail::wall_rows(tc.fan);
    // Augmented rows over (x on vertical rays, t).
    std::vector<std::vector<Integer>> aug;
    for (const auto& row : rows) {
        std::vector<Integer> a(R + 1, 0);
        for (std::size_t r = 0; r < R; ++r) {
            if (tc.vertical[r])
                a[r] = row[r];
            a[R] += row[r] * b[r];
        }
        aug.push_back(a);
    }
    std::vector<Integer> x(R + 1, 0);
    x[R] = 1;
    for (long iter = 0; iter < 200000; ++iter) {
        bool ok = x[R] > 0;
        if (!ok)
            x[R] += 1;
        for (const auto& a : aug) {
            Integer v = 0;
            for (std::size_t k = 0; k <= R; ++k)
                v += a[k] * x[k];
            if (v <= 0) {
                ok = false;
                for (std::size_t k = 0; k <= R; ++k)
                    x[k] += a[k];
            }
        }
        if (ok) {
            std::vector<Rational> g(R);
            for (std::size_t r = 0; r < R; ++r)
                g[r] = Rational(x[R] * b[r] + (tc.vertical[r] ? x[r] : Integer(0)));
            if (!strictly_convex(tc.fan, g))
                throw std::logic_error("witness iteration produced a non-convex function");
            tc.witness = g;
            return;
        }
    }
    throw std::logic_error("no strictly convex witness found for the fan");
}

// Fan of the normalization of the blow-up of P^n x P^1 along the product of
// the given flag ideals, triangulated by pulling (vertical rays first).
inline ToricTestConfig build_testconfig(int n, const std::vector<FlagIdeal>& ideals)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    for (const auto& a : ideals)
        if (a.n() != n)
            throw std::invalid_argument("flag ideal over a different base");
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<IVec>> cells;
    for (int j = 0; j <= n; ++j) {
        std::vector<IVec> P{IVec(d, 0)};
        for (const auto& a : ideals) {
            auto local = orthant_polyhedron_vertices(detail::dehomogenize(a.homogeneous_points(), j));
            P = detail::minkowski_reduced(P, local);
        }
        // The normal cone at a vertex is spanned by the normals of its facets.
        auto facets = orthant_polyhedron_facets(P);
        for (const auto& p : P) {
            std::vector<IVec> local_rays;
            for (const auto& f : facets)
                if (dot(f.normal, p) == f.value)
                    local_rays.push_back(f.normal);
            if (rank(local_rays) < d)
                continue;
            std::vector<IVec> cell;
            for (const auto& x : local_rays)
                cell.push_back(detail::local_to_global(n, j, x));
            cells.push_back(cell);
        }
        std::vector<IVec> lower;
        for (int i = 0; i <= n; ++i)
            if (i != j) {
                IVec r = detail::base_ray(n, i);
                r.push_back(0);
                lower.push_back(r);
            }
        IVec down(d, 0);
        down[n] = -1;
        lower.push_back(down);
        cells.push_back(lower);
    }

    std::set<IVec, decltype(&detail::ray_order)> ray_set(&detail::ray_order);
    for (const auto& c : cells)
        for (const auto& r : c)
            ray_set.insert(r);
    ToricTestConfig tc;
    tc.n = n;
    tc.sources = ideals;
    tc.fan.dim = static_cast<int>(d);
    tc.fan.rays.assign(ray_set.begin(), ray_set.end());
    std::map<IVec, int> index;
    for (std::size_t i = 0; i < tc.fan.rays.size(); ++i)
        index[tc.fan.rays[i]] = static_cast<int>(i);
    for (const auto& c : cells) {
        std::vector<int> idx;
        for (const auto& r : c)
            idx.push_back(index.at(r));
        for (auto& T : pulling_triangulation(tc.fan.rays, idx))
            tc.fan.cones.push_back(T);
    }
    std::sort(tc.fan.cones.begin(), tc.fan.cones.end());
    for (const auto& r : tc.fan.rays) {
        tc.vertical.push_back(r[n] > 0);
        tc.b.push_back(r[n] > 0 ? r[n] : 0);
    }
    fan_walls(tc.fan); // completeness check
    compute_witness(tc);
    return tc;
}

inline ToricTestConfig build_testconfig(const FlagIdeal& a)
{
    return build_testconfig(a.n(), std::vector<FlagIdeal>{a});
}

inline ToricTestConfig trivial_testconfig(int n)
{
    return build_testconfig(n, {});
}

// One star subdivision of tc at the face spanned by `face`; the witness is
// lowered at the new ray.
inline int stellar_subdivide(ToricTestConfig& tc, const std::vector<int>& face)
{
    std::vector<Rational> interp;
    // Value of the old witness at the new ray, from any cone containing the face.
    IVec sum(tc.fan.dim, 0);
    for (int r : face)
        sum = add(sum, tc.fan.rays[r]);
    IVec nr = primitive(sum);
    Rational g_new;
    bool found = false;
    for (const auto& cone : tc.fan.cones) {
        bool contains = std::all_of(face.begin(), face.end(),
                                    [&](int r) { return std::binary_search(cone.begin(), cone.end(), r); });
        if (contains) {
            g_new = dot(linear_on_cone(tc.fan, cone, tc.witness), nr);
            found = true;
            break;
        }
    }
    if (!found)
        throw std::invalid_argument("face is not a cone of the fan");
    const int id = stellar_subdivide(tc.fan, face);
    tc.vertical.push_back(nr[tc.n] > 0);
    tc.b.push_back(nr[tc.n] > 0 ? nr[tc.n] : 0);
    Rational delta(1, 2);
    for (int attempt = 0; attempt < 40; ++attempt) {
        std::vector<Rational> g = tc.witness;
        g.push_back(g_new - delta);
        if (strictly_convex(tc.fan, g)) {
            tc.witness = g;
            return id;
        }
        delta /= 4;
    }
    throw std::logic_error("stellar subdivision lost strict convexity");
}

} // namespace napp
