#pragma once

#include "napp/flagideal/gauss.hpp"
#include "napp/testconfig/build.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace napp {

struct DualVertex {
    int ray;
    long long b;
    Weight weight; // v_E = ord_E / b_E
};

// Point of the dual complex: coordinates w_E on the vertical rays of one face,
// with sum b_E w_E = 1.
struct DualPoint {
    std::map<int, Rational> coords;

    Rational at(int ray) const
    {
        auto it = coords.find(ray);
        return it == coords.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const DualPoint& a, const DualPoint& b)
    {
        auto strip = [](const DualPoint& p) {
            std::map<int, Rational> m;
            for (const auto& [k, v] : p.coords)
                if (v != 0)
                    m[k] = v;
            return m;
        };
        return strip(a) == strip(b);
    }

    std::string str() const
    {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (const auto& [k, v] : coords) {
            if (!first)
                os << ", ";
            os << "E" << k << ": " << to_string(v);
            first = false;
        }
        os << "}";
        return os.str();
    }
};

struct DualComplex {
    std::vector<DualVertex> vertices;
    std::vector<std::vector<int>> faces; // sorted ray ids, all faces (closed under subsets)

    long long b_of(int ray) const
    {
        for (const auto& v : vertices)
            if (v.ray == ray)
                return v.b;
        throw std::invalid_argument("ray is not a vertex of the dual complex");
    }

    bool is_face(const std::vector<int>& f) const { return std::binary_search(faces.begin(), faces.end(), f); }

    // sum b_E w_E = 1 and the support is a face.
    bool contains(const DualPoint& p) const
    {
        Rational s = 0;
        std::vector<int> supp;
        for (const auto& [r, w] : p.coords) {
            if (w < 0)
                return false;
            if (w == 0)
                continue;
            s += w * static_cast<long>(b_of(r));
            supp.push_back(r);
        }
        return s == 1 && is_face(supp);
    }
};

inline DualComplex dual_complex(const ToricTestConfig& tc)
{
    DualComplex dc;
    for (int r : tc.vertical_rays())
        dc.vertices.push_back(DualVertex{r, tc.b[r], tc.vertex_weight(r)});
    std::set<std::vector<int>> faces;
    for (const auto& cone : tc.fan.cones) {
        std::vector<int> vert;
        for (int r : cone)
            if (tc.vertical[r])
                vert.push_back(r);
        const std::size_t k = vert.size();
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> f;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i))
                    f.push_back(vert[i]);
            faces.insert(f);
        }
    }
    dc.faces.assign(faces.begin(), faces.end());
    return dc;
}

// Point of N x {1} represented by a dual-complex point.
inline QVec dual_point_N(const ToricTestConfig& tc, const DualPoint& p)
{
    QVec x(tc.fan.dim, 0);
    for (const auto& [r, w] : p.coords)
        for (int i = 0; i < tc.fan.dim; ++i)
            x[i] += w * static_cast<long>(tc.fan.rays[r][i]);
    return x;
}

// val(w): the Gauss valuation monomial in the coordinates of the face.
inline GaussValuation dual_point_valuation(const ToricTestConfig& tc, const DualPoint& p)
{
    QVec x = dual_point_N(tc, p);
    if (x.back() != 1)
        throw std::invalid_argument("point violates the affine constraint of the dual complex");
    x.pop_back();
    return gauss_extend(weight_from_N(x));
}

// p(v) = (v(E_i)): the vertical coordinates of (w, 1) in the cone containing it.
inline DualPoint retraction(const ToricTestConfig& tc, const GaussValuation& v)
{
    if (v.base.n() != tc.n)
        throw std::invalid_argument("valuation over a different base");
    QVec x = N_from_weight(v.base);
    x.emplace_back(1);
    auto loc = locate(tc.fan, x);
    if (!loc)
        throw std::logic_error("fan does not cover the point");
    DualPoint p;
    const auto& cone = tc.fan.cones[loc->first];
    for (std::size_t i = 0; i < cone.size(); ++i)
        if (tc.vertical[cone[i]] && loc->second[i] != 0)
            p.coords[cone[i]] = loc->second[i];
    return p;
}

// Value at x of the support function taking `values` on the rays.
inline Rational eval_on_fan(const Fan& fan, const std::vector<Rational>& values, const QVec& x)
{
    auto loc = locate(fan, x);
    if (!loc)
        throw std::logic_error("fan does not cover the point");
    Rational v = 0;
    const auto& cone = fan.cones[loc->first];
    for (std::size_t i = 0; i < cone.size(); ++i)
        v += loc->second[i] * values[cone[i]];
    return v;
}

// d^i_j: multiplicity of the low vertical divisor E_j along the high ray i.
inline std::map<int, std::map<int, Rational>> pullback_multiplicities(const ToricTestConfig& high,
                                                                      const ToricTestConfig& low)
{
    if (!refines(high.fan, low.fan))
        throw std::invalid_argument("the first test configuration does not dominate the second");
    std::map<int, std::map<int, Rational>> d;
    for (int i : high.vertical_rays()) {
        QVec x = to_q(high.fan.rays[i]);
        auto loc = locate(low.fan, x);
        const auto& cone = low.fan.cones[loc->first];
        for (std::size_t k = 0; k < cone.size(); ++k)
            if (low.vertical[cone[k]] && loc->second[k] != 0)
                d[i][cone[k]] = loc->second[k];
    }
    return d;
}

// r(w) = (sum_i d^i_j w_i)_j.
inline DualPoint complex_morphism(const ToricTestConfig& high, const ToricTestConfig& low, const DualPoint& w)
{
    auto d = pullback_multiplicities(high, low);
    DualPoint out;
    for (const auto& [i, wi] : w.coords) {
        auto it = d.find(i);
        if (it == d.end())
            throw std::invalid_argument("point is not on the dual complex of the first configuration");
        for (const auto& [j, dij] : it->second)
            out.coords[j] += dij * wi;
    }
    return out;
}

// Log discrepancy on N x R_{>=0} for the toric boundary of P^n x A^1:
// A(w, s) = sum_i W_i + s with W the normalized homogeneous weight.
inline Rational log_discrepancy_N(const QVec& w, const Rational& s)
{
    Rational a = s;
    for (const auto& x : homogeneous_from_N(w))
        a += x;
    return a;
}

inline Rational log_discrepancy(const GaussValuation& v)
{
    return log_discrepancy_N(N_from_weight(v.base), Rational(GaussValuation::t_value));
}

// A_X of a monomial valuation on X.
inline Rational log_discrepancy_X(const Weight& v)
{
    if (!v.is_finite())
        throw std::invalid_argument("log discrepancy of a non-finite weight");
    Rational a = 0;
    for (const auto& x : v.homogeneous())
        a += x;
    return a;
}

// A(v_E) = A(ord_E) / b_E.
inline Rational log_discrepancy_vertex(const ToricTestConfig& tc, int ray)
{
    if (!tc.vertical[ray])
        throw std::invalid_argument("not a vertical ray");
    return log_discrepancy_N(tc.ray_N(ray), Rational(static_cast<long>(tc.ray_s(ray)))) /
           static_cast<long>(tc.b[ray]);
}

// A on the dual complex, affine on faces.
inline Rational log_discrepancy(const ToricTestConfig& tc, const DualPoint& p)
{
    Rational a = 0;
    for (const auto& [r, w] : p.coords)
        a += w * log_discrepancy_N(tc.ray_N(r), Rational(static_cast<long>(tc.ray_s(r))));
    return a;
}

} // namespace napp
