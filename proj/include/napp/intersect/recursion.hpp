#pragma once

#include "napp/core/intvec.hpp"
#include "napp/core/linalg.hpp"
#include "napp/testconfig/fan.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace napp {

namespace detail {

inline std::size_t nonzeros(const std::vector<Rational>& h)
{
    std::size_t k = 0;
    for (const auto& x : h)
        k += x != 0;
    return k;
}

// Inverse of the ray matrix of each maximal cone.
inline std::vector<QMat> cone_inverses(const Fan& fan)
{
    std::vector<QMat> out;
    for (const auto& cone : fan.cones) {
        QMat A;
        for (int r : cone)
            A.push_back(to_q(fan.rays[r]));
        auto inv = inverse(A);
        if (!inv)
            throw std::logic_error("degenerate maximal cone");
        out.push_back(std::move(*inv));
    }
    return out;
}

// h minus the linear function agreeing with h on the cone that leaves the
// fewest nonzero values.
inline std::vector<Rational> sparsest_representative(const Fan& fan, const std::vector<QMat>& inv,
                                                     const std::vector<Rational>& h)
{
    std::vector<Rational> best = h;
    std::size_t nz = nonzeros(h);
    const std::size_t d = static_cast<std::size_t>(fan.dim);
    QVec l(d);
    std::vector<Rational> g(h.size());
    for (std::size_t c = 0; c < fan.cones.size() && nz > 0; ++c) {
        const auto& cone = fan.cones[c];
        for (std::size_t i = 0; i < d; ++i) {
            l[i] = 0;
            for (std::size_t j = 0; j < d; ++j)
                l[i] += inv[c][i][j] * h[cone[j]];
        }
        std::size_t k = 0;
        for (std::size_t r = 0; r < h.size() && k < nz; ++r) {
            g[r] = h[r] - dot(l, fan.rays[r]);
            k += g[r] != 0;
        }
        if (k < nz) {
            nz = k;
            best = g;
        }
    }
    return best;
}

inline std::vector<Rational> sparsest_representative(const Fan& fan, const std::vector<Rational>& h)
{
    return sparsest_representative(fan, cone_inverses(fan), h);
}

// Star of ray rho in N / Z u_rho, with each class restricted to the orbit closure.
inline std::pair<Fan, std::vector<std::vector<Rational>>>
star_restriction(const Fan& fan, int rho, const std::vector<std::vector<Rational>>& classes)
{
    const IVec& u = fan.rays[rho];
    IMat U = unimodular_completion(u);
    const IVec& f = U[0];
    Fan star;
    star.dim = fan.dim - 1;
    std::map<int, int> index;      // old ray -> new ray
    std::vector<long long> mult;   // content of the image of each new ray
    std::vector<int> source;
    for (const auto& cone : fan.cones) {
        if (!std::binary_search(cone.begin(), cone.end(), rho))
            continue;
        std::vector<int> c;
        for (int r : cone) {
            if (r == rho)
                continue;
            auto it = index.find(r);
            if (it == index.end()) {
                IVec img = mat_vec(U, fan.rays[r]);
                IVec q(img.begin() + 1, img.end());
                long long k = content(q);
                star.rays.push_back(primitive(q));
                mult.push_back(k);
                source.push_back(r);
                it = index.emplace(r, static_cast<int>(star.rays.size()) - 1).first;
            }
            c.push_back(it->second);
        }
        std::sort(c.begin(), c.end());
        star.cones.push_back(c);
    }
    std::vector<std::vector<Rational>> out;
    for (const auto& h : classes) {
        std::vector<Rational> g(star.rays.size());
        for (std::size_t i = 0; i < star.rays.size(); ++i) {
            int r = source[i];
            g[i] = (h[r] - h[rho] * static_cast<long>(dot(f, fan.rays[r]))) / static_cast<long>(mult[i]);
        }
        out.push_back(std::move(g));
    }
    return {star, out};
}

} // namespace detail

// D_{h_1} ... D_{h_d} on a complete simplicial fan by restriction to orbit closures.
inline Rational intersect_recursive(const Fan& fan, std::vector<std::vector<Rational>> classes)
{
    const std::size_t d = static_cast<std::size_t>(fan.dim);
    if (classes.size() != d)
        throw std::invalid_argument("intersection needs as many classes as the dimension");
    for (const auto& h : classes)
        if (h.size() != fan.rays.size())
            throw std::invalid_argument("class does not live on this fan");
    const auto inv = detail::cone_inverses(fan);
    for (auto& h : classes)
        h = detail::sparsest_representative(fan, inv, h);
    std::size_t first = 0;
    for (std::size_t k = 1; k < d; ++k)
        if (detail::nonzeros(classes[k]) < detail::nonzeros(classes[first]))
            first = k;
    std::swap(classes[0], classes[first]);
    if (d == 1) {
        Rational s = 0;
        for (const auto& x : classes[0])
            s += x;
        return s;
    }
    std::vector<std::vector<Rational>> rest(classes.begin() + 1, classes.end());
    Rational total = 0;
    for (std::size_t rho = 0; rho < fan.rays.size(); ++rho) {
        const Rational& c = classes[0][rho];
        if (c == 0)
            continue;
        auto [star, restricted] = detail::star_restriction(fan, static_cast<int>(rho), rest);
        total += c * intersect_recursive(star, std::move(restricted));
    }
    return total;
}

} // namespace napp
