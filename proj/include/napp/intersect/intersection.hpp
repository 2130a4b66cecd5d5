#pragma once

#include "napp/intersect/polytope.hpp"
#include "napp/intersect/recursion.hpp"
#include "napp/intersect/toric_class.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace napp {

enum class IntersectMode { recursion, volume, cross_check };

struct CrossCheckError : std::runtime_error {
    Rational recursion_value, volume_value;

    CrossCheckError(const Rational& a, const Rational& b)
        : std::runtime_error("intersection algorithms disagree: recursion " + to_string(a) + ", volume " +
                             to_string(b)),
          recursion_value(a), volume_value(b)
    {
    }
};

// Nonnegative degree on every torus-invariant curve lying in a fiber over P^1.
inline bool is_relatively_nef(const ToricClass& c, const ToricTestConfig& tc)
{
    if (c.values.size() != tc.fan.rays.size())
        throw std::invalid_argument("class does not live on this test configuration");
    for (const auto& w : fan_walls(tc.fan)) {
        bool horizontal = std::all_of(w.face.begin(), w.face.end(), [&](int r) { return tc.ray_s(r) == 0; });
        if (horizontal)
            continue;
        QVec l = linear_on_cone(tc.fan, tc.fan.cones[w.cone1], c.values);
        if (dot(l, tc.fan.rays[w.opp2]) > c.values[w.opp2])
            return false;
    }
    return true;
}

// Product of arbitrary classes by writing each as (h + K G) - K G with G the
// strictly convex witness, expanding, and evaluating mixed volumes.
inline Rational intersect_by_volumes(const Fan& fan, const std::vector<Rational>& witness,
                                     const std::vector<std::vector<Rational>>& classes)
{
    const std::size_t d = classes.size();
    std::vector<std::vector<Rational>> pos(d);
    std::vector<Rational> Ks(d, 0);
    for (std::size_t k = 0; k < d; ++k) {
        Rational K = 0;
        std::vector<Rational> h = classes[k];
        while (!is_convex(fan, h)) {
            K = K == 0 ? Rational(1) : K * 2;
            for (std::size_t r = 0; r < h.size(); ++r)
                h[r] = classes[k][r] + K * witness[r];
        }
        pos[k] = h;
        Ks[k] = K;
    }
    std::map<std::vector<Rational>, Rational> volumes;
    auto mixed = [&](const std::vector<std::vector<Rational>>& hs) {
        Rational t = 0;
        for (unsigned m = 1; m < (1u << d); ++m) {
            std::vector<Rational> sum(fan.rays.size(), 0);
            int k = 0;
            for (std::size_t i = 0; i < d; ++i)
                if (m & (1u << i)) {
                    ++k;
                    for (std::size_t r = 0; r < sum.size(); ++r)
                        sum[r] += hs[i][r];
                }
            auto it = volumes.find(sum);
            if (it == volumes.end())
                it = volumes.emplace(sum, fan_polytope_volume(fan, sum)).first;
            if ((d - k) % 2)
                t -= it->second;
            else
                t += it->second;
        }
        return t;
    };
    std::map<std::vector<std::vector<Rational>>, Rational> memo;
    Rational total = 0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        Rational coef = 1;
        std::vector<std::vector<Rational>> slots;
        bool zero = false;
        for (std::size_t k = 0; k < d; ++k) {
            if (mask & (1u << k)) {
                if (Ks[k] == 0) {
                    zero = true;
                    break;
                }
                coef *= -Ks[k];
                slots.push_back(witness);
            } else {
                slots.push_back(pos[k]);
            }
        }
        if (zero)
            continue;
        std::sort(slots.begin(), slots.end());
        auto it = memo.find(slots);
        if (it == memo.end())
            it = memo.emplace(slots, mixed(slots)).first;
        total += coef * it->second;
    }
    return total;
}

inline Rational intersection_number(const std::vector<ToricClass>& classes, const ToricTestConfig& tc,
                                    IntersectMode mode = IntersectMode::recursion)
{
    if (static_cast<int>(classes.size()) != tc.fan.dim)
        throw std::invalid_argument("intersection needs exactly n + 1 classes, got " +
                                    std::to_string(classes.size()));
    std::vector<std::vector<Rational>> hs;
    for (const auto& c : classes) {
        if (c.values.size() != tc.fan.rays.size())
            throw std::invalid_argument("class does not live on this test configuration");
        hs.push_back(c.values);
    }
    if (mode == IntersectMode::recursion)
        return intersect_recursive(tc.fan, hs);
    Rational vol = intersect_by_volumes(tc.fan, tc.witness, hs);
    if (mode == IntersectMode::volume)
        return vol;
    Rational rec = intersect_recursive(tc.fan, hs);
    if (rec != vol)
        throw CrossCheckError(rec, vol);
    return rec;
}

} // namespace napp
