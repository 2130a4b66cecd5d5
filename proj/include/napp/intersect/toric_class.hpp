#pragma once

#include "napp/testconfig/build.hpp"
#include "napp/testconfig/dictionary.hpp"
#include "napp/testconfig/dual_complex.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace napp {

// Equivariant Q-divisor sum_rho h(u_rho) D_rho on the fan of a test
// configuration; nef iff h is convex.
struct ToricClass {
    std::vector<Rational> values;
    std::string tag;

    friend ToricClass operator+(const ToricClass& a, const ToricClass& b)
    {
        if (a.values.size() != b.values.size())
            throw std::invalid_argument("classes on different fans");
        ToricClass r{a.values, ""};
        for (std::size_t i = 0; i < r.values.size(); ++i)
            r.values[i] += b.values[i];
        return r;
    }

    friend ToricClass operator-(const ToricClass& a, const ToricClass& b)
    {
        return a + b * Rational(-1);
    }

    friend ToricClass operator*(const ToricClass& a, const Rational& t)
    {
        ToricClass r{a.values, ""};
        for (auto& v : r.values)
            v *= t;
        return r;
    }
};

// Pullback of c H from P^n.
inline ToricClass alpha_class(const ToricTestConfig& tc, const Rational& c)
{
    ToricClass k{std::vector<Rational>(tc.fan.rays.size()), "alpha"};
    for (std::size_t r = 0; r < tc.fan.rays.size(); ++r)
        k.values[r] = c * hyperplane_support(tc.ray_N(static_cast<int>(r)));
    return k;
}

// The central fiber X_0 = sum b_E E.
inline ToricClass fiber_class(const ToricTestConfig& tc)
{
    ToricClass k{std::vector<Rational>(tc.fan.rays.size()), "X0"};
    for (std::size_t r = 0; r < tc.fan.rays.size(); ++r)
        if (tc.vertical[r])
            k.values[r] = static_cast<long>(tc.b[r]);
    return k;
}

// A single torus-invariant prime divisor.
inline ToricClass ray_class(const ToricTestConfig& tc, int ray)
{
    ToricClass k{std::vector<Rational>(tc.fan.rays.size()), "D" + std::to_string(ray)};
    k.values.at(ray) = 1;
    return k;
}

inline ToricClass divisor_class(const ToricTestConfig& tc, const VerticalDivisor& D)
{
    ToricClass k{std::vector<Rational>(tc.fan.rays.size()), "D"};
    for (const auto& [r, c] : D.coeffs)
        k.values.at(r) = c;
    return k;
}

// beta_X + D_phi with beta = c H.
inline ToricClass class_of(const ToricTestConfig& tc, const Rational& c, const PLFunction& phi)
{
    return alpha_class(tc, c) + divisor_class(tc, pl_to_divisor(phi, tc));
}

// Pullback of a class to a refinement: evaluate its support function at the new rays.
inline ToricClass pullback_class(const ToricClass& k, const Fan& coarse, const Fan& fine)
{
    ToricClass r{std::vector<Rational>(fine.rays.size()), k.tag};
    for (std::size_t i = 0; i < fine.rays.size(); ++i)
        r.values[i] = eval_on_fan(coarse, k.values, to_q(fine.rays[i]));
    return r;
}

} // namespace napp
