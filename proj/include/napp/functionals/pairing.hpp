#pragma once

#include "napp/intersect/intersection.hpp"

#include <stdexcept>
#include <vector>

namespace napp {

// alpha = a H on P^n.
struct KahlerSetup {
    int n = 1;
    Rational alpha = 1;
    Rational zeta = -2;  // -c_1(X) as a multiple of H
    Rational V = 1;      // alpha^n
    Rational sbar = 2;   // n (-zeta) alpha^{n-1} / alpha^n
    IntersectMode mode = IntersectMode::recursion;

    static KahlerSetup projective(int n, const Rational& a, IntersectMode mode = IntersectMode::recursion)
    {
        if (n < 1)
            throw std::invalid_argument("n must be positive");
        if (a <= 0)
            throw std::invalid_argument("alpha must be a positive multiple of H");
        KahlerSetup s;
        s.n = n;
        s.alpha = a;
        s.zeta = -(n + 1);
        s.V = 1;
        for (int i = 0; i < n; ++i)
            s.V *= a;
        s.sbar = Rational(n) * (-s.zeta) / a;
        s.mode = mode;
        return s;
    }
};

// A slot (beta, phi) of the energy pairing with beta = c H.
struct PairingSlot {
    Rational beta;
    PLFunction phi;
};

inline std::vector<FlagIdeal> collect_ideals(const std::vector<PLFunction>& fs)
{
    std::vector<FlagIdeal> out;
    for (const auto& f : fs)
        for (const auto& a : f.flag_ideals()) {
            bool dup = false;
            for (const auto& b : out)
                dup |= b == a;
            if (!dup)
                out.push_back(a);
        }
    return out;
}

// A test configuration on which every function is determined.
inline ToricTestConfig common_testconfig(int n, const std::vector<PLFunction>& fs)
{
    for (const auto& f : fs)
        if (f.n != n)
            throw std::invalid_argument("PL function over a different base");
    return build_testconfig(n, collect_ideals(fs));
}

inline Rational energy_pairing(const ToricTestConfig& tc, const std::vector<PairingSlot>& slots,
                               IntersectMode mode = IntersectMode::recursion)
{
    if (static_cast<int>(slots.size()) != tc.n + 1)
        throw std::invalid_argument("energy pairing needs n + 1 slots, got " + std::to_string(slots.size()));
    std::vector<ToricClass> cls;
    for (const auto& s : slots)
        cls.push_back(class_of(tc, s.beta, s.phi));
    return intersection_number(cls, tc, mode);
}

// (beta_0 + D_0) ... (beta_n + D_n) on a common test configuration built on demand.
inline Rational energy_pairing(int n, const std::vector<PairingSlot>& slots,
                               IntersectMode mode = IntersectMode::recursion)
{
    if (static_cast<int>(slots.size()) != n + 1)
        throw std::invalid_argument("energy pairing needs n + 1 slots, got " + std::to_string(slots.size()));
    std::vector<PLFunction> fs;
    for (const auto& s : slots)
        fs.push_back(s.phi);
    return energy_pairing(common_testconfig(n, fs), slots, mode);
}

} // namespace napp
