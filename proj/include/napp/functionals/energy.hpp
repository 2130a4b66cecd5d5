#pragma once

#include "napp/functionals/pairing.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace napp {

struct MAAtom {
    int ray;
    GaussValuation v;
    Rational mass;
};

struct MAMeasure {
    std::vector<MAAtom> atoms;

    Rational total_mass() const
    {
        Rational s = 0;
        for (const auto& a : atoms)
            s += a.mass;
        return s;
    }

    // sum c_E f(v_E)
    Rational integrate(const PLFunction& f) const
    {
        Rational s = 0;
        for (const auto& a : atoms)
            if (a.mass != 0)
                s += a.mass * eval(f, a.v);
        return s;
    }
};

// c_E = (b_E / V) (alpha_X + D)^n . E
inline MAMeasure ma_measure(const KahlerSetup& S, const ToricTestConfig& tc, const PLFunction& phi)
{
    ToricClass c = class_of(tc, S.alpha, phi);
    MAMeasure mu;
    for (int r : tc.vertical_rays()) {
        std::vector<ToricClass> cls(S.n, c);
        cls.push_back(ray_class(tc, r));
        Rational m = intersection_number(cls, tc, S.mode) * static_cast<long>(tc.b[r]) / S.V;
        mu.atoms.push_back(MAAtom{r, gauss_extend(tc.vertex_weight(r)), m});
    }
    return mu;
}

inline MAMeasure ma_measure(const KahlerSetup& S, const PLFunction& phi)
{
    return ma_measure(S, common_testconfig(S.n, {phi}), phi);
}

inline Rational energy(const KahlerSetup& S, const ToricTestConfig& tc, const PLFunction& phi)
{
    ToricClass c = class_of(tc, S.alpha, phi);
    std::vector<ToricClass> cls(S.n + 1, c);
    return intersection_number(cls, tc, S.mode) / (S.V * (S.n + 1));
}

inline Rational energy(const KahlerSetup& S, const PLFunction& phi)
{
    return energy(S, common_testconfig(S.n, {phi}), phi);
}

// V^{-1} (beta, 0) . (alpha, phi)^n with beta = c H.
inline Rational twisted_energy(const KahlerSetup& S, const ToricTestConfig& tc, const Rational& beta,
                               const PLFunction& phi)
{
    ToricClass c = class_of(tc, S.alpha, phi);
    std::vector<ToricClass> cls(S.n, c);
    cls.push_back(alpha_class(tc, beta));
    return intersection_number(cls, tc, S.mode) / S.V;
}

inline Rational twisted_energy(const KahlerSetup& S, const Rational& beta, const PLFunction& phi)
{
    return twisted_energy(S, common_testconfig(S.n, {phi}), beta, phi);
}

// int f dMA(phi) = V^{-1} (0, f) . (alpha, phi)^n
inline Rational integrate(const KahlerSetup& S, const ToricTestConfig& tc, const PLFunction& f,
                          const PLFunction& phi)
{
    ToricClass c = class_of(tc, S.alpha, phi);
    std::vector<ToricClass> cls(S.n, c);
    cls.push_back(class_of(tc, 0, f));
    return intersection_number(cls, tc, S.mode) / S.V;
}

inline Rational integrate(const KahlerSetup& S, const PLFunction& f, const PLFunction& phi)
{
    return integrate(S, common_testconfig(S.n, {f, phi}), f, phi);
}

// J(phi, psi) = E(phi) - E(psi) + int (psi - phi) dMA(phi)
inline Rational j_functional(const KahlerSetup& S, const PLFunction& phi, const PLFunction& psi)
{
    auto tc = common_testconfig(S.n, {phi, psi});
    return energy(S, tc, phi) - energy(S, tc, psi) + integrate(S, tc, pl_sub(psi, phi), phi);
}

inline Rational j_functional(const KahlerSetup& S, const PLFunction& phi)
{
    return j_functional(S, phi, pl_zero(S.n));
}

// I(phi, psi) = int (phi - psi) (dMA(psi) - dMA(phi))
inline Rational i_functional(const KahlerSetup& S, const PLFunction& phi, const PLFunction& psi)
{
    auto tc = common_testconfig(S.n, {phi, psi});
    PLFunction d = pl_sub(phi, psi);
    return integrate(S, tc, d, psi) - integrate(S, tc, d, phi);
}

inline Rational i_functional(const KahlerSetup& S, const PLFunction& phi)
{
    return i_functional(S, phi, pl_zero(S.n));
}

// -(0, psi1)(0, psi2) . Gamma with Gamma a list of n - 1 slots.
inline Rational seminorm_pairing(int n, const PLFunction& psi1, const PLFunction& psi2,
                                 const std::vector<PairingSlot>& gamma,
                                 IntersectMode mode = IntersectMode::recursion)
{
    if (static_cast<int>(gamma.size()) != n - 1)
        throw std::invalid_argument("seminorm needs n - 1 slots in Gamma, got " + std::to_string(gamma.size()));
    std::vector<PairingSlot> slots{{0, psi1}, {0, psi2}};
    for (const auto& g : gamma)
        slots.push_back(g);
    return -energy_pairing(n, slots, mode);
}

struct Seminorm {
    Rational squared;
    std::optional<Rational> exact; // set when squared is a rational square

    std::string str() const
    {
        if (exact)
            return to_string(*exact);
        return "sqrt(" + to_string(squared) + ")";
    }
};

inline Seminorm seminorm(int n, const PLFunction& psi, const std::vector<PairingSlot>& gamma,
                         IntersectMode mode = IntersectMode::recursion)
{
    Seminorm s;
    s.squared = seminorm_pairing(n, psi, psi, gamma, mode);
    Rational r;
    if (rational_sqrt(s.squared, r))
        s.exact = r;
    return s;
}

} // namespace napp
