#pragma once

#include "napp/flagideal/pl_function.hpp"
#include "napp/testconfig/build.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace napp {

// C*-invariant Q-Cartier divisor supported on the central fiber.
struct VerticalDivisor {
    std::map<int, Rational> coeffs;

    Rational at(int ray) const
    {
        auto it = coeffs.find(ray);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
};

namespace detail {

// Index of a point of `a` attaining the min of <gamma, W> + lambda s at every
// ray of `cone`, or -1.
inline int common_minimizer(const ToricTestConfig& tc, const FlagIdeal& a, const std::vector<int>& cone)
{
    auto pts = a.homogeneous_points();
    std::vector<std::vector<Rational>> vals(pts.size());
    std::vector<Rational> best;
    for (int r : cone) {
        QVec W = homogeneous_from_N(tc.ray_N(r));
        Rational s = static_cast<long>(tc.ray_s(r));
        Rational m;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            Rational v = s * static_cast<long>(pts[k].back());
            for (int i = 0; i <= tc.n; ++i)
                v += W[i] * static_cast<long>(pts[k][i]);
            vals[k].push_back(v);
            if (k == 0 || v < m)
                m = v;
        }
        best.push_back(m);
    }
    for (std::size_t k = 0; k < pts.size(); ++k)
        if (vals[k] == best)
            return static_cast<int>(k);
    return -1;
}

inline bool is_upper_cone(const ToricTestConfig& tc, const std::vector<int>& cone)
{
    for (int r : cone)
        if (tc.ray_s(r) < 0)
            return false;
    return true;
}

} // namespace detail

// phi -> sum_E b_E phi(v_E) E, after checking that each flag ideal of phi is
// principal on every chart of the fan.
inline VerticalDivisor pl_to_divisor(const PLFunction& phi, const ToricTestConfig& tc)
{
    if (phi.n != tc.n)
        throw std::invalid_argument("PL function over a different base");
    for (const auto& a : phi.flag_ideals())
        for (const auto& cone : tc.fan.cones)
            if (detail::is_upper_cone(tc, cone) && detail::common_minimizer(tc, a, cone) < 0)
                throw std::invalid_argument("test configuration too coarse: refine it by the blow-up of " + a.str());
    VerticalDivisor D;
    for (int r : tc.vertical_rays())
        D.coeffs[r] = eval_homogeneous(phi, tc.ray_N(r), Rational(static_cast<long>(tc.ray_s(r))));
    return D;
}

namespace detail {

// A support function F on the fan, convex and vanishing on s <= 0 up to a
// global linear function and a multiple of h_H, as (1/m) phi_A plus the rest.
struct ConvexDecomposition {
    PLPart part;     // F = L + a0 h_H - (1/m) psi_A on s > 0
    Rational a0;
    QVec linear;     // (mu0, kappa)
};

inline ConvexDecomposition decompose_convex(const ToricTestConfig& tc, const std::vector<Rational>& F)
{
    const int n = tc.n;
    const Fan& fan = tc.fan;
    auto value_at = [&](const IVec& ray) { return F[find_ray(fan, ray)]; };
    QVec mu0(n);
    Rational sum_mu = 0;
    for (int i = 1; i <= n; ++i) {
        IVec r = base_ray(n, i);
        r.push_back(0);
        mu0[i - 1] = value_at(r);
        sum_mu += mu0[i - 1];
    }
    IVec e0 = base_ray(n, 0);
    e0.push_back(0);
    Rational a0 = value_at(e0) + sum_mu;
    IVec down(n + 1, 0);
    down[n] = -1;
    Rational kappa = -value_at(down);

    std::vector<Rational> Fp(F.size());
    for (std::size_t r = 0; r < F.size(); ++r) {
        Rational lin = kappa * static_cast<long>(fan.rays[r][n]);
        for (int i = 0; i < n; ++i)
            lin += mu0[i] * static_cast<long>(fan.rays[r][i]);
        Fp[r] = F[r] - lin;
    }

    std::vector<std::pair<QVec, Rational>> pieces; // (mu~ homogeneous, nu)
    Integer m = a0.get_den();
    for (const auto& cone : fan.cones) {
        if (!is_upper_cone(tc, cone))
            continue;
        QVec l = linear_on_cone(fan, cone, Fp);
        QVec mut(n + 1);
        Rational s = 0;
        for (int i = 0; i < n; ++i) {
            mut[i + 1] = l[i];
            s += l[i];
            m = lcm(m, l[i].get_den());
        }
        mut[0] = -s;
        m = lcm(m, l[n].get_den());
        pieces.emplace_back(mut, l[n]);
    }
    long long mm = to_ll(m);
    std::vector<IVec> pts;
    for (const auto& [mut, nu] : pieces) {
        IVec p(n + 2);
        for (int i = 0; i <= n; ++i) {
            Rational g = (i == 0 ? a0 : Rational(0)) - mut[i];
            g *= static_cast<long>(mm);
            if (g < 0 || g.get_den() != 1)
                throw std::logic_error("support function is not convex");
            p[i] = to_ll(g.get_num());
        }
        Rational lam = -nu * static_cast<long>(mm);
        p[n + 1] = to_ll(lam.get_num());
        pts.push_back(p);
    }
    FlagIdeal A = FlagIdeal::from_points(n, -1, pts).newton_reduced();
    QVec linear = mu0;
    linear.push_back(kappa);
    return ConvexDecomposition{PLPart{A, mm}, a0, linear};
}

} // namespace detail

// D -> phi_D with phi_D(v_E) = ord_E(D) / b_E, as a difference of two
// homogeneous flag ideals built from D + K G and K G for a strictly convex G.
inline PLFunction divisor_to_pl(const VerticalDivisor& D, const ToricTestConfig& tc)
{
    const std::size_t R = tc.fan.rays.size();
    std::vector<Rational> phi(R, 0);
    for (const auto& [r, c] : D.coeffs) {
        if (r < 0 || r >= static_cast<int>(R) || !tc.vertical[r])
            throw std::invalid_argument("divisor coefficient on a non-vertical ray");
        phi[r] = c;
    }
    bool zero = std::all_of(phi.begin(), phi.end(), [](const Rational& x) { return x == 0; });
    if (zero)
        return pl_zero(tc.n);
    // Smallest integer K with phi + K G convex.
    Rational K = 0;
    for (const auto& row : detail::wall_rows(tc.fan)) {
        Rational rp = 0, rg = 0;
        for (std::size_t r = 0; r < R; ++r) {
            rp += Rational(row[r]) * phi[r];
            rg += Rational(row[r]) * tc.witness[r];
        }
        if (rp < 0 && -rp / rg > K)
            K = -rp / rg;
    }
    {
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), K.get_num_mpz_t(), K.get_den_mpz_t());
        K = Rational(c);
    }
    std::vector<Rational> F(R);
    for (std::size_t r = 0; r < R; ++r)
        F[r] = phi[r] + K * tc.witness[r];
    if (!is_convex(tc.fan, F))
        throw std::logic_error("could not make the divisor convex with the witness");
    std::vector<Rational> KG(R);
    for (std::size_t r = 0; r < R; ++r)
        KG[r] = K * tc.witness[r];
    auto dF = detail::decompose_convex(tc, F);
    auto dG = detail::decompose_convex(tc, KG);
    PLFunction f = pl_zero(tc.n);
    f.plus = dF.part;
    f.minus = dG.part;
    for (int r : tc.vertical_rays())
        if (eval_homogeneous(f, tc.ray_N(r), Rational(static_cast<long>(tc.ray_s(r)))) != phi[r])
            throw std::logic_error("divisor_to_pl failed its own verification");
    return f;
}

} // namespace napp
