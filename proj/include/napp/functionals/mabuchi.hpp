#pragma once

#include "napp/functionals/energy.hpp"
#include "napp/testconfig/dual_complex.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace napp {

// H = sum_E c_E A(v_E) with A the log discrepancy on X x P^1.
inline Rational entropy(const ToricTestConfig& tc, const MAMeasure& mu)
{
    Rational h = 0;
    for (const auto& a : mu.atoms)
        if (a.mass != 0)
            h += a.mass * log_discrepancy_vertex(tc, a.ray);
    return h;
}

inline Rational entropy(const KahlerSetup& S, const PLFunction& phi)
{
    auto tc = common_testconfig(S.n, {phi});
    return entropy(tc, ma_measure(S, tc, phi));
}

struct EnergyReport {
    Rational E, E_twisted, I, J, H, M;
    Rational H_X, M_X; // with the X-relative log discrepancy A - 1
    Rational sbar, mass;
    Seminorm seminorm;  // against Gamma = (alpha, 0)^{n-1}
    std::optional<Rational> delta_ratio; // M / J, empty when J = 0
    MAMeasure ma;

    std::string delta_str() const { return delta_ratio ? to_string(*delta_ratio) : std::string("inf"); }
};

inline EnergyReport mabuchi(const KahlerSetup& S, const PLFunction& phi)
{
    auto tc = common_testconfig(S.n, {phi});
    EnergyReport r;
    r.ma = ma_measure(S, tc, phi);
    r.mass = r.ma.total_mass();
    r.sbar = S.sbar;
    r.E = energy(S, tc, phi);
    r.E_twisted = twisted_energy(S, tc, S.zeta, phi);
    r.H = entropy(tc, r.ma);
    r.H_X = r.H - r.mass;
    r.M = S.sbar * r.E + r.E_twisted + r.H;
    r.M_X = r.M - r.mass;
    // J(phi, 0) and I(phi, 0); E(0) = 0 and MA(0) is the Dirac mass at the trivial valuation.
    PLFunction zero = pl_zero(S.n);
    r.J = r.E + integrate(S, tc, pl_neg(phi), phi);
    r.I = integrate(S, tc, phi, zero) - integrate(S, tc, phi, phi);
    std::vector<PairingSlot> gamma(S.n - 1, PairingSlot{S.alpha, zero});
    r.seminorm = seminorm(S.n, phi, gamma, S.mode);
    if (r.J != 0)
        r.delta_ratio = r.M / r.J;
    return r;
}

struct CoercivityResult {
    Rational delta;
    std::size_t witness;
    std::vector<std::string> warnings;
    bool destabilizer_found;
};

inline CoercivityResult coercivity_scan(const KahlerSetup& S, const std::vector<PLFunction>& family)
{
    if (family.empty())
        throw std::invalid_argument("coercivity scan needs a nonempty family");
    CoercivityResult res{0, 0, {}, false};
    bool any = false;
    for (std::size_t i = 0; i < family.size(); ++i) {
        auto tc = common_testconfig(S.n, {family[i]});
        if (!is_relatively_nef(class_of(tc, S.alpha, family[i]), tc)) {
            res.warnings.push_back("member " + std::to_string(i) + " skipped: not psh for alpha");
            continue;
        }
        EnergyReport r = mabuchi(S, family[i]);
        if (!r.delta_ratio) {
            res.warnings.push_back("member " + std::to_string(i) + " skipped: J = 0");
            continue;
        }
        if (!any || *r.delta_ratio < res.delta) {
            res.delta = *r.delta_ratio;
            res.witness = i;
            any = true;
        }
    }
    if (!any)
        throw std::invalid_argument("no family member is psh with J > 0");
    res.destabilizer_found = res.delta <= 0;
    return res;
}

} // namespace napp
