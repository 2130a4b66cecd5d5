#pragma once

#include "napp/flagideal/sup_formula.hpp"
#include "napp/functionals/mabuchi.hpp"
#include "napp/functionals/random.hpp"
#include "napp/functionals/zariski.hpp"
#include "napp/testconfig/dual_complex.hpp"
#include "napp/valuations/newton.hpp"

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace napp {

struct PropertyResult {
    std::string name;
    bool passed = true;
    long cases = 0;
    std::string detail;
    double seconds = 0;
};

struct SuiteConfig {
    int mass_cases = 50;
    int zariski_cases = 25;
    int gauss_cases = 100;
    int closure_cases = 100;
    int rees_cases = 25;
    int pairing_cases = 20;
    int derivative_cases = 12;
    int logdisc_cases = 20;
    int oracle_cases = 50;
    int subdivision_cases = 10;
    int retraction_cases = 15;
};

namespace detail {

// Runs body(i, fail) for i < cases; stops at the first failure or exception.
inline PropertyResult run_property(const std::string& name, int cases,
                                   const std::function<void(int, std::function<void(const std::string&)>&)>& body)
{
    PropertyResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    std::function<void(const std::string&)> fail = [&](const std::string& msg) {
        if (r.passed) {
            r.passed = false;
            r.detail = msg;
        }
    };
    for (int i = 0; i < cases && r.passed; ++i) {
        try {
            body(i, fail);
        } catch (const std::exception& e) {
            fail(std::string("case ") + std::to_string(i) + ": exception: " + e.what());
        }
        ++r.cases;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::string case_msg(int i, const std::string& what) { return "case " + std::to_string(i) + ": " + what; }

inline Rational random_alpha(Rng& rng)
{
    static const long den[] = {1, 1, 2, 1};
    long q = den[uniform(rng, 0, 3)];
    return make_rational(uniform(rng, q, 3 * q), q);
}

// Convex support function on the fan: combination of the witness, h_H, the
// fiber and a small random perturbation.
inline ToricClass random_nef_class(Rng& rng, const ToricTestConfig& tc)
{
    const std::size_t R = tc.fan.rays.size();
    for (;;) {
        Rational x = random_rational(rng, 1, 3), y = random_rational(rng, 0, 3), z = random_rational(rng, 0, 3);
        ToricClass k{std::vector<Rational>(R), "nef"};
        ToricClass h = alpha_class(tc, 1), f = fiber_class(tc);
        for (std::size_t r = 0; r < R; ++r)
            k.values[r] = x * tc.witness[r] + y * h.values[r] + z * f.values[r] +
                          make_rational(uniform(rng, -2, 2), 8);
        if (is_convex(tc.fan, k.values))
            return k;
    }
}

inline ToricTestConfig random_testconfig(Rng& rng, int n, int ideals = 1)
{
    std::vector<FlagIdeal> as;
    for (int k = 0; k < ideals; ++k)
        as.push_back(random_flag_ideal(rng, n, -2, 3, 2));
    return build_testconfig(n, as);
}

inline std::vector<int> random_face(Rng& rng, const ToricTestConfig& tc, bool vertical_only)
{
    for (;;) {
        const auto& cone = tc.fan.cones[uniform(rng, 0, static_cast<long long>(tc.fan.cones.size()) - 1)];
        std::vector<int> pool;
        for (int r : cone)
            if (!vertical_only || tc.vertical[r])
                pool.push_back(r);
        if (pool.size() < 2)
            continue;
        std::vector<int> face;
        for (int r : pool)
            if (uniform(rng, 0, 1))
                face.push_back(r);
        if (face.size() >= 2)
            return face;
    }
}

// Coefficients of the polynomial of degree < xs.size() through (xs, ys).
inline QVec interpolate(const QVec& xs, const QVec& ys)
{
    const std::size_t k = xs.size();
    QMat A(k, QVec(k));
    for (std::size_t i = 0; i < k; ++i) {
        Rational p = 1;
        for (std::size_t j = 0; j < k; ++j) {
            A[i][j] = p;
            p *= xs[i];
        }
    }
    return *solve(A, ys);
}

inline Rational poly_eval(const QVec& c, const Rational& x)
{
    Rational v = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        v = v * x + c[i];
    return v;
}

inline Rational poly_second_derivative(const QVec& c, const Rational& x)
{
    QVec d;
    for (std::size_t i = 2; i < c.size(); ++i)
        d.push_back(c[i] * static_cast<long>(i * (i - 1)));
    return poly_eval(d, x);
}

inline PLFunction segment_point(const PLFunction& phi, const PLFunction& psi, const Rational& s)
{
    if (s == 0)
        return phi;
    if (s == 1)
        return psi;
    return pl_add(pl_scale(phi, 1 - s), pl_scale(psi, s));
}

} // namespace detail

// Sum of Monge-Ampere masses is one for relatively nef PL functions over P^1 and P^2.
inline PropertyResult prop_mass_one(Rng& rng, int cases)
{
    return detail::run_property("ma_mass_one", cases, [&](int i, auto& fail) {
        const int n = 1 + i % 2;
        auto S = KahlerSetup::projective(n, detail::random_alpha(rng));
        PLFunction phi = random_psh(rng, n, S.alpha);
        if (uniform(rng, 0, 2) == 0)
            phi = pl_max(phi, random_psh(rng, n, S.alpha));
        MAMeasure mu = ma_measure(S, phi);
        for (const auto& a : mu.atoms)
            if (a.mass < 0)
                fail(detail::case_msg(i, "negative mass " + to_string(a.mass)));
        if (mu.total_mass() != 1)
            fail(detail::case_msg(i, "total mass " + to_string(mu.total_mass()) + " for " + phi.str()));
    });
}

// Gram matrices of the pairing against psh Gamma are negative semidefinite;
// cross-validated on the vertical divisors by the kernel-vector lemma.
inline PropertyResult prop_zariski(Rng& rng, int cases)
{
    return detail::run_property("zariski_nsd", cases, [&](int i, auto& fail) {
        const int n = (i % 5 == 4) ? 3 : 1 + i % 2;
        const Rational alpha = detail::random_alpha(rng);
        const int e = n == 3 ? 1 : 2;
        std::vector<PLFunction> basis;
        const int k = static_cast<int>(uniform(rng, 2, 3));
        for (int j = 0; j < k; ++j)
            basis.push_back(uniform(rng, 0, 1) ? random_pl(rng, n, e, 2) : random_psh(rng, n, alpha, e, 2));
        basis.push_back(pl_constant(n, 1));
        std::vector<PairingSlot> gamma;
        for (int j = 0; j < n - 1; ++j)
            gamma.push_back(PairingSlot{alpha, random_psh(rng, n, alpha, e, 2)});
        ZariskiGram G = zariski_gram(n, basis, gamma);
        if (!G.is_nsd)
            fail(detail::case_msg(i, "Gram matrix not negative semidefinite"));
        if (nsd_by_principal_minors(G.matrix) != G.is_nsd)
            fail(detail::case_msg(i, "elimination and principal-minor verdicts differ"));
        std::vector<PLFunction> all = basis;
        for (const auto& g : gamma)
            all.push_back(g.phi);
        auto tc = common_testconfig(n, all);
        std::vector<ToricClass> gcls;
        for (const auto& g : gamma)
            gcls.push_back(class_of(tc, g.beta, g.phi));
        auto [B, b] = vertical_gram(tc, gcls);
        if (!bilinear_nsd_check(B, b))
            fail(detail::case_msg(i, "kernel-vector lemma check failed"));
        if (is_negative_semidefinite(B) != true)
            fail(detail::case_msg(i, "vertical Gram matrix not negative semidefinite"));
        if (i < 3) {
            // The same matrix through the PL dictionary.
            std::vector<PLFunction> Es;
            for (int r : tc.vertical_rays()) {
                VerticalDivisor D;
                D.coeffs[r] = 1;
                Es.push_back(divisor_to_pl(D, tc));
            }
            ZariskiGram GE = zariski_gram(n, Es, gamma);
            if (GE.matrix != B)
                fail(detail::case_msg(i, "Gram matrix of the vertical divisors differs through the dictionary"));
        }
    });
}

// r o sigma = id and the valuation laws of Gauss extensions.
inline PropertyResult prop_gauss(Rng& rng, int cases)
{
    return detail::run_property("gauss_round_trip", cases, [&](int i, auto& fail) {
        const int n = static_cast<int>(uniform(rng, 1, 3));
        const int chart = static_cast<int>(uniform(rng, 0, n));
        Weight v = random_weight(rng, n, chart);
        GaussValuation V = gauss_extend(v);
        MonomialIdeal I = random_monomial_ideal(rng, n, chart, 4, 3);
        if (restrict(V, I) != eval_valuation(v, I))
            fail(detail::case_msg(i, "restriction of the Gauss extension differs on " + I.str()));
        FlagIdeal a = random_flag_ideal(rng, n, chart), b = random_flag_ideal(rng, n, chart);
        FlagIdeal c = random_flag_ideal(rng, n); // possibly another chart
        TropicalValue va = gauss_eval(V, a), vb = gauss_eval(V, b), vc = gauss_eval(V, c);
        TropicalValue direct = TropicalValue::infinity();
        for (long long l = a.lambda_min(); l <= a.lambda_max(); ++l) {
            MonomialIdeal al = a.a(l);
            if (!al.is_zero())
                direct = direct + eval_valuation(v, al) * TropicalValue(Rational(static_cast<long>(l)));
        }
        if (va != direct)
            fail(detail::case_msg(i, "Gauss value differs from min over slices"));
        if (gauss_eval(V, a * b) != va * vb)
            fail(detail::case_msg(i, "product law"));
        if (gauss_eval(V, a + b) != va + vb)
            fail(detail::case_msg(i, "sum law"));
        if (gauss_eval(V, a * c) != va * vc || gauss_eval(V, a + c) != va + vc)
            fail(detail::case_msg(i, "laws across charts"));
        if (gauss_eval(V, a.to_homogeneous()) != va)
            fail(detail::case_msg(i, "homogeneous form evaluates differently"));
        if (gauss_eval(V, FlagIdeal::t_power(n, 1, chart)) != TropicalValue(1L))
            fail(detail::case_msg(i, "v(t) != 1"));
    });
}

inline PropertyResult prop_integral_closure(Rng& rng, int cases)
{
    return detail::run_property("integral_closure", cases, [&](int i, auto& fail) {
        const int n = static_cast<int>(uniform(rng, 1, 3));
        MonomialIdeal I = random_monomial_ideal(rng, n, 0, 5, 3);
        MonomialIdeal Ib = integral_closure(I);
        Weight v = random_weight(rng, n, 0, 4);
        if (eval_valuation(v, I) != eval_valuation(v, Ib))
            fail(detail::case_msg(i, "value changes under integral closure of " + I.str()));
        if (!(integral_closure(Ib) == Ib))
            fail(detail::case_msg(i, "integral closure not idempotent on " + I.str()));
        if (!I.subset_of(Ib))
            fail(detail::case_msg(i, "ideal not contained in its integral closure"));
    });
}

// Grid values never exceed the Rees maximum; the maximum equals the max over
// the vertices of a dominating test configuration.
inline PropertyResult prop_sup_rees(Rng& rng, int cases)
{
    return detail::run_property("sup_over_rees", cases, [&](int i, auto& fail) {
        const int n = 1 + i % 2;
        FlagIdeal a = random_flag_ideal(rng, n);
        while (a.is_unit())
            a = random_flag_ideal(rng, n);
        FlagIdeal b = uniform(rng, 0, 1) ? random_flag_ideal(rng, n, a.chart()) : random_flag_ideal(rng, n);
        const long long m = uniform(rng, 1, 3);
        SupResult res = sup_formula(b, m, a);
        PLFunction f = phi_of_flag(b);
        f.plus.m = m;
        f = pl_sub(f, phi_of_flag(a));
        if (eval(f, res.argmax) != res.sup)
            fail(detail::case_msg(i, "value at the argmax differs from the sup"));
        std::vector<long long> idx(n + 1, 0);
        for (;;) {
            if (idx[n] > 0) {
                QVec w;
                for (int k = 0; k < n; ++k)
                    w.push_back(make_rational(idx[k], idx[n]));
                if (eval(f, gauss_extend(Weight::finite(a.chart(), w))) > res.sup)
                    fail(detail::case_msg(i, "grid value exceeds the Rees maximum"));
            }
            int k = 0;
            while (k <= n && ++idx[k] > 4)
                idx[k++] = 0;
            if (k > n)
                break;
        }
        auto tc = build_testconfig(n, {a, b});
        bool first = true;
        Rational best;
        for (int r : tc.vertical_rays()) {
            Rational val = eval(f, gauss_extend(tc.vertex_weight(r)));
            if (first || val > best)
                best = val;
            first = false;
        }
        if (best != res.sup)
            fail(detail::case_msg(i, "Rees maximum " + to_string(res.sup) + " but vertex maximum " + to_string(best)));
    });
}

// Symmetry, multilinearity and the basic identities of the energy pairing.
inline PropertyResult prop_pairing_algebra(Rng& rng, int cases)
{
    return detail::run_property("energy_pairing_algebra", cases, [&](int i, auto& fail) {
        const int n = (i % 6 == 5) ? 3 : 1 + i % 2;
        const IntersectMode mode = (i % 4 == 0) ? IntersectMode::cross_check : IntersectMode::recursion;
        std::vector<PairingSlot> slots;
        for (int k = 0; k <= n; ++k)
            slots.push_back(PairingSlot{random_rational(rng, -2, 2), random_pl(rng, n, n == 3 ? 1 : 3, 2)});
        PairingSlot extra{random_rational(rng, -2, 2), random_pl(rng, n, n == 3 ? 1 : 3, 2)};
        std::vector<PLFunction> fs;
        for (const auto& s : slots)
            fs.push_back(s.phi);
        fs.push_back(extra.phi);
        auto tc = common_testconfig(n, fs);
        Rational base = energy_pairing(tc, slots, mode);

        auto perm = slots;
        std::shuffle(perm.begin(), perm.end(), rng);
        if (energy_pairing(tc, perm, mode) != base)
            fail(detail::case_msg(i, "not symmetric"));

        auto sum = slots;
        sum[0] = PairingSlot{slots[0].beta + extra.beta, pl_add(slots[0].phi, extra.phi)};
        auto alt = slots;
        alt[0] = extra;
        if (energy_pairing(tc, sum, mode) != base + energy_pairing(tc, alt, mode))
            fail(detail::case_msg(i, "not additive in a slot"));

        Rational t = random_rational(rng, 1, 3);
        auto sc = slots;
        sc[0] = PairingSlot{slots[0].beta * t, pl_scale(slots[0].phi, t)};
        if (energy_pairing(tc, sc, mode) != t * base)
            fail(detail::case_msg(i, "not homogeneous in a slot"));

        auto shifted = slots;
        Rational c = random_rational(rng, -2, 2);
        shifted[0].phi = pl_add(slots[0].phi, pl_constant(n, c));
        auto fib = slots;
        fib[0] = PairingSlot{0, pl_constant(n, 1)};
        if (energy_pairing(tc, shifted, mode) != base + c * energy_pairing(tc, fib, mode))
            fail(detail::case_msg(i, "adding c X_0 does not shift by c times the fiber product"));

        Rational prod = 1;
        for (int k = 1; k <= n; ++k)
            prod *= slots[k].beta;
        if (energy_pairing(tc, fib, mode) != prod)
            fail(detail::case_msg(i, "(0,1) . (beta_i, phi_i) != prod beta_i"));

        auto zeros = slots;
        for (auto& s : zeros)
            s.phi = pl_zero(n);
        if (energy_pairing(tc, zeros, mode) != 0)
            fail(detail::case_msg(i, "(beta_i, 0) product is not zero"));

        Rational u = random_rational(rng, 1, 3);
        auto acted = slots;
        for (auto& s : acted)
            s.phi = pl_act(u, s.phi);
        if (energy_pairing(n, acted, mode) != u * base)
            fail(detail::case_msg(i, "R_{>0}-action does not scale the pairing"));

        auto S = KahlerSetup::projective(n, detail::random_alpha(rng), mode);
        PLFunction phi = random_psh(rng, n, S.alpha);
        PLFunction psi = random_pl(rng, n);
        auto tc2 = common_testconfig(n, {phi, psi});
        if (integrate(S, tc2, psi, phi) != ma_measure(S, tc2, phi).integrate(psi))
            fail(detail::case_msg(i, "V^{-1} (0,psi)(alpha,phi)^n differs from the MA integral"));
    });
}

// d/ds E(phi + s (psi - phi)) at 0 is int (psi - phi) dMA(phi); concavity.
inline PropertyResult prop_derivative(Rng& rng, int cases)
{
    return detail::run_property("energy_derivative_concavity", cases, [&](int i, auto& fail) {
        const int n = (i % 4 == 3) ? 3 : 1 + i % 2;
        auto S = KahlerSetup::projective(n, detail::random_alpha(rng));
        PLFunction phi = random_psh(rng, n, S.alpha, 2, 2);
        PLFunction psi = random_psh(rng, n, S.alpha, 2, 2);
        if (uniform(rng, 0, 1))
            psi = pl_add(psi, pl_constant(n, random_rational(rng, -1, 1)));
        QVec xs, ys;
        const QVec nodes{0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
        for (int k = 0; k < n + 2; ++k) {
            xs.push_back(nodes[k]);
            ys.push_back(energy(S, detail::segment_point(phi, psi, nodes[k])));
        }
        QVec c = detail::interpolate(xs, ys);
        Rational slope = integrate(S, pl_sub(psi, phi), phi);
        if (c[1] != slope)
            fail(detail::case_msg(i, "derivative " + to_string(c[1]) + " vs integral " + to_string(slope)));
        for (const auto& x : xs)
            if (detail::poly_second_derivative(c, x) > 0)
                fail(detail::case_msg(i, "energy not concave along the segment"));
        if (c.size() > static_cast<std::size_t>(n + 2))
            fail(detail::case_msg(i, "degree too high"));
    });
}

// A(sigma(ord_F)) = A_X(ord_F) + 1, A(sigma(v_triv)) = 1, A o p grows under refinement.
inline PropertyResult prop_log_discrepancy(Rng& rng, int cases)
{
    return detail::run_property("log_discrepancy", cases, [&](int i, auto& fail) {
        const int n = static_cast<int>(uniform(rng, 1, 3));
        const int chart = static_cast<int>(uniform(rng, 0, n));
        QVec w(n, 0);
        const Rational r = random_rational(rng, 1, 4);
        w[uniform(rng, 0, n - 1)] = r;
        Weight ordF = Weight::finite(chart, w);
        if (log_discrepancy_X(ordF) != r)
            fail(detail::case_msg(i, "A_X of a coordinate divisor is not its scaling"));
        if (log_discrepancy(gauss_extend(ordF)) != log_discrepancy_X(ordF) + 1)
            fail(detail::case_msg(i, "Gauss extension does not add 1"));
        if (log_discrepancy(gauss_extend(Weight::trivial(n, chart))) != 1)
            fail(detail::case_msg(i, "A(sigma(v_triv)) != 1"));
        const int m = 1 + i % 2;
        auto low = build_testconfig(random_flag_ideal(rng, m));
        auto mid = low;
        stellar_subdivide(mid, detail::random_face(rng, low, false));
        auto high = mid;
        stellar_subdivide(high, detail::random_face(rng, mid, false));
        for (int k = 0; k < 8; ++k) {
            GaussValuation v = gauss_extend(random_weight(rng, m, static_cast<int>(uniform(rng, 0, m))));
            Rational al = log_discrepancy(low, retraction(low, v));
            Rational am = log_discrepancy(mid, retraction(mid, v));
            Rational ah = log_discrepancy(high, retraction(high, v));
            Rational av = log_discrepancy(v);
            if (!(al <= am && am <= ah && ah <= av))
                fail(detail::case_msg(i, "A o p not monotone under refinement"));
        }
    });
}

// Recursion and volume algorithms agree on random nef tuples; products are
// invariant under a stellar subdivision.
inline PropertyResult prop_oracle(Rng& rng, int cases)
{
    return detail::run_property("intersection_oracle", cases, [&](int i, auto& fail) {
        const int n = 1 + i % 3;
        auto tc = detail::random_testconfig(rng, n, n == 3 ? 1 : 2);
        std::vector<ToricClass> cls;
        for (int k = 0; k <= n; ++k)
            cls.push_back(detail::random_nef_class(rng, tc));
        Rational rec = intersection_number(cls, tc, IntersectMode::recursion);
        Rational vol = intersection_number(cls, tc, IntersectMode::volume);
        if (rec != vol)
            fail(detail::case_msg(i, "recursion " + to_string(rec) + " vs volume " + to_string(vol)));
        if (rec < 0)
            fail(detail::case_msg(i, "nef product is negative"));
    });
}

inline PropertyResult prop_subdivision(Rng& rng, int cases)
{
    return detail::run_property("stellar_invariance", cases, [&](int i, auto& fail) {
        const int n = 1 + i % 3;
        auto tc = detail::random_testconfig(rng, n);
        std::vector<ToricClass> cls;
        for (int k = 0; k <= n; ++k)
            cls.push_back(uniform(rng, 0, 1) ? detail::random_nef_class(rng, tc)
                                             : class_of(tc, random_rational(rng, -2, 2), pl_zero(n)) +
                                                   divisor_class(tc, VerticalDivisor{{{tc.vertical_rays()[0],
                                                                                       random_rational(rng, -2, 2)}}}));
        Rational before = intersection_number(cls, tc);
        auto fine = tc;
        stellar_subdivide(fine, detail::random_face(rng, tc, false));
        std::vector<ToricClass> pulled;
        for (const auto& c : cls)
            pulled.push_back(pullback_class(c, tc.fan, fine.fan));
        Rational after = intersection_number(pulled, fine, IntersectMode::cross_check);
        if (before != after)
            fail(detail::case_msg(i, "product changes under stellar subdivision"));
    });
}

// p(val(w)) = w on dual-complex points; PL <-> divisor round trips;
// compatibility of the complex morphism with retractions.
inline PropertyResult prop_retraction(Rng& rng, int cases)
{
    return detail::run_property("retraction_dictionary", cases, [&](int i, auto& fail) {
        const int n = 1 + i % 3;
        FlagIdeal a = random_flag_ideal(rng, n, -2, 3, 2);
        auto tc = build_testconfig(n, {a});
        DualComplex dc = dual_complex(tc);
        for (const auto& face : dc.faces) {
            DualPoint p;
            Rational norm = 0;
            for (int r : face) {
                Rational l = random_rational(rng, 1, 3);
                p.coords[r] = l;
                norm += l * static_cast<long>(tc.b[r]);
            }
            for (auto& [r, w] : p.coords)
                w /= norm;
            if (!dc.contains(p))
                fail(detail::case_msg(i, "sample point not on the dual complex"));
            if (!(retraction(tc, dual_point_valuation(tc, p)) == p))
                fail(detail::case_msg(i, "p(val(w)) != w at " + p.str()));
        }
        VerticalDivisor D;
        for (int r : tc.vertical_rays())
            D.coeffs[r] = random_rational(rng, -3, 3);
        PLFunction phi = divisor_to_pl(D, tc);
        VerticalDivisor D2 = pl_to_divisor(phi, tc);
        for (int r : tc.vertical_rays())
            if (D2.at(r) != D.at(r))
                fail(detail::case_msg(i, "divisor -> PL -> divisor is not the identity"));
        PLFunction f = phi_of_flag(a);
        f.plus.m = uniform(rng, 1, 3);
        f.constant = random_rational(rng, -2, 2);
        PLFunction g = divisor_to_pl(pl_to_divisor(f, tc), tc);
        auto high = tc;
        stellar_subdivide(high, detail::random_face(rng, tc, false));
        for (int k = 0; k < 10; ++k) {
            GaussValuation v = gauss_extend(random_weight(rng, n, static_cast<int>(uniform(rng, 0, n))));
            if (eval(f, v) != eval(g, v))
                fail(detail::case_msg(i, "PL -> divisor -> PL changes values"));
            if (!(complex_morphism(high, tc, retraction(high, v)) == retraction(tc, v)))
                fail(detail::case_msg(i, "complex morphism incompatible with retractions"));
        }
    });
}

inline std::vector<PropertyResult> run_property_suite(std::uint64_t seed, const SuiteConfig& cfg = {})
{
    std::vector<PropertyResult> out;
    auto stream = [&](int k) { return Rng(seed * 1000003ull + static_cast<std::uint64_t>(k)); };
    {
        Rng r = stream(1);
        out.push_back(prop_mass_one(r, cfg.mass_cases));
    }
    {
        Rng r = stream(2);
        out.push_back(prop_zariski(r, cfg.zariski_cases));
    }
    {
        Rng r = stream(3);
        out.push_back(prop_gauss(r, cfg.gauss_cases));
    }
    {
        Rng r = stream(4);
        out.push_back(prop_integral_closure(r, cfg.closure_cases));
    }
    {
        Rng r = stream(5);
        out.push_back(prop_sup_rees(r, cfg.rees_cases));
    }
    {
        Rng r = stream(6);
        out.push_back(prop_pairing_algebra(r, cfg.pairing_cases));
    }
    {
        Rng r = stream(7);
        out.push_back(prop_derivative(r, cfg.derivative_cases));
    }
    {
        Rng r = stream(8);
        out.push_back(prop_log_discrepancy(r, cfg.logdisc_cases));
    }
    {
        Rng r = stream(9);
        out.push_back(prop_oracle(r, cfg.oracle_cases));
    }
    {
        Rng r = stream(10);
        out.push_back(prop_subdivision(r, cfg.subdivision_cases));
    }
    {
        Rng r = stream(11);
        out.push_back(prop_retraction(r, cfg.retraction_cases));
    }
    return out;
}

inline std::string format_result(const PropertyResult& r)
{
    std::ostringstream os;
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, " << std::fixed;
    os.precision(2);
    os << r.seconds << " s)";
    if (!r.passed)
        os << ": " << r.detail;
    return os.str();
}

} // namespace napp
