#include "napp/napp.hpp"

#include <gtest/gtest.h>

using namespace napp;

namespace {

FlagIdeal p1_flag(std::vector<std::pair<long long, long long>> terms)
{
    std::vector<std::pair<long long, MonomialIdeal>> t;
    for (auto [l, e] : terms)
        t.push_back({l, MonomialIdeal(1, {{e}})});
    return FlagIdeal(1, 0, t);
}

PLFunction phi_p1() { return phi_of_flag(p1_flag({{0, 1}, {1, 0}})); }

PLFunction phi_p2()
{
    return phi_of_flag(FlagIdeal(2, 0, {{0, MonomialIdeal(2, {{1, 0}, {0, 1}})}, {1, MonomialIdeal::unit(2)}}));
}

} // namespace

TEST(MAMeasure, Examples)
{
    auto S1 = KahlerSetup::projective(1, 1, IntersectMode::cross_check);
    auto mu0 = ma_measure(S1, pl_zero(1));
    ASSERT_EQ(mu0.atoms.size(), 1u);
    EXPECT_TRUE(mu0.atoms[0].v.base.is_trivial());
    EXPECT_EQ(mu0.atoms[0].mass, 1);

    auto mu1 = ma_measure(S1, phi_p1());
    EXPECT_EQ(mu1.total_mass(), 1);
    for (const auto& a : mu1.atoms)
        EXPECT_EQ(a.mass, a.v.base.is_trivial() ? 0 : 1);

    auto S2 = KahlerSetup::projective(2, 1, IntersectMode::cross_check);
    auto mu2 = ma_measure(S2, phi_p2());
    EXPECT_EQ(mu2.total_mass(), 1);
    for (const auto& a : mu2.atoms)
        if (a.mass != 0)
            EXPECT_EQ(a.v.base.values(), (QVec{1, 1}));
}

TEST(EnergyPairing, Examples)
{
    for (int n = 1; n <= 3; ++n) {
        Rational a = 2;
        std::vector<PairingSlot> slots{{0, pl_constant(n, 1)}};
        for (int k = 0; k < n; ++k)
            slots.push_back({a, pl_zero(n)});
        Rational V = 1;
        for (int k = 0; k < n; ++k)
            V *= a;
        EXPECT_EQ(energy_pairing(n, slots), V);
        std::vector<PairingSlot> zeros(n + 1, PairingSlot{a, pl_zero(n)});
        EXPECT_EQ(energy_pairing(n, zeros), 0);
    }
    EXPECT_EQ(energy_pairing(1, {{1, phi_p1()}, {1, phi_p1()}}, IntersectMode::cross_check), -1);
    EXPECT_THROW(energy_pairing(2, {{1, phi_p2()}}), std::invalid_argument);
}

TEST(Energy, GoldenValuesAndTranslation)
{
    auto S1 = KahlerSetup::projective(1, 1);
    auto S2 = KahlerSetup::projective(2, 1);
    EXPECT_EQ(energy(S1, pl_zero(1)), 0);
    EXPECT_EQ(energy(S1, phi_p1()), make_rational(-1, 2));
    EXPECT_EQ(energy(S2, phi_p2()), make_rational(-1, 3));
    EXPECT_EQ(twisted_energy(S2, S2.zeta, phi_p2()), 0);
    Rational c = make_rational(5, 3);
    EXPECT_EQ(energy(S2, pl_add(phi_p2(), pl_constant(2, c))), energy(S2, phi_p2()) + c);
}

TEST(Functionals, JIAndSeminorm)
{
    auto S1 = KahlerSetup::projective(1, 1);
    auto S2 = KahlerSetup::projective(2, 1);
    EXPECT_EQ(j_functional(S1, phi_p1()), make_rational(1, 2));
    EXPECT_EQ(j_functional(S2, phi_p2()), make_rational(2, 3));
    EXPECT_EQ(j_functional(S2, phi_p2(), phi_p2()), 0);
    EXPECT_EQ(i_functional(S2, phi_p2(), phi_p2()), 0);
    auto s = seminorm(1, phi_p1(), {});
    EXPECT_EQ(s.squared, 1);
    ASSERT_TRUE(s.exact);
    EXPECT_EQ(*s.exact, 1);
    EXPECT_THROW(seminorm(2, phi_p2(), {}), std::invalid_argument);
}

TEST(Functionals, QuasiMetricBoundsOnRandomPairs)
{
    Rng rng(101);
    for (int i = 0; i < 10; ++i) {
        int n = 1 + i % 2;
        auto S = KahlerSetup::projective(n, 1);
        auto phi = random_psh(rng, n, 1, 2, 2);
        auto psi = random_psh(rng, n, 1, 2, 2);
        Rational J = j_functional(S, phi, psi), I = i_functional(S, phi, psi);
        EXPECT_GE(J, 0);
        EXPECT_GE(I, 0);
        EXPECT_EQ(I, i_functional(S, psi, phi));
    }
}

TEST(Zariski, GramExamples)
{
    auto g0 = zariski_gram(1, {pl_constant(1, 1)}, {});
    EXPECT_EQ(g0.matrix, (QMat{{0}}));
    EXPECT_TRUE(g0.is_nsd);
    auto g1 = zariski_gram(1, {phi_p1()}, {});
    EXPECT_EQ(g1.matrix, (QMat{{-1}}));
    EXPECT_TRUE(g1.is_nsd);
    EXPECT_TRUE(is_negative_semidefinite({{-1, 1}, {1, -1}}));
    EXPECT_FALSE(is_negative_semidefinite({{-1, 2}, {2, -1}}));
    EXPECT_FALSE(is_negative_semidefinite({{0, 1}, {1, 0}}));
}

TEST(Zariski, BilinearCheck)
{
    EXPECT_TRUE(bilinear_nsd_check({{-1, 1}, {1, -1}}, {1, 1}));
    EXPECT_TRUE(bilinear_nsd_check({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}, {1, 1, 1}));
    try {
        bilinear_nsd_check({{1}}, {1});
        FAIL() << "expected a hypothesis error";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("kernel"), std::string::npos);
    }
    EXPECT_THROW(bilinear_nsd_check({{-1, -1}, {-1, -1}}, {1, 1}), std::invalid_argument);
}

TEST(Zariski, VerticalGramAgreesWithDirectTest)
{
    Rng rng(102);
    for (int i = 0; i < 6; ++i) {
        auto tc = build_testconfig(random_flag_ideal(rng, 2, 0, 2, 2));
        auto [B, kernel] = vertical_gram(tc, {alpha_class(tc, 1)});
        EXPECT_TRUE(bilinear_nsd_check(B, kernel));
        EXPECT_TRUE(is_negative_semidefinite(B));
    }
}

TEST(LogDiscrepancy, Exceptional)
{
    auto S1 = KahlerSetup::projective(1, 1);
    auto S2 = KahlerSetup::projective(2, 1);
    for (const auto& a : ma_measure(S1, phi_p1()).atoms)
        EXPECT_EQ(log_discrepancy(a.v), a.v.base.is_trivial() ? 1 : 2);
    for (const auto& a : ma_measure(S2, phi_p2()).atoms)
        EXPECT_EQ(log_discrepancy(a.v), a.v.base.is_trivial() ? 1 : 3);
}

TEST(Mabuchi, GoldenSuites)
{
    auto r1 = mabuchi(KahlerSetup::projective(1, 1, IntersectMode::cross_check), phi_p1());
    EXPECT_EQ(r1.E, make_rational(-1, 2));
    EXPECT_EQ(r1.J, make_rational(1, 2));
    EXPECT_EQ(r1.H, 2);
    EXPECT_EQ(r1.sbar, 2);
    EXPECT_EQ(r1.E_twisted, 0);
    EXPECT_EQ(r1.M, 1);
    EXPECT_EQ(r1.mass, 1);
    EXPECT_EQ(r1.seminorm.squared, 1);
    ASSERT_TRUE(r1.delta_ratio);
    EXPECT_EQ(*r1.delta_ratio, 2);

    auto r2 = mabuchi(KahlerSetup::projective(2, 1, IntersectMode::cross_check), phi_p2());
    EXPECT_EQ(r2.E, make_rational(-1, 3));
    EXPECT_EQ(r2.J, make_rational(2, 3));
    EXPECT_EQ(r2.H, 3);
    EXPECT_EQ(r2.sbar, 6);
    EXPECT_EQ(r2.M, 1);
    ASSERT_TRUE(r2.delta_ratio);
    EXPECT_EQ(*r2.delta_ratio, make_rational(3, 2));
}

TEST(Mabuchi, ConstantFunction)
{
    auto r = mabuchi(KahlerSetup::projective(1, 1), pl_constant(1, 2));
    EXPECT_EQ(r.J, 0);
    EXPECT_FALSE(r.delta_ratio);
    EXPECT_EQ(r.H, 1);
}

TEST(Coercivity, Scan)
{
    auto S1 = KahlerSetup::projective(1, 1);
    // (z^2) + (z) t + (1) t^2 has phi = 2 phi_{(z) + (1) t}: psh for 2H, not for H.
    auto second = phi_of_flag(p1_flag({{0, 2}, {1, 1}, {2, 0}}));
    auto skipped = coercivity_scan(S1, {phi_p1(), second});
    EXPECT_EQ(skipped.delta, 2);
    EXPECT_EQ(skipped.warnings.size(), 1u);

    auto S2H = KahlerSetup::projective(1, 2);
    auto res = coercivity_scan(S2H, {phi_p1(), second});
    EXPECT_TRUE(res.warnings.empty());
    auto r1 = mabuchi(S2H, phi_p1());
    auto r2 = mabuchi(S2H, second);
    EXPECT_EQ(res.delta, std::min(*r1.delta_ratio, *r2.delta_ratio));
    EXPECT_GT(res.delta, 0);
    EXPECT_FALSE(res.destabilizer_found);

    auto res2 = coercivity_scan(KahlerSetup::projective(2, 1), {phi_p2()});
    EXPECT_EQ(res2.delta, make_rational(3, 2));
    EXPECT_EQ(res2.witness, 0u);

    auto res3 = coercivity_scan(S1, {pl_constant(1, 1), phi_p1()});
    EXPECT_EQ(res3.delta, 2);
    EXPECT_EQ(res3.witness, 1u);
    EXPECT_EQ(res3.warnings.size(), 1u);

    EXPECT_THROW(coercivity_scan(S1, {}), std::invalid_argument);
}
