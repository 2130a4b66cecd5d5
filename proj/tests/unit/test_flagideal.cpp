#include "napp/napp.hpp"

#include <gtest/gtest.h>

using namespace napp;

namespace {

MonomialIdeal mono(std::vector<IVec> gens)
{
    const int d = static_cast<int>(gens[0].size());
    return MonomialIdeal(d, std::move(gens));
}

FlagIdeal p1_flag(std::vector<std::pair<long long, long long>> terms) // (lambda, exponent of z)
{
    std::vector<std::pair<long long, MonomialIdeal>> t;
    for (auto [l, e] : terms)
        t.push_back({l, MonomialIdeal(1, {{e}})});
    return FlagIdeal(1, 0, t);
}

// Direct min over (lambda, generator) pairs.
Rational naive_gauss(const QVec& w, const FlagIdeal& a)
{
    bool first = true;
    Rational best;
    for (const auto& p : a.points()) {
        Rational s = static_cast<long>(p.back());
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            s += w[i] * static_cast<long>(p[i]);
        if (first || s < best)
            best = s;
        first = false;
    }
    return best;
}

} // namespace

TEST(FlagIdeal, StoresDistinctSlices)
{
    FlagIdeal a = p1_flag({{0, 2}, {1, 1}, {2, 0}});
    ASSERT_EQ(a.slices().size(), 3u);
    EXPECT_EQ(a.lambda_max(), 2);
    EXPECT_TRUE(a.slices().back().ideal.is_unit());
    // A redundant term does not create a slice.
    FlagIdeal b = p1_flag({{0, 1}, {1, 2}, {2, 0}});
    EXPECT_EQ(b.slices().size(), 2u);
    EXPECT_THROW(FlagIdeal(1, 0, {{0, MonomialIdeal(1, {{1}})}}), std::invalid_argument);
    EXPECT_THROW(FlagIdeal(1, 0, {{0, MonomialIdeal::zero_ideal(1)}}), std::invalid_argument);
}

TEST(GaussExtend, Examples)
{
    EXPECT_EQ(gauss_eval(gauss_extend(Weight::finite(0, {1})), p1_flag({{0, 2}, {1, 1}, {2, 0}})), TropicalValue(2));
    EXPECT_EQ(gauss_eval(gauss_extend(Weight::trivial(1)), p1_flag({{0, 1}, {1, 0}})), TropicalValue(0));
    FlagIdeal xy(2, 0, {{0, mono({{1, 0}, {0, 1}})}, {1, MonomialIdeal::unit(2)}});
    EXPECT_EQ(gauss_eval(gauss_extend(Weight::finite(0, {1, 1})), xy), TropicalValue(1));
}

TEST(GaussExtend, RestrictionRoundTrip)
{
    EXPECT_EQ(restrict(gauss_extend(Weight::finite(0, {1})), MonomialIdeal(1, {{3}})), TropicalValue(3));
    EXPECT_EQ(restrict(gauss_extend(Weight::trivial(2)), mono({{2, 1}})), TropicalValue(0));
    EXPECT_EQ(restrict(gauss_extend(Weight::finite(0, {2, 3})), mono({{3, 0}, {0, 2}})), TropicalValue(6));
}

TEST(GaussExtend, AgreesWithDirectMinimum)
{
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        int n = static_cast<int>(uniform(rng, 1, 3));
        auto a = random_flag_ideal(rng, n, 0);
        auto v = random_weight(rng, n, 0);
        EXPECT_EQ(gauss_eval(gauss_extend(v), a), TropicalValue(naive_gauss(v.values(), a)));
    }
}

TEST(GaussExtend, ValuationLaws)
{
    Rng rng(22);
    for (int i = 0; i < 100; ++i) {
        int n = static_cast<int>(uniform(rng, 1, 3));
        auto a = random_flag_ideal(rng, n, 0);
        auto b = random_flag_ideal(rng, n, 0);
        auto V = gauss_extend(random_weight(rng, n, 0));
        EXPECT_EQ(gauss_eval(V, a * b), gauss_eval(V, a) * gauss_eval(V, b));
        EXPECT_EQ(gauss_eval(V, a + b), gauss_eval(V, a) + gauss_eval(V, b));
    }
}

TEST(PhiOfFlag, Examples)
{
    auto phi = phi_of_flag(p1_flag({{0, 1}, {1, 0}}));
    EXPECT_EQ(eval(phi, gauss_extend(Weight::trivial(1))), 0);
    EXPECT_EQ(eval(phi, gauss_extend(Weight::finite(0, {1}))), -1);
    auto c = phi_of_flag(FlagIdeal::t_power(2, 3));
    Rng rng(4);
    for (int i = 0; i < 10; ++i)
        EXPECT_EQ(eval(c, gauss_extend(random_weight(rng, 2, 0))), -3);
    EXPECT_EQ(eval(phi_of_flag(FlagIdeal::unit(2)), gauss_extend(Weight::finite(0, {1, 2}))), 0);
}

TEST(PhiOfFlag, EvaluationOnOtherCharts)
{
    // phi_{(z)+(1)t} from chart 0 seen from chart 1: the point z = inf side.
    auto phi = phi_of_flag(p1_flag({{0, 1}, {1, 0}}));
    EXPECT_EQ(eval(phi, gauss_extend(Weight::finite(1, {2}))), 0);
}

TEST(PLCalculus, MaxAddScale)
{
    FlagIdeal ax(2, 0, {{0, mono({{1, 0}})}, {1, MonomialIdeal::unit(2)}});
    FlagIdeal ay(2, 0, {{0, mono({{0, 1}})}, {1, MonomialIdeal::unit(2)}});
    FlagIdeal axy(2, 0, {{0, mono({{1, 0}, {0, 1}})}, {1, MonomialIdeal::unit(2)}});
    Rng rng(8);
    auto m = pl_max(phi_of_flag(ax), phi_of_flag(ay));
    auto mm = pl_max(phi_of_flag(ax), phi_of_flag(ax));
    auto mk = pl_max(phi_of_flag(ax), pl_constant(2, -2));
    auto sum = pl_add(phi_of_flag(ax), phi_of_flag(ay));
    auto sq = phi_of_flag(ax * ax);
    auto half = pl_scale(sq, make_rational(1, 2));
    auto twice = pl_scale(phi_of_flag(ax), 2);
    for (int i = 0; i < 50; ++i) {
        auto V = gauss_extend(random_weight(rng, 2, static_cast<int>(uniform(rng, 0, 2))));
        EXPECT_EQ(eval(m, V), eval(phi_of_flag(axy), V));
        EXPECT_EQ(eval(mm, V), eval(phi_of_flag(ax), V));
        EXPECT_EQ(eval(mk, V), eval(phi_of_flag(ax + FlagIdeal::t_power(2, 2)), V));
        EXPECT_EQ(eval(mk, V), std::max(eval(phi_of_flag(ax), V), Rational(-2)));
        EXPECT_EQ(eval(sum, V), eval(phi_of_flag(ax * ay), V));
        EXPECT_EQ(eval(half, V), eval(phi_of_flag(ax), V));
        EXPECT_EQ(eval(twice, V), eval(sq, V));
    }
}

TEST(PLCalculus, MaxRejectsGeneralPL)
{
    FlagIdeal ax(2, 0, {{0, mono({{1, 0}})}, {1, MonomialIdeal::unit(2)}});
    auto diff = pl_neg(phi_of_flag(ax));
    EXPECT_THROW(pl_max(diff, phi_of_flag(ax)), std::invalid_argument);
}

TEST(RAction, Examples)
{
    auto v = Weight::finite(0, {3, 1});
    MonomialIdeal I = mono({{1, 0}});
    EXPECT_EQ(r_action(2, I, v), -3);
    auto f = phi_of_flag(FlagIdeal(2, 0, {{0, mono({{1, 0}, {0, 2}})}, {2, MonomialIdeal::unit(2)}}));
    EXPECT_EQ(r_action(1, f, v), eval(f, gauss_extend(v)));
    EXPECT_EQ(r_action(2, pl_constant(2, -1), v), -2);
}

TEST(RAction, MatchesDefiningFormula)
{
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        auto f = random_pl(rng, 2, 3, 3);
        auto v = random_weight(rng, 2, 0);
        Rational t = random_rational(rng, 1, 4);
        QVec w = v.values();
        for (auto& x : w)
            x /= t;
        Rational direct = t * eval(f, gauss_extend(Weight::finite(0, w)));
        EXPECT_EQ(r_action(t, f, v), direct);
        EXPECT_EQ(eval(pl_act(t, f), gauss_extend(v)), direct);
    }
}

TEST(SupFormula, Examples)
{
    FlagIdeal a(2, 0, {{0, mono({{1, 0}, {0, 1}})}, {1, MonomialIdeal::unit(2)}});
    FlagIdeal b(2, 0, {{0, mono({{1, 0}})}, {1, MonomialIdeal::unit(2)}});
    EXPECT_EQ(sup_formula(a, 1, a).sup, 0);
    EXPECT_EQ(sup_formula(a * a, 2, a).sup, 0);
    auto r = sup_formula(b, 1, a);
    EXPECT_EQ(r.sup, 0);
    bool attained = false;
    for (const auto& rv : rees_valuations(a))
        if (rv.v.base.values() == QVec{1, 1})
            attained = eval(pl_sub(phi_of_flag(b), phi_of_flag(a)), rv.v) == 0;
    EXPECT_TRUE(attained);
    EXPECT_THROW(sup_formula(a, 1, FlagIdeal::unit(2)), std::invalid_argument);
}

TEST(SupFormula, GridNeverExceedsReesMaximum)
{
    Rng rng(41);
    for (int i = 0; i < 20; ++i) {
        auto a = random_flag_ideal(rng, 2, 0, 2, 2);
        if (a.is_unit())
            continue;
        auto b = random_flag_ideal(rng, 2, 0, 2, 2);
        auto r = sup_formula(b, 1, a);
        auto f = pl_sub(phi_of_flag(b), phi_of_flag(a));
        for (long long x = 0; x <= 3; ++x)
            for (long long y = 0; y <= 3; ++y)
                for (long long s = 1; s <= 3; ++s) {
                    auto V = gauss_extend(Weight::finite(0, {make_rational(x, s), make_rational(y, s)}));
                    EXPECT_LE(eval(f, V), r.sup);
                }
        EXPECT_EQ(eval(f, r.argmax), r.sup);
    }
}
