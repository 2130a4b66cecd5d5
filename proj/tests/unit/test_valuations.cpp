#include "napp/napp.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace napp;

namespace {

// Brute-force min over generators.
TropicalValue naive_eval(const QVec& w, const std::vector<IVec>& gens)
{
    TropicalValue best = TropicalValue::infinity();
    for (const auto& g : gens) {
        Rational s = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
            s += w[i] * static_cast<long>(g[i]);
        best = best + TropicalValue(s);
    }
    return best;
}

// m is integral over I iff m^k lies in I^k for some k; k <= 6 suffices for the
// small ideals used here.
bool integral_by_powers(const MonomialIdeal& I, const IVec& m)
{
    for (int k = 1; k <= 6; ++k)
        if (I.pow(k).contains_monomial(scaled(m, k)))
            return true;
    return false;
}

} // namespace

TEST(EvalValuation, Examples)
{
    MonomialIdeal I(2, {{2, 0}, {1, 1}, {0, 3}});
    EXPECT_EQ(eval_valuation(Weight::finite(0, {1, 2}), I), TropicalValue(2));
    EXPECT_EQ(eval_valuation(Weight::trivial(2), I), TropicalValue(0));
    EXPECT_TRUE(eval_valuation(Weight::finite(0, {1, 1}), MonomialIdeal::zero_ideal(2)).is_infinite());
}

TEST(EvalValuation, InfiniteWeights)
{
    Weight v;
    v.chart = 0;
    v.w = {TropicalValue::infinity(), TropicalValue(1)};
    EXPECT_EQ(eval_valuation(v, MonomialIdeal(2, {{1, 0}, {0, 2}})), TropicalValue(2));
    EXPECT_TRUE(eval_valuation(v, MonomialIdeal(2, {{1, 0}})).is_infinite());
}

TEST(EvalValuation, ChartMismatchThrows)
{
    EXPECT_ANY_THROW(eval_valuation(Weight::finite(1, {1, 1}), MonomialIdeal(2, {{1, 0}}, 0)));
}

TEST(EvalValuation, MatchesNaiveMinimum)
{
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        auto I = random_monomial_ideal(rng, 3, 0, 4, 4);
        auto v = random_weight(rng, 3, 0);
        EXPECT_EQ(eval_valuation(v, I), naive_eval(v.values(), I.gens()));
    }
}

TEST(Recenter, Examples)
{
    Weight v = Weight::finite(0, {1, 0});
    PolyIdeal f1(2, {{{{0, 1}, 1}, {{0, 0}, -3}}});
    auto g1 = recenter(f1, {0, 3}, v);
    EXPECT_EQ(eval_valuation(v, f1), TropicalValue(0));
    EXPECT_EQ(eval_valuation(v, g1), TropicalValue(0));
    // y - 3 recentered at y = 3 becomes y'.
    EXPECT_EQ(g1.gens[0].size(), 1u);
    EXPECT_EQ(g1.gens[0].begin()->first, (IVec{0, 1}));

    PolyIdeal f2(2, {{{{2, 0}, 1}, {{1, 1}, 1}}});
    auto g2 = recenter(f2, {0, 1}, v);
    EXPECT_EQ(eval_valuation(v, f2), TropicalValue(1));
    EXPECT_EQ(eval_valuation(v, g2), TropicalValue(1));
    EXPECT_EQ(g2.gens[0].at(IVec{1, 0}), 1);
    EXPECT_EQ(g2.gens[0].at(IVec{2, 0}), 1);
    EXPECT_EQ(g2.gens[0].at(IVec{1, 1}), 1);

    Weight v2 = Weight::finite(0, {make_rational(5, 2), 0});
    PolyIdeal f3(2, {{{{1, 0}, 1}}});
    auto g3 = recenter(f3, {0, 5}, v2);
    EXPECT_EQ(g3.gens, f3.gens);
    EXPECT_EQ(eval_valuation(v2, g3), TropicalValue(make_rational(5, 2)));
}

TEST(Recenter, OffStratumThrows)
{
    PolyIdeal f(2, {{{{1, 0}, 1}}});
    EXPECT_THROW(recenter(f, {1, 0}, Weight::finite(0, {1, 0})), std::invalid_argument);
}

TEST(Newton, Vertices)
{
    auto v1 = newton_polyhedron(MonomialIdeal(2, {{3, 0}, {0, 2}})).vertices;
    EXPECT_EQ(std::set<IVec>(v1.begin(), v1.end()), (std::set<IVec>{{3, 0}, {0, 2}}));
    auto v2 = newton_polyhedron(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}})).vertices;
    EXPECT_EQ(std::set<IVec>(v2.begin(), v2.end()), (std::set<IVec>{{2, 0}, {0, 2}}));
    auto v3 = newton_polyhedron(MonomialIdeal::unit(2)).vertices;
    EXPECT_EQ(v3, (std::vector<IVec>{{0, 0}}));
    EXPECT_THROW(newton_polyhedron(MonomialIdeal::zero_ideal(2)), std::invalid_argument);
}

TEST(Newton, FacetEnumerationMatchesBruteForce)
{
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        int d = static_cast<int>(uniform(rng, 1, 4));
        auto I = random_monomial_ideal(rng, d, 0, 4, 5);
        auto fast = orthant_polyhedron_facets(I.gens());
        auto slow = detail::orthant_polyhedron_facets_brute(I.gens());
        std::sort(fast.begin(), fast.end());
        std::sort(slow.begin(), slow.end());
        EXPECT_EQ(fast, slow) << I.str();
    }
}

TEST(IntegralClosure, Examples)
{
    EXPECT_EQ(integral_closure(MonomialIdeal(2, {{2, 0}, {0, 2}})), MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}));
    EXPECT_EQ(integral_closure(MonomialIdeal(2, {{3, 0}, {0, 2}})), MonomialIdeal(2, {{3, 0}, {2, 1}, {0, 2}}));
    EXPECT_EQ(integral_closure(MonomialIdeal(2, {{2, 3}})), MonomialIdeal(2, {{2, 3}}));
    EXPECT_THROW(integral_closure(MonomialIdeal::zero_ideal(2)), std::invalid_argument);
}

TEST(IntegralClosure, MatchesPowerCriterion)
{
    Rng rng(9);
    for (int i = 0; i < 40; ++i) {
        auto I = random_monomial_ideal(rng, 2, 0, 3, 3);
        auto Ibar = integral_closure(I);
        for (long long a = 0; a <= 4; ++a)
            for (long long b = 0; b <= 4; ++b)
                EXPECT_EQ(Ibar.contains_monomial({a, b}), integral_by_powers(I, {a, b})) << I.str() << " " << a
                                                                                        << "," << b;
    }
}

TEST(ReesValuations, Examples)
{
    auto r1 = rees_valuations(MonomialIdeal(2, {{1, 0}, {0, 1}}));
    ASSERT_EQ(r1.size(), 1u);
    EXPECT_EQ(r1[0].values(), (QVec{1, 1}));

    MonomialIdeal I(2, {{3, 0}, {0, 2}});
    auto r2 = rees_valuations(I);
    ASSERT_EQ(r2.size(), 1u);
    EXPECT_EQ(r2[0].values(), (QVec{2, 3}));
    EXPECT_EQ(eval_valuation(r2[0], I), TropicalValue(6));

    EXPECT_TRUE(rees_valuations(MonomialIdeal::unit(2)).empty());
    // Principal ideals: coordinate normals with positive support value.
    auto r3 = rees_valuations(MonomialIdeal(2, {{2, 0}}));
    ASSERT_EQ(r3.size(), 1u);
    EXPECT_EQ(r3[0].values(), (QVec{1, 0}));
}

TEST(CenterSupport, Patterns)
{
    auto [c0, s0] = center_support(Weight::trivial(2));
    EXPECT_TRUE(c0.empty() && s0.empty());
    auto [c1, s1] = center_support(Weight::finite(0, {1, 0, 2}));
    EXPECT_EQ(c1, (std::set<int>{0, 2}));
    EXPECT_TRUE(s1.empty());
    Weight v;
    v.w = {TropicalValue::infinity(), TropicalValue(1)};
    auto [c2, s2] = center_support(v);
    EXPECT_EQ(c2, (std::set<int>{0, 1}));
    EXPECT_EQ(s2, (std::set<int>{0}));
}

TEST(LelongKiselman, Examples)
{
    EXPECT_EQ(lelong_kiselman(Weight::finite(0, {1, 1}), MonomialIdeal(2, {{1, 0}, {0, 1}})), 1);
    EXPECT_EQ(lelong_kiselman(Weight::finite(0, {1, 2}), MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 3}})), 2);
    EXPECT_EQ(lelong_kiselman(Weight::trivial(2), MonomialIdeal(2, {{2, 0}, {0, 3}})), 0);
}

TEST(LelongKiselman, AgreesWithEvaluation)
{
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        auto I = random_monomial_ideal(rng, 2, 0, 4, 4);
        auto v = random_weight(rng, 2, 0);
        EXPECT_EQ(TropicalValue(lelong_kiselman(v, I)), eval_valuation(v, I));
    }
}
