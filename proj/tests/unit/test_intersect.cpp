#include "napp/napp.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace napp;

namespace {

FlagIdeal p1_flag(std::vector<std::pair<long long, long long>> terms)
{
    std::vector<std::pair<long long, MonomialIdeal>> t;
    for (auto [l, e] : terms)
        t.push_back({l, MonomialIdeal(1, {{e}})});
    return FlagIdeal(1, 0, t);
}

// Intersection form of a smooth complete toric surface: neighbours meet once,
// D_i^2 = -a_i with u_{i-1} + u_{i+1} = a_i u_i.
QMat surface_form(const std::vector<IVec>& rays)
{
    const std::size_t k = rays.size();
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::atan2(double(rays[a][1]), double(rays[a][0])) < std::atan2(double(rays[b][1]), double(rays[b][0]));
    });
    QMat M(k, QVec(k, 0));
    for (std::size_t p = 0; p < k; ++p) {
        std::size_t prev = order[(p + k - 1) % k], cur = order[p], next = order[(p + 1) % k];
        IVec s = add(rays[prev], rays[next]);
        long long a = rays[cur][0] != 0 ? s[0] / rays[cur][0] : s[1] / rays[cur][1];
        EXPECT_EQ(scaled(rays[cur], a), s) << "fan is not smooth";
        M[cur][cur] = -static_cast<long>(a);
        M[cur][next] = M[next][cur] = 1;
    }
    return M;
}

Rational bilinear(const QMat& M, const QVec& a, const QVec& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            s += a[i] * M[i][j] * b[j];
    return s;
}

Polytope simplex2() { return Polytope{{{0, 0}, {1, 0}, {0, 1}}}; }
Polytope square() { return Polytope{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}; }

} // namespace

TEST(MixedVolume, Examples)
{
    EXPECT_EQ(mixed_volume({simplex2(), simplex2()}), 1);
    EXPECT_EQ(mixed_volume({square(), square()}), 2);
    EXPECT_EQ(mixed_volume({Polytope{{{0, 0}, {1, 0}}}, Polytope{{{0, 0}, {0, 1}}}}), 1);
    EXPECT_EQ(mixed_volume({simplex2(), square()}), 2);
}

TEST(MixedVolume, ThreeDimensionalCube)
{
    Polytope cube;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                cube.vertices.push_back({a, b, c});
    EXPECT_EQ(mixed_volume({cube, cube, cube}), 6);
    EXPECT_EQ(hull_volume(cube.vertices), 1);
}

TEST(Intersection, DeformationToNormalConeOfP1)
{
    auto tc = build_testconfig(p1_flag({{0, 1}, {1, 0}}));
    int E = find_ray(tc.fan, {1, 1});
    ASSERT_GE(E, 0);
    auto alpha = alpha_class(tc, 1);
    auto aE = alpha - ray_class(tc, E);
    for (auto mode : {IntersectMode::recursion, IntersectMode::volume, IntersectMode::cross_check}) {
        EXPECT_EQ(intersection_number({alpha, alpha}, tc, mode), 0);
        EXPECT_EQ(intersection_number({aE, aE}, tc, mode), -1);
        EXPECT_EQ(intersection_number({fiber_class(tc), alpha}, tc, mode), 1);
    }
}

TEST(Intersection, SurfaceOracle)
{
    Rng rng(91);
    for (int i = 0; i < 30; ++i) {
        auto tc = build_testconfig(random_flag_ideal(rng, 1, 0, 3, 3));
        // The surface oracle needs a smooth fan; refine until unimodular.
        bool smooth = true;
        for (const auto& c : tc.fan.cones) {
            auto d = det(detail::rows_of(tc.fan.rays, c));
            smooth = smooth && abs(d) == 1;
        }
        if (!smooth)
            continue;
        QMat M = surface_form(tc.fan.rays);
        for (int k = 0; k < 5; ++k) {
            QVec a, b;
            for (std::size_t r = 0; r < tc.fan.rays.size(); ++r) {
                a.push_back(random_rational(rng, -3, 3));
                b.push_back(random_rational(rng, -3, 3));
            }
            ToricClass A{a, ""}, B{b, ""};
            EXPECT_EQ(intersection_number({A, B}, tc, IntersectMode::cross_check), bilinear(M, a, b));
        }
    }
}

TEST(Intersection, SymmetricAndMultilinear)
{
    Rng rng(92);
    for (int i = 0; i < 10; ++i) {
        auto tc = build_testconfig(random_flag_ideal(rng, 2, 0, 2, 2));
        auto rnd = [&] {
            ToricClass c{std::vector<Rational>(tc.fan.rays.size()), ""};
            for (auto& x : c.values)
                x = random_rational(rng, -2, 2);
            return c;
        };
        auto a = rnd(), b = rnd(), c = rnd(), d = rnd();
        Rational t = random_rational(rng, -3, 3);
        EXPECT_EQ(intersection_number({a, b, c}, tc), intersection_number({c, a, b}, tc));
        EXPECT_EQ(intersection_number({a + d * t, b, c}, tc),
                  intersection_number({a, b, c}, tc) + t * intersection_number({d, b, c}, tc));
    }
}

TEST(Intersection, AlgorithmsAgreeAndSubdivisionInvariance)
{
    Rng rng(93);
    for (int i = 0; i < 12; ++i) {
        int n = 1 + i % 3;
        auto tc = build_testconfig(random_flag_ideal(rng, n, 0, n == 3 ? 1 : 2, 2));
        std::vector<ToricClass> cls;
        for (int k = 0; k <= n; ++k)
            cls.push_back(alpha_class(tc, 1) * Rational(k + 1) + fiber_class(tc) * random_rational(rng, -2, 2));
        Rational a = intersection_number(cls, tc, IntersectMode::recursion);
        EXPECT_EQ(a, intersection_number(cls, tc, IntersectMode::volume));
        auto fine = tc;
        stellar_subdivide(fine, fine.fan.cones[uniform(rng, 0, static_cast<long long>(fine.fan.cones.size()) - 1)]);
        std::vector<ToricClass> pulled;
        for (const auto& c : cls)
            pulled.push_back(pullback_class(c, tc.fan, fine.fan));
        EXPECT_EQ(intersection_number(pulled, fine), a);
    }
}

TEST(Intersection, WrongArityThrows)
{
    auto tc = trivial_testconfig(2);
    EXPECT_THROW(intersection_number({alpha_class(tc, 1)}, tc), std::invalid_argument);
}

TEST(RelativeNef, Examples)
{
    auto tc = build_testconfig(p1_flag({{0, 1}, {1, 0}}));
    int E = find_ray(tc.fan, {1, 1});
    auto alpha = alpha_class(tc, 1);
    EXPECT_TRUE(is_relatively_nef(alpha, tc));
    EXPECT_TRUE(is_relatively_nef(alpha - ray_class(tc, E), tc));
    EXPECT_FALSE(is_relatively_nef(alpha - ray_class(tc, E) * Rational(2), tc));
}
