#include "napp/napp.hpp"

#include <gtest/gtest.h>

using namespace napp;

TEST(Tropical, MinPlusOperations)
{
    auto [s, p] = trop_ops(TropicalValue(3), TropicalValue(5));
    EXPECT_EQ(s, TropicalValue(3));
    EXPECT_EQ(p, TropicalValue(8));

    auto [s2, p2] = trop_ops(TropicalValue::infinity(), TropicalValue(5));
    EXPECT_EQ(s2, TropicalValue(5));
    EXPECT_TRUE(p2.is_infinite());

    auto [s3, p3] = trop_ops(TropicalValue(0), TropicalValue(0));
    EXPECT_EQ(s3, TropicalValue(0));
    EXPECT_EQ(p3, TropicalValue(0));
}

TEST(Tropical, SemiringAxiomsOnSamples)
{
    std::vector<TropicalValue> xs{TropicalValue::infinity(), TropicalValue(0), TropicalValue(-2),
                                  TropicalValue(make_rational(7, 3)), TropicalValue(5)};
    for (const auto& a : xs)
        for (const auto& b : xs)
            for (const auto& c : xs) {
                EXPECT_EQ(a * (b + c), a * b + a * c);
                EXPECT_EQ((a + b) + c, a + (b + c));
                EXPECT_EQ((a * b) * c, a * (b * c));
            }
    for (const auto& a : xs) {
        EXPECT_EQ(a + TropicalValue::zero(), a);
        EXPECT_EQ(a * TropicalValue::one(), a);
        EXPECT_EQ(a + a, a);
    }
}

TEST(Tropical, NaturalOrder)
{
    EXPECT_FALSE(natural_leq(TropicalValue(5), TropicalValue(3)));
    EXPECT_TRUE(natural_leq(TropicalValue(3), TropicalValue(5)));
    EXPECT_TRUE(natural_leq(TropicalValue(4), TropicalValue(4)));

    MonomialIdeal I(2, {{1, 0}});
    MonomialIdeal J(2, {{1, 0}, {0, 1}});
    EXPECT_TRUE(natural_leq(J, I));
    EXPECT_FALSE(natural_leq(I, J));
}

TEST(Character, TrivialCharacter)
{
    MonomialIdeal x(2, {{1, 0}}), y(2, {{0, 1}}), one = MonomialIdeal::unit(2), zero = MonomialIdeal::zero_ideal(2);
    std::vector<MonomialIdeal> elems{one, x, y, x * y, x + y, x * x, x * (x + y), x + x * y, y * (x + y)};
    CharacterCandidate<MonomialIdeal> chi;
    for (const auto& e : elems)
        chi.assignment[e] = TropicalValue(0);
    chi.assignment[zero] = TropicalValue::infinity();
    std::vector<std::pair<MonomialIdeal, MonomialIdeal>> pairs{{x, y}, {x, x}, {x, x + y}, {one, x}};
    EXPECT_TRUE(is_character(chi, pairs, one, zero));
}

TEST(Character, MonomialWeightIsCharacter)
{
    MonomialIdeal x(2, {{1, 0}}), y(2, {{0, 1}}), one = MonomialIdeal::unit(2), zero = MonomialIdeal::zero_ideal(2);
    CharacterCandidate<MonomialIdeal> chi;
    chi.assignment[one] = TropicalValue(0);
    chi.assignment[zero] = TropicalValue::infinity();
    chi.assignment[x] = TropicalValue(1);
    chi.assignment[y] = TropicalValue(2);
    chi.assignment[x * y] = TropicalValue(3);
    chi.assignment[x + y] = TropicalValue(1);
    EXPECT_TRUE(is_character(chi, {{x, y}}, one, zero));
}

TEST(Character, RejectsNonAdditive)
{
    MonomialIdeal x(2, {{1, 0}}), one = MonomialIdeal::unit(2), zero = MonomialIdeal::zero_ideal(2);
    CharacterCandidate<MonomialIdeal> chi;
    chi.assignment[one] = TropicalValue(0);
    chi.assignment[x] = TropicalValue(1);
    chi.assignment[x * x] = TropicalValue(3);
    std::string why;
    EXPECT_FALSE(is_character(chi, {{x, x}}, one, zero, &why));
    EXPECT_NE(why.find("multiplicativity"), std::string::npos);
}

TEST(Character, MissingValueIsDiagnosed)
{
    MonomialIdeal x(2, {{1, 0}}), y(2, {{0, 1}}), one = MonomialIdeal::unit(2), zero = MonomialIdeal::zero_ideal(2);
    CharacterCandidate<MonomialIdeal> chi;
    chi.assignment[one] = TropicalValue(0);
    chi.assignment[x] = TropicalValue(1);
    EXPECT_THROW(is_character(chi, {{x, y}}, one, zero), std::invalid_argument);
}

TEST(Gelfand, PointEvaluation)
{
    FlagIdeal a(1, 0, {{0, MonomialIdeal(1, {{1}})}, {1, MonomialIdeal::unit(1)}});
    EXPECT_EQ(gelfand_eval(Weight::finite(0, {1}), phi_of_flag(a)), -1);
    EXPECT_EQ(gelfand_eval(Weight::trivial(1), phi_of_flag(a)), 0);
    FlagIdeal b(1, 0, {{0, MonomialIdeal(1, {{1}})}, {2, MonomialIdeal::unit(1)}});
    EXPECT_EQ(gelfand_eval(Weight::trivial(1), phi_of_flag(b)), 0);
}

TEST(MaxPlus, SlopeAtInfinity)
{
    MaxPlusPoly p{{{-2, 0}, {-3, 1}, {-1, -5}}};
    EXPECT_EQ(p.slope_at_infinity(), -1);
    EXPECT_EQ(p(Rational(0)), 1);
    EXPECT_EQ(p(Rational(10)), -15);
}
