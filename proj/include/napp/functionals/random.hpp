#pragma once

#include "napp/functionals/pairing.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace napp {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline MonomialIdeal random_monomial_ideal(Rng& rng, int nvars, int chart, int max_exp, int max_gens)
{
    std::vector<IVec> gens;
    const int k = static_cast<int>(uniform(rng, 1, max_gens));
    for (int g = 0; g < k; ++g) {
        IVec e(nvars);
        for (auto& x : e)
            x = uniform(rng, 0, max_exp);
        gens.push_back(e);
    }
    return MonomialIdeal(nvars, gens, chart);
}

// A chart-local flag ideal sum_k I_k t^k, k = 0..L, ending in the unit ideal.
inline FlagIdeal random_flag_ideal(Rng& rng, int n, int chart = -2, int max_exp = 3, int max_lambda = 3)
{
    if (chart == -2)
        chart = static_cast<int>(uniform(rng, 0, n));
    const int L = static_cast<int>(uniform(rng, 1, max_lambda));
    std::vector<std::pair<long long, MonomialIdeal>> terms;
    for (int l = 0; l < L; ++l)
        if (l == 0 || uniform(rng, 0, 1))
            terms.emplace_back(l, random_monomial_ideal(rng, n, chart, max_exp, 2));
    terms.emplace_back(L, MonomialIdeal::unit(n, chart));
    return FlagIdeal(n, chart, terms);
}

inline Rational random_rational(Rng& rng, long long lo, long long hi, long long max_den = 4)
{
    long long q = uniform(rng, 1, max_den);
    long long p = uniform(rng, lo * q, hi * q);
    return make_rational(p, q);
}

inline Weight random_weight(Rng& rng, int n, int chart, long long hi = 3)
{
    QVec w;
    for (int i = 0; i < n; ++i)
        w.push_back(random_rational(rng, 0, hi));
    return Weight::finite(chart, w);
}

// A general PL function (1/m1) phi_a1 - (1/m2) phi_a2 + c.
inline PLFunction random_pl(Rng& rng, int n, int max_exp = 3, int max_lambda = 3)
{
    PLFunction f = pl_zero(n);
    f.plus = PLPart{random_flag_ideal(rng, n, -2, max_exp, max_lambda), uniform(rng, 1, 3)};
    f.minus = PLPart{random_flag_ideal(rng, n, -2, max_exp, max_lambda), uniform(rng, 1, 3)};
    f.constant = random_rational(rng, -2, 2);
    return f;
}

// (1/m) phi_a with the smallest m in 1..64 making alpha + D relatively nef.
inline PLFunction random_psh(Rng& rng, int n, const Rational& alpha, int max_exp = 3, int max_lambda = 3)
{
    for (int attempt = 0; attempt < 100; ++attempt) {
        FlagIdeal a = random_flag_ideal(rng, n, -2, max_exp, max_lambda);
        if (a.is_unit())
            continue;
        auto tc = build_testconfig(a);
        PLFunction f = phi_of_flag(a);
        ToricClass base = alpha_class(tc, alpha);
        ToricClass D = divisor_class(tc, pl_to_divisor(f, tc));
        for (long long m = 1; m <= 64; ++m) {
            if (is_relatively_nef(base + D * make_rational(1, m), tc)) {
                f.plus.m = m;
                return f;
            }
        }
    }
    throw std::logic_error("no relatively nef random function found");
}

} // namespace napp
