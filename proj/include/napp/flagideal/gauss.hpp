#pragma once

#include "napp/flagideal/flag_ideal.hpp"
#include "napp/tropics/tropical.hpp"
#include "napp/valuations/valuation.hpp"
#include "napp/valuations/weight.hpp"

#include <stdexcept>

namespace napp {

// sigma(v): the C*-invariant extension of v to X x P^1 with v(t) = 1.
struct GaussValuation {
    Weight base;

    static constexpr long t_value = 1;
};

inline GaussValuation gauss_extend(const Weight& v)
{
    if (!v.is_finite())
        throw std::invalid_argument("Gauss extension needs a finite weight");
    return GaussValuation{v};
}

// min over generating points of <gamma, W> + lambda s, for normalized
// homogeneous W and s >= 0.
inline Rational flag_support(const FlagIdeal& a, const QVec& W, const Rational& s)
{
    if (static_cast<int>(W.size()) != a.n() + 1)
        throw std::invalid_argument("dimension mismatch between weight and flag ideal");
    bool first = true;
    Rational best;
    for (const auto& p : a.homogeneous_points()) {
        Rational val = s * static_cast<long>(p.back());
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] != 0)
                val += W[i] * static_cast<long>(p[i]);
        if (first || val < best) {
            best = val;
            first = false;
        }
    }
    return best;
}

// sigma(v)(a) = min_lambda { v(a_lambda) + lambda }.
inline TropicalValue gauss_eval(const GaussValuation& V, const FlagIdeal& a)
{
    if (V.base.n() != a.n())
        throw std::invalid_argument("dimension mismatch between valuation and flag ideal");
    if (!a.homogeneous() && a.chart() == V.base.chart) {
        TropicalValue best = TropicalValue::infinity();
        for (const auto& s : a.slices())
            best = best + eval_valuation(V.base, s.ideal) * TropicalValue(Rational(static_cast<long>(s.lambda)));
        return best;
    }
    return TropicalValue(flag_support(a, V.base.homogeneous(), Rational(1)));
}

// r(V)(I) = V(I . O_{X x P^1}).
inline TropicalValue restrict(const GaussValuation& V, const MonomialIdeal& I)
{
    if (I.is_zero())
        return TropicalValue::infinity();
    // I . O = sum_{lambda >= 0} I t^lambda; the lambda = 0 slice is minimal.
    return eval_valuation(V.base, I) * TropicalValue(Rational(0));
}

} // namespace napp
