#pragma once

#include "napp/tropics/tropical.hpp"
#include "napp/valuations/monomial_ideal.hpp"
#include "napp/valuations/newton.hpp"
#include "napp/valuations/weight.hpp"

#include <stdexcept>
#include <vector>

namespace napp {

inline TropicalValue pair_monomial(const Weight& v, const IVec& a)
{
    Rational s = 0;
    for (int i = 0; i < v.n(); ++i) {
        if (a[i] == 0)
            continue;
        if (v.w[i].is_infinite())
            return TropicalValue::infinity();
        s += v.w[i].value() * static_cast<long>(a[i]);
    }
    return TropicalValue(s);
}

inline TropicalValue eval_valuation(const Weight& v, const MonomialIdeal& I)
{
    if (I.homogeneous()) {
        if (I.nvars() != v.n() + 1)
            throw std::invalid_argument("dimension mismatch between weight and ideal");
        if (!v.is_finite())
            throw std::invalid_argument("homogeneous ideals need a finite weight");
        QVec W = v.homogeneous();
        TropicalValue best = TropicalValue::infinity();
        for (const auto& g : I.gens())
            best = best + TropicalValue(dot(W, g));
        return best;
    }
    if (I.chart() != v.chart)
        throw std::invalid_argument("chart mismatch between weight and ideal");
    if (I.nvars() != v.n())
        throw std::invalid_argument("dimension mismatch between weight and ideal");
    TropicalValue best = TropicalValue::infinity();
    for (const auto& g : I.gens())
        best = best + pair_monomial(v, g);
    return best;
}

inline TropicalValue eval_valuation(const Weight& v, const PolyIdeal& I)
{
    if (I.chart != v.chart)
        throw std::invalid_argument("chart mismatch between weight and ideal");
    if (I.nvars != v.n())
        throw std::invalid_argument("dimension mismatch between weight and ideal");
    TropicalValue best = TropicalValue::infinity();
    for (const auto& f : I.gens)
        for (const auto& [a, c] : f)
            best = best + pair_monomial(v, a);
    return best;
}

// Re-expands each generator about the point q: f(q + z').
inline PolyIdeal recenter(const PolyIdeal& f, const QVec& q, const Weight& v)
{
    if (static_cast<int>(q.size()) != f.nvars || v.n() != f.nvars)
        throw std::invalid_argument("dimension mismatch in recenter");
    for (int i = 0; i < f.nvars; ++i)
        if (q[i] != 0 && !(v.w[i] == TropicalValue(0L)))
            throw std::invalid_argument("recentering point is off the stratum of the weight");
    std::vector<Polynomial> out;
    for (const auto& p : f.gens) {
        Polynomial r;
        for (const auto& [a, c] : p) {
            // prod_i (q_i + z_i)^{a_i}
            Polynomial term;
            term[IVec(f.nvars, 0)] = c;
            for (int i = 0; i < f.nvars; ++i) {
                if (a[i] == 0)
                    continue;
                Polynomial next;
                Integer binom = 1;
                for (long long k = 0; k <= a[i]; ++k) {
                    if (k > 0)
                        binom = binom * static_cast<long>(a[i] - k + 1) / static_cast<long>(k);
                    Rational qpow = 1;
                    for (long long e = 0; e < a[i] - k; ++e)
                        qpow *= q[i];
                    if (qpow == 0)
                        continue;
                    for (const auto& [b, cb] : term) {
                        IVec nb = b;
                        nb[i] += k;
                        next[nb] += cb * qpow * Rational(binom);
                    }
                }
                term = std::move(next);
            }
            for (const auto& [b, cb] : term)
                r[b] += cb;
        }
        for (auto it = r.begin(); it != r.end();)
            it = it->second == 0 ? r.erase(it) : std::next(it);
        if (r.empty())
            throw std::logic_error("recentered generator vanished");
        out.push_back(std::move(r));
    }
    return PolyIdeal(f.nvars, std::move(out), f.chart);
}

// One weight per facet of the Newton polyhedron with positive support value
// (primitive inner normal).
inline std::vector<Weight> rees_valuations(const MonomialIdeal& I)
{
    if (I.is_zero())
        throw std::invalid_argument("Rees valuations of the zero ideal");
    if (I.homogeneous())
        throw std::invalid_argument("Rees valuations need a chart-local ideal");
    std::vector<Weight> out;
    if (I.is_unit())
        return out;
    for (const auto& f : orthant_polyhedron_facets(I.gens())) {
        if (f.value <= 0)
            continue;
        out.push_back(Weight::finite(I.chart(), to_q(f.normal)));
    }
    return out;
}

// Minus the slope at infinity of t -> max_alpha -<alpha, t w>.
inline Rational lelong_kiselman(const Weight& v, const MonomialIdeal& I)
{
    if (I.is_zero())
        throw std::invalid_argument("Lelong-Kiselman number of the zero ideal");
    if (!v.is_finite())
        throw std::invalid_argument("Lelong-Kiselman number needs a finite weight");
    if (I.chart() != v.chart || I.nvars() != v.n())
        throw std::invalid_argument("chart mismatch between weight and ideal");
    MaxPlusPoly chi;
    QVec w = v.values();
    for (const auto& g : I.gens())
        chi.terms.emplace_back(-dot(w, g), Rational(0));
    return -chi.slope_at_infinity();
}

} // namespace napp
