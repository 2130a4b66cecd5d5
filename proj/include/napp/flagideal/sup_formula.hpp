#pragma once

#include "napp/flagideal/pl_function.hpp"
#include "napp/valuations/newton.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace napp {

struct FlagReesValuation {
    GaussValuation v; // normalized so the t-component is 1
    long long b;      // t-entry of the primitive facet normal
    IVec normal;
};

// Facets of NP(a) in (exponent, lambda) space with positive t-component.
inline std::vector<FlagReesValuation> rees_valuations(const FlagIdeal& a)
{
    if (a.homogeneous())
        throw std::invalid_argument("Rees valuations need a chart-local flag ideal");
    std::vector<FlagReesValuation> out;
    for (const auto& f : orthant_polyhedron_facets(a.points())) {
        long long b = f.normal.back();
        if (b <= 0)
            continue;
        QVec w;
        for (std::size_t i = 0; i + 1 < f.normal.size(); ++i)
            w.push_back(Rational(static_cast<long>(f.normal[i]), static_cast<long>(b)));
        for (auto& x : w)
            x.canonicalize();
        out.push_back(FlagReesValuation{gauss_extend(Weight::finite(a.chart(), w)), b, f.normal});
    }
    return out;
}

struct SupResult {
    Rational sup;
    GaussValuation argmax;
};

// sup over X^beth of (1/m) phi_b - phi_a, as a max over the Rees valuations of a.
inline SupResult sup_formula(const FlagIdeal& b, long long m, const FlagIdeal& a)
{
    if (m <= 0)
        throw std::invalid_argument("sup_formula needs a positive integer m");
    if (a.is_unit())
        throw std::invalid_argument("sup_formula needs a non-unit flag ideal");
    if (a.n() != b.n())
        throw std::invalid_argument("flag ideals over different bases");
    PLFunction f = phi_of_flag(b);
    f.plus.m = m;
    f = pl_sub(f, phi_of_flag(a));
    bool first = true;
    SupResult r;
    for (const auto& rv : rees_valuations(a)) {
        Rational val = eval(f, rv.v);
        if (first || val > r.sup) {
            r.sup = val;
            r.argmax = rv.v;
            first = false;
        }
    }
    if (first)
        throw std::logic_error("flag ideal without Rees valuations");
    return r;
}

} // namespace napp
