#pragma once

#include "napp/flagideal/flag_ideal.hpp"
#include "napp/flagideal/gauss.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace napp {

struct PLPart {
    FlagIdeal ideal;
    long long m = 1;
};

// (1/m1) phi_{a1} - (1/m2) phi_{a2} + c.
struct PLFunction {
    int n = 1;
    PLPart plus;
    PLPart minus;
    Rational constant = 0;

    bool is_plus_cone() const { return minus.ideal.is_unit(); }

    std::vector<FlagIdeal> flag_ideals() const
    {
        std::vector<FlagIdeal> r;
        if (!plus.ideal.is_unit())
            r.push_back(plus.ideal);
        if (!minus.ideal.is_unit())
            r.push_back(minus.ideal);
        return r;
    }

    std::string str() const
    {
        std::ostringstream os;
        os << "(1/" << plus.m << ") phi[" << plus.ideal.str() << "] - (1/" << minus.m << ") phi["
           << minus.ideal.str() << "] + " << to_string(constant);
        return os.str();
    }
};

inline PLFunction pl_zero(int n)
{
    return PLFunction{n, {FlagIdeal::unit(n), 1}, {FlagIdeal::unit(n), 1}, 0};
}

inline PLFunction pl_constant(int n, const Rational& c)
{
    PLFunction f = pl_zero(n);
    f.constant = c;
    return f;
}

inline PLFunction phi_of_flag(const FlagIdeal& a)
{
    PLFunction f = pl_zero(a.n());
    f.plus = PLPart{a, 1};
    return f;
}

// Homogeneous extension to N_R x R: for s > 0 the value at (w, s), zero for s <= 0.
inline Rational eval_homogeneous(const PLFunction& f, const QVec& w, const Rational& s)
{
    if (s <= 0)
        return 0;
    QVec W = homogeneous_from_N(w);
    Rational v = f.constant * s;
    v -= flag_support(f.plus.ideal, W, s) / static_cast<long>(f.plus.m);
    v += flag_support(f.minus.ideal, W, s) / static_cast<long>(f.minus.m);
    return v;
}

inline Rational eval(const PLFunction& f, const GaussValuation& V)
{
    if (V.base.n() != f.n)
        throw std::invalid_argument("dimension mismatch between valuation and PL function");
    Rational v = f.constant;
    v -= gauss_eval(V, f.plus.ideal).value() / static_cast<long>(f.plus.m);
    v += gauss_eval(V, f.minus.ideal).value() / static_cast<long>(f.minus.m);
    return v;
}

namespace detail {

inline PLPart combine_parts(const PLPart& a, const PLPart& b)
{
    if (a.ideal.is_unit())
        return b;
    if (b.ideal.is_unit())
        return a;
    long long L = std::lcm(a.m, b.m);
    FlagIdeal prod = (a.ideal.pow(static_cast<int>(L / a.m)) * b.ideal.pow(static_cast<int>(L / b.m))).newton_reduced();
    return PLPart{prod, L};
}

inline PLPart scale_part(const PLPart& a, long long p, long long q)
{
    if (a.ideal.is_unit())
        return a;
    long long m = checked_mul(a.m, q);
    long long g = std::gcd(p, m);
    return PLPart{a.ideal.pow(static_cast<int>(p / g)), m / g};
}

} // namespace detail

inline PLFunction pl_add(const PLFunction& f, const PLFunction& g)
{
    if (f.n != g.n)
        throw std::invalid_argument("PL functions over different bases");
    PLFunction r;
    r.n = f.n;
    r.plus = detail::combine_parts(f.plus, g.plus);
    r.minus = detail::combine_parts(f.minus, g.minus);
    r.constant = f.constant + g.constant;
    return r;
}

inline PLFunction pl_neg(const PLFunction& f)
{
    PLFunction r = f;
    std::swap(r.plus, r.minus);
    r.constant = -f.constant;
    return r;
}

inline PLFunction pl_sub(const PLFunction& f, const PLFunction& g)
{
    return pl_add(f, pl_neg(g));
}

inline PLFunction pl_scale(const PLFunction& f, const Rational& t)
{
    if (t <= 0)
        throw std::invalid_argument("pl_scale needs a positive rational");
    long long p = to_ll(t.get_num()), q = to_ll(t.get_den());
    PLFunction r;
    r.n = f.n;
    r.plus = detail::scale_part(f.plus, p, q);
    r.minus = detail::scale_part(f.minus, p, q);
    r.constant = f.constant * t;
    return r;
}

// The R_{>0}-action (t . f)(v) = t f(t^{-1} v). For t = p/q a part
// (1/m) phi_a becomes (1/(m q)) phi_{a'} with a' generated by the points (q gamma, p lambda).
inline PLFunction pl_act(const Rational& t, const PLFunction& f)
{
    if (t <= 0)
        throw std::invalid_argument("pl_act needs a positive rational");
    long long p = to_ll(t.get_num()), q = to_ll(t.get_den());
    auto act = [&](const PLPart& part) {
        if (part.ideal.is_unit())
            return part;
        std::vector<IVec> pts;
        for (const auto& x : part.ideal.points()) {
            IVec y = scaled(x, q);
            y.back() = checked_mul(x.back(), p);
            pts.push_back(y);
        }
        return PLPart{FlagIdeal::from_points(part.ideal.n(), part.ideal.chart(), pts), checked_mul(part.m, q)};
    };
    PLFunction r = f;
    r.plus = act(f.plus);
    r.minus = act(f.minus);
    r.constant = f.constant * t;
    return r;
}

// Pointwise max on the cone of (1/m) phi_a + c.
inline PLFunction pl_max(const PLFunction& f, const PLFunction& g)
{
    if (f.n != g.n)
        throw std::invalid_argument("PL functions over different bases");
    if (!f.is_plus_cone() || !g.is_plus_cone())
        throw std::invalid_argument("pl_max is only defined on the cone (1/m) phi_a + c");
    // (1/m) phi_a + p/q = (1/(m q)) phi_{a^q t^{-m p}}
    auto absorb = [](const PLFunction& h) {
        long long p = to_ll(h.constant.get_num()), q = to_ll(h.constant.get_den());
        FlagIdeal a = h.plus.ideal.pow(static_cast<int>(q)).shifted(-checked_mul(h.plus.m, p));
        return PLPart{a, checked_mul(h.plus.m, q)};
    };
    PLPart a = absorb(f), b = absorb(g);
    long long L = std::lcm(a.m, b.m);
    FlagIdeal s = (a.ideal.pow(static_cast<int>(L / a.m)) + b.ideal.pow(static_cast<int>(L / b.m))).newton_reduced();
    PLFunction r = pl_zero(f.n);
    r.plus = PLPart{s, L};
    return r;
}

// (t . f)(v) = t f(t^{-1} v).
inline Rational r_action(const Rational& t, const PLFunction& f, const Weight& v)
{
    if (t <= 0)
        throw std::invalid_argument("r_action needs a positive rational");
    // t f(w / t, 1) = f(w, t) by homogeneity.
    return eval_homogeneous(f, N_from_weight(v), t);
}

// log|I| for an ideal pulled back from X, evaluated under the same action.
inline Rational r_action(const Rational& t, const MonomialIdeal& I, const Weight& v)
{
    if (t <= 0)
        throw std::invalid_argument("r_action needs a positive rational");
    Weight scaled = v;
    for (auto& x : scaled.w)
        if (x.is_finite())
            x = TropicalValue(Rational(x.value() / t));
    TropicalValue val = eval_valuation(scaled, I);
    return -t * val.value();
}

} // namespace napp
