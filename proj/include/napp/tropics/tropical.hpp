#pragma once

#include "napp/core/rational.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace napp {

// Element of (Q u {+inf}, min, +).
class TropicalValue {
public:
    TropicalValue() : inf_(true) {}
    TropicalValue(const Rational& v) : inf_(false), v_(v) {}
    TropicalValue(long v) : inf_(false), v_(v) {}
    TropicalValue(int v) : inf_(false), v_(v) {}

    static TropicalValue infinity() { return TropicalValue(); }
    static TropicalValue zero() { return TropicalValue(); }  // additive identity
    static TropicalValue one() { return TropicalValue(0L); } // multiplicative identity

    bool is_infinite() const { return inf_; }
    bool is_finite() const { return !inf_; }

    const Rational& value() const
    {
        if (inf_)
            throw std::domain_error("value() of +inf");
        return v_;
    }

    friend TropicalValue operator+(const TropicalValue& a, const TropicalValue& b)
    {
        if (a.inf_)
            return b;
        if (b.inf_)
            return a;
        return a.v_ <= b.v_ ? a : b;
    }

    friend TropicalValue operator*(const TropicalValue& a, const TropicalValue& b)
    {
        if (a.inf_ || b.inf_)
            return infinity();
        return TropicalValue(Rational(a.v_ + b.v_));
    }

    friend bool operator==(const TropicalValue& a, const TropicalValue& b)
    {
        if (a.inf_ || b.inf_)
            return a.inf_ == b.inf_;
        return a.v_ == b.v_;
    }

    // Numeric order with +inf on top.
    friend bool operator<(const TropicalValue& a, const TropicalValue& b)
    {
        if (a.inf_)
            return false;
        if (b.inf_)
            return true;
        return a.v_ < b.v_;
    }

    std::string str() const { return inf_ ? "inf" : to_string(v_); }

    friend std::ostream& operator<<(std::ostream& os, const TropicalValue& t) { return os << t.str(); }

private:
    bool inf_;
    Rational v_;
};

inline std::pair<TropicalValue, TropicalValue> trop_ops(const TropicalValue& a, const TropicalValue& b)
{
    return {a + b, a * b};
}

// Natural order of an idempotent semiring: a <= b iff a = a + b.
template <class S>
bool natural_leq(const S& a, const S& b)
{
    return a == a + b;
}

// Max-plus polynomial in one real variable, t -> max_k (slope_k t + c_k).
struct MaxPlusPoly {
    std::vector<std::pair<Rational, Rational>> terms; // (slope, intercept)

    Rational operator()(const Rational& t) const
    {
        if (terms.empty())
            throw std::domain_error("empty max-plus polynomial");
        Rational best = terms[0].first * t + terms[0].second;
        for (const auto& [a, c] : terms)
            best = std::max(best, Rational(a * t + c));
        return best;
    }

    Rational slope_at_infinity() const
    {
        if (terms.empty())
            throw std::domain_error("empty max-plus polynomial");
        Rational s = terms[0].first;
        for (const auto& term : terms)
            s = std::max(s, term.first);
        return s;
    }
};

} // namespace napp
