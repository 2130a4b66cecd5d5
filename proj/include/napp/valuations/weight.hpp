#pragma once

#include "napp/core/linalg.hpp"
#include "napp/tropics/tropical.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace napp {

// Quasi-monomial (semi)valuation on the chart `chart` of P^n: weights against
// the n affine coordinates x_i / x_chart (i != chart, increasing i).
struct Weight {
    int chart = 0;
    std::vector<TropicalValue> w;

    static Weight finite(int chart, const QVec& values)
    {
        Weight v;
        v.chart = chart;
        for (const auto& x : values) {
            if (x < 0)
                throw std::invalid_argument("weights must be nonnegative");
            v.w.emplace_back(x);
        }
        return v;
    }

    static Weight trivial(int n, int chart = 0) { return finite(chart, QVec(n, 0)); }

    int n() const { return static_cast<int>(w.size()); }

    bool is_finite() const
    {
        return std::all_of(w.begin(), w.end(), [](const TropicalValue& t) { return t.is_finite(); });
    }

    bool is_trivial() const
    {
        return std::all_of(w.begin(), w.end(), [](const TropicalValue& t) { return t == TropicalValue(0L); });
    }

    QVec values() const
    {
        QVec r;
        for (const auto& t : w)
            r.push_back(t.value());
        return r;
    }

    // Homogeneous weight vector W in Q^{n+1}, W_chart = 0.
    QVec homogeneous() const
    {
        QVec W;
        std::size_t k = 0;
        for (int i = 0; i <= n(); ++i)
            W.push_back(i == chart ? Rational(0) : w[k++].value());
        return W;
    }

    std::string str() const
    {
        std::ostringstream os;
        os << "chart " << chart << " (";
        for (std::size_t i = 0; i < w.size(); ++i)
            os << (i ? ", " : "") << w[i];
        os << ")";
        return os.str();
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.chart == b.chart && a.w == b.w; }
};

inline Rational hyperplane_support(const QVec& w)
{
    Rational m = 0;
    for (const auto& x : w)
        m = std::min(m, x);
    return -m;
}

// Normalized homogeneous coordinates (minimum entry zero) of a point of N_Q.
inline QVec homogeneous_from_N(const QVec& w)
{
    Rational h = hyperplane_support(w);
    QVec W;
    W.push_back(h);
    for (const auto& x : w)
        W.push_back(x + h);
    return W;
}

inline QVec N_from_homogeneous(const QVec& W)
{
    QVec w;
    for (std::size_t i = 1; i < W.size(); ++i)
        w.push_back(W[i] - W[0]);
    return w;
}

// The chart-local weight of a point of N_Q, on the first chart whose cone contains it.
inline Weight weight_from_N(const QVec& w)
{
    QVec W = homogeneous_from_N(w);
    int j = 0;
    while (W[j] != 0)
        ++j;
    QVec local;
    for (std::size_t i = 0; i < W.size(); ++i)
        if (static_cast<int>(i) != j)
            local.push_back(W[i]);
    return Weight::finite(j, local);
}

inline QVec N_from_weight(const Weight& v)
{
    return N_from_homogeneous(v.homogeneous());
}

// Center and support as 0-based coordinate index sets of the chart.
inline std::pair<std::set<int>, std::set<int>> center_support(const Weight& v)
{
    std::set<int> center, support;
    for (int i = 0; i < v.n(); ++i) {
        if (v.w[i].is_infinite()) {
            support.insert(i);
            center.insert(i);
        } else if (v.w[i].value() > 0) {
            center.insert(i);
        }
    }
    return {center, support};
}

} // namespace napp
