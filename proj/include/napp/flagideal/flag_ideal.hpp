#pragma once

#include "napp/valuations/monomial_ideal.hpp"
#include "napp/valuations/newton.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace napp {

struct FlagSlice {
    long long lambda;
    MonomialIdeal ideal; // cumulative: a_lambda
};

// Flag ideal a = sum_k I_k t^{lambda_k} on X x P^1, X = P^n. Stored by its
// distinct cumulative slices a_{lambda_k} = sum_{j <= k} I_j; the last slice is
// the unit ideal and a_lambda = 0 below the first slice.
class FlagIdeal {
public:
    FlagIdeal() = default;

    // chart >= 0: slices are chart-local ideals in n variables;
    // chart = -1: slices are homogeneous ideals in n + 1 variables.
    FlagIdeal(int n, int chart, std::vector<std::pair<long long, MonomialIdeal>> terms) : n_(n), chart_(chart)
    {
        if (n < 1)
            throw std::invalid_argument("flag ideal needs n >= 1");
        if (chart > n || chart < -1)
            throw std::invalid_argument("chart index out of range");
        const int nv = chart < 0 ? n + 1 : n;
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        MonomialIdeal acc = MonomialIdeal::zero_ideal(nv, chart);
        for (auto& [lambda, I] : terms) {
            if (I.nvars() != nv || I.chart() != chart)
                throw std::invalid_argument("flag slice lives on a different chart");
            if (I.is_zero())
                continue;
            MonomialIdeal next = acc + I;
            if (next == acc)
                continue;
            if (!slices_.empty() && slices_.back().lambda == lambda)
                slices_.back().ideal = next;
            else
                slices_.push_back(FlagSlice{lambda, next});
            acc = next;
            if (sheaf_unit(acc))
                break;
        }
        if (slices_.empty())
            throw std::invalid_argument("zero flag ideal");
        if (!sheaf_unit(slices_.back().ideal))
            throw std::invalid_argument("flag ideal never reaches the unit ideal");
    }

    static FlagIdeal unit(int n, int chart = 0)
    {
        int nv = chart < 0 ? n + 1 : n;
        return FlagIdeal(n, chart, {{0, MonomialIdeal::unit(nv, chart)}});
    }

    // (1) t^k: phi is the constant -k.
    static FlagIdeal t_power(int n, long long k, int chart = 0)
    {
        int nv = chart < 0 ? n + 1 : n;
        return FlagIdeal(n, chart, {{k, MonomialIdeal::unit(nv, chart)}});
    }

    int n() const { return n_; }
    int chart() const { return chart_; }
    bool homogeneous() const { return chart_ < 0; }
    int nvars() const { return chart_ < 0 ? n_ + 1 : n_; }
    const std::vector<FlagSlice>& slices() const { return slices_; }
    long long lambda_max() const { return slices_.back().lambda; }
    long long lambda_min() const { return slices_.front().lambda; }

    bool is_unit() const { return slices_.size() == 1 && slices_[0].lambda == 0; }

    MonomialIdeal a(long long lambda) const
    {
        MonomialIdeal r = MonomialIdeal::zero_ideal(nvars(), chart_);
        for (const auto& s : slices_)
            if (s.lambda <= lambda)
                r = s.ideal;
        return r;
    }

    // Points (exponent, lambda) generating the flag ideal as a monomial ideal
    // in the variables and t^{+-1}.
    std::vector<IVec> points() const
    {
        std::vector<IVec> pts;
        for (const auto& s : slices_)
            for (const auto& g : s.ideal.gens()) {
                IVec p = g;
                p.push_back(s.lambda);
                pts.push_back(p);
            }
        return pts;
    }

    // Points (gamma in N^{n+1}, lambda) in homogeneous coordinates.
    std::vector<IVec> homogeneous_points() const
    {
        if (homogeneous())
            return points();
        std::vector<IVec> pts;
        for (const auto& p : points()) {
            IVec q(p.begin(), p.end());
            q.insert(q.begin() + chart_, 0);
            pts.push_back(q);
        }
        return pts;
    }

    FlagIdeal to_homogeneous() const
    {
        if (homogeneous())
            return *this;
        return from_points(n_, -1, homogeneous_points());
    }

    // Same phi, keeping only vertices of the Newton polyhedron in (exponent, lambda) space.
    FlagIdeal newton_reduced() const { return from_points(n_, chart_, orthant_polyhedron_vertices(points())); }

    FlagIdeal shifted(long long k) const
    {
        std::vector<std::pair<long long, MonomialIdeal>> t;
        for (const auto& s : slices_)
            t.emplace_back(checked_add(s.lambda, k), s.ideal);
        return FlagIdeal(n_, chart_, std::move(t));
    }

    FlagIdeal pow(int k) const
    {
        if (k < 0)
            throw std::invalid_argument("negative power of a flag ideal");
        FlagIdeal r = unit(n_, chart_);
        FlagIdeal base = *this;
        while (k > 0) {
            if (k & 1)
                r = (r * base).newton_reduced();
            k >>= 1;
            if (k)
                base = (base * base).newton_reduced();
        }
        return r;
    }

    friend FlagIdeal operator*(const FlagIdeal& a, const FlagIdeal& b)
    {
        if (a.n_ != b.n_)
            throw std::invalid_argument("flag ideals over different bases");
        if (a.chart_ != b.chart_)
            return a.to_homogeneous() * b.to_homogeneous();
        std::vector<IVec> pts;
        for (const auto& p : a.points())
            for (const auto& q : b.points())
                pts.push_back(add(p, q));
        return from_points(a.n_, a.chart_, pts);
    }

    friend FlagIdeal operator+(const FlagIdeal& a, const FlagIdeal& b)
    {
        if (a.n_ != b.n_)
            throw std::invalid_argument("flag ideals over different bases");
        if (a.chart_ != b.chart_)
            return a.to_homogeneous() + b.to_homogeneous();
        std::vector<IVec> pts = a.points();
        for (const auto& q : b.points())
            pts.push_back(q);
        return from_points(a.n_, a.chart_, pts);
    }

    friend bool operator==(const FlagIdeal& a, const FlagIdeal& b)
    {
        if (a.n_ != b.n_ || a.chart_ != b.chart_ || a.slices_.size() != b.slices_.size())
            return false;
        for (std::size_t i = 0; i < a.slices_.size(); ++i)
            if (a.slices_[i].lambda != b.slices_[i].lambda || a.slices_[i].ideal != b.slices_[i].ideal)
                return false;
        return true;
    }

    std::string str() const
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < slices_.size(); ++i) {
            if (i)
                os << " + ";
            os << slices_[i].ideal.str() << "t^" << slices_[i].lambda;
        }
        return os.str();
    }

    static FlagIdeal from_points(int n, int chart, const std::vector<IVec>& pts)
    {
        const int nv = chart < 0 ? n + 1 : n;
        std::map<long long, std::vector<IVec>> by_lambda;
        for (const auto& p : pts) {
            if (static_cast<int>(p.size()) != nv + 1)
                throw std::invalid_argument("flag point has wrong length");
            by_lambda[p.back()].push_back(IVec(p.begin(), p.end() - 1));
        }
        std::vector<std::pair<long long, MonomialIdeal>> terms;
        for (auto& [l, g] : by_lambda)
            terms.emplace_back(l, MonomialIdeal(nv, std::move(g), chart));
        return FlagIdeal(n, chart, std::move(terms));
    }

    // A homogeneous ideal is the unit sheaf iff every chart sees a generator
    // that is a pure power of its own coordinate.
    static bool sheaf_unit(const MonomialIdeal& I)
    {
        if (!I.homogeneous())
            return I.is_unit();
        for (int j = 0; j < I.nvars(); ++j) {
            bool ok = false;
            for (const auto& g : I.gens()) {
                bool pure = true;
                for (int i = 0; i < I.nvars(); ++i)
                    if (i != j && g[i] != 0)
                        pure = false;
                ok |= pure;
            }
            if (!ok)
                return false;
        }
        return true;
    }

private:
    int n_ = 1;
    int chart_ = 0;
    std::vector<FlagSlice> slices_;
};

} // namespace napp
