#pragma once

#include "napp/core/intvec.hpp"
#include "napp/core/rational.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace napp {

// Monomial ideal on an affine chart (chart >= 0, nvars = n) or a torus-invariant
// ideal sheaf on P^n given by homogeneous exponents (chart = -1, nvars = n + 1).
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    MonomialIdeal(int nvars, std::vector<IVec> gens, int chart = 0) : chart_(chart), nvars_(nvars)
    {
        if (nvars < 0)
            throw std::invalid_argument("negative variable count");
        for (const auto& g : gens) {
            if (static_cast<int>(g.size()) != nvars)
                throw std::invalid_argument("exponent vector has wrong length");
            for (long long e : g)
                if (e < 0)
                    throw std::invalid_argument("negative exponent");
        }
        gens_ = minimalize(std::move(gens));
    }

    static MonomialIdeal unit(int nvars, int chart = 0) { return MonomialIdeal(nvars, {IVec(nvars, 0)}, chart); }
    static MonomialIdeal zero_ideal(int nvars, int chart = 0) { return MonomialIdeal(nvars, {}, chart); }

    int chart() const { return chart_; }
    int nvars() const { return nvars_; }
    bool homogeneous() const { return chart_ < 0; }
    const std::vector<IVec>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && napp::is_zero(gens_[0]); }

    bool contains_monomial(const IVec& a) const
    {
        for (const auto& g : gens_)
            if (divides(g, a))
                return true;
        return false;
    }

    // I subset of J.
    bool subset_of(const MonomialIdeal& J) const
    {
        for (const auto& g : gens_)
            if (!J.contains_monomial(g))
                return false;
        return true;
    }

    MonomialIdeal pow(int k) const
    {
        if (k < 0)
            throw std::invalid_argument("negative power of an ideal");
        MonomialIdeal r = unit(nvars_, chart_);
        for (int i = 0; i < k; ++i)
            r = r * *this;
        return r;
    }

    friend MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        check_compatible(a, b);
        std::vector<IVec> g = a.gens_;
        g.insert(g.end(), b.gens_.begin(), b.gens_.end());
        return MonomialIdeal(a.nvars_, std::move(g), a.chart_);
    }

    friend MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        check_compatible(a, b);
        std::vector<IVec> g;
        for (const auto& x : a.gens_)
            for (const auto& y : b.gens_)
                g.push_back(add(x, y));
        return MonomialIdeal(a.nvars_, std::move(g), a.chart_);
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        return a.chart_ == b.chart_ && a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

    friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        if (a.chart_ != b.chart_)
            return a.chart_ < b.chart_;
        if (a.nvars_ != b.nvars_)
            return a.nvars_ < b.nvars_;
        return a.gens_ < b.gens_;
    }

    std::string str() const
    {
        if (is_zero())
            return "(0)";
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i)
                os << ", ";
            os << monomial_str(gens_[i]);
        }
        os << ")";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) { return os << I.str(); }

    static bool divides(const IVec& g, const IVec& a)
    {
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] > a[i])
                return false;
        return true;
    }

    static std::string monomial_str(const IVec& a)
    {
        std::ostringstream os;
        bool any = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0)
                continue;
            if (any)
                os << "*";
            os << "x" << i;
            if (a[i] > 1)
                os << "^" << a[i];
            any = true;
        }
        if (!any)
            os << "1";
        return os.str();
    }

private:
    static void check_compatible(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        if (a.nvars_ != b.nvars_ || a.chart_ != b.chart_)
            throw std::invalid_argument("ideals live on different charts");
    }

    static std::vector<IVec> minimalize(std::vector<IVec> g)
    {
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        std::vector<IVec> out;
        for (std::size_t i = 0; i < g.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < g.size() && !redundant; ++j)
                if (i != j && divides(g[j], g[i]))
                    redundant = true;
            if (!redundant)
                out.push_back(g[i]);
        }
        return out;
    }

    int chart_ = 0;
    int nvars_ = 0;
    std::vector<IVec> gens_;
};

using Polynomial = std::map<IVec, Rational>;

struct PolyIdeal {
    int chart = 0;
    int nvars = 0;
    std::vector<Polynomial> gens;

    PolyIdeal() = default;
    PolyIdeal(int nvars_, std::vector<Polynomial> gens_, int chart_ = 0) : chart(chart_), nvars(nvars_)
    {
        for (auto& p : gens_) {
            Polynomial q;
            for (const auto& [e, c] : p) {
                if (static_cast<int>(e.size()) != nvars_)
                    throw std::invalid_argument("exponent vector has wrong length");
                if (c != 0)
                    q[e] = c;
            }
            if (q.empty())
                throw std::invalid_argument("zero polynomial among generators");
            gens.push_back(std::move(q));
        }
    }
};

} // namespace napp
