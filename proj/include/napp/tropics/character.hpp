#pragma once

#include "napp/tropics/tropical.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace napp {

// A candidate character of a semiring S, given by its values on finitely
// many elements. S needs +, *, <, ==.
template <class S>
struct CharacterCandidate {
    std::map<S, TropicalValue> assignment;

    const TropicalValue& at(const S& s) const
    {
        auto it = assignment.find(s);
        if (it == assignment.end()) {
            std::ostringstream os;
            os << "character candidate has no value for element " << s;
            throw std::invalid_argument(os.str());
        }
        return it->second;
    }
};

// Checks chi(1) = 0, chi(0) = +inf (when assigned) and, on every sampled
// pair (a, b), chi(a b) = chi(a) + chi(b) and chi(a + b) = min.
template <class S>
bool is_character(const CharacterCandidate<S>& chi, const std::vector<std::pair<S, S>>& sample_pairs,
                  const S& one, const S& zero, std::string* diagnostic = nullptr)
{
    auto fail = [&](const std::string& why) {
        if (diagnostic)
            *diagnostic = why;
        return false;
    };
    if (!(chi.at(one) == TropicalValue::one()))
        return fail("chi(1) != 0");
    if (auto it = chi.assignment.find(zero); it != chi.assignment.end() && it->second.is_finite())
        return fail("chi(0) is finite");
    for (const auto& [a, b] : sample_pairs) {
        const TropicalValue& ca = chi.at(a);
        const TropicalValue& cb = chi.at(b);
        if (!(chi.at(a * b) == ca * cb)) {
            std::ostringstream os;
            os << "multiplicativity fails on (" << a << ", " << b << ")";
            return fail(os.str());
        }
        if (!(chi.at(a + b) == ca + cb)) {
            std::ostringstream os;
            os << "additivity fails on (" << a << ", " << b << ")";
            return fail(os.str());
        }
    }
    return true;
}

} // namespace napp
