#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace napp {

using Rational = mpq_class;
using Integer = mpz_class;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

inline Rational make_rational(long long p, long long q = 1)
{
    if (q == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(Integer(static_cast<long>(p)), Integer(static_cast<long>(q)));
    r.canonicalize();
    return r;
}

// "p/q" or "p" when the denominator is one.
inline std::string to_string(const Rational& r)
{
    return r.get_str();
}

inline Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+')
        ++i;
    bool slash = false, digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            digit = true;
        } else if (c == '/' && !slash && digit) {
            slash = true;
            digit = false;
        } else {
            throw std::invalid_argument("malformed rational literal '" + s + "'");
        }
    }
    if (!digit)
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    std::string t = s[0] == '+' ? s.substr(1) : s;
    Rational r;
    if (r.set_str(t, 10) != 0)
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline long long to_ll(const Integer& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits");
    return z.get_si();
}

inline Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact square root when r is the square of a rational.
inline bool rational_sqrt(const Rational& r, Rational& out)
{
    if (r < 0)
        return false;
    Integer p = r.get_num(), q = r.get_den();
    if (!mpz_perfect_square_p(p.get_mpz_t()) || !mpz_perfect_square_p(q.get_mpz_t()))
        return false;
    Integer sp, sq;
    mpz_sqrt(sp.get_mpz_t(), p.get_mpz_t());
    mpz_sqrt(sq.get_mpz_t(), q.get_mpz_t());
    out = Rational(sp, sq);
    out.canonicalize();
    return true;
}

} // namespace napp
