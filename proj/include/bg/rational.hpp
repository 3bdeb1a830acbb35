#ifndef BG_RATIONAL_HPP
#define BG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bg {

// Every threshold in this library (lambda, epsilon, kappa, tau as a fraction,
// c, delta) is an exact rational. Quantities like lambda^n blow through 64-bit
// range, hence the arbitrary-precision backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r = 1;
    for (unsigned i = 0; i < exp; ++i)
        r *= base;
    return r;
}

// Least integer >= r.
inline BigInt ceil_big(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);
    BigInt q = num / den;
    if (q * den < num)
        ++q;
    return q;
}

inline long long ceil_int(const Rational& r) {
    return static_cast<long long>(ceil_big(r));
}

// Parses "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

// Always "p/q", even for integers, so formats round-trip predictably.
inline std::string to_pq(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace bg

#endif
