#pragma once

// Exact rational scalars. Everything in this library is computed over
// arbitrary-precision rationals; there is no floating point anywhere, so
// equality of results is always exact equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace calpanic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& q) {
    if (q < 0) return -1;
    if (q > 0) return 1;
    return 0;
}

inline Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Lowest-terms text form: "3", "-3", "3/4", "-3/4".
inline std::string rational_str(const Rational& q) { return q.str(); }

} // namespace calpanic
