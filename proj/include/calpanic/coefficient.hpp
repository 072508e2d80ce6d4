#pragma once

// Complex scalar with exact rational real and imaginary parts. Used as the
// coefficient of every graded term. Cancellation elsewhere in the library is
// componentwise: the real parts of two coefficients interact independently of
// the imaginary parts.

#include "calpanic/rational.hpp"

#include <string>
#include <utility>

namespace calpanic {

struct Coefficient {
    Rational re;
    Rational im;

    Coefficient() = default;
    Coefficient(Rational r) : re(std::move(r)) {}                     // NOLINT(google-explicit-constructor)
    Coefficient(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Coefficient(long long r) : re(r) {}                               // NOLINT(google-explicit-constructor)
    Coefficient(int r) : re(r) {}                                     // NOLINT(google-explicit-constructor)

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    bool operator==(const Coefficient&) const = default;
};

inline Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    return {a.re + b.re, a.im + b.im};
}

inline Coefficient operator-(const Coefficient& a, const Coefficient& b) {
    return {a.re - b.re, a.im - b.im};
}

inline Coefficient operator-(const Coefficient& a) { return {-a.re, -a.im}; }

inline Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Exact complex division; the caller guarantees b != 0.
inline Coefficient operator/(const Coefficient& a, const Coefficient& b) {
    Rational d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

// Diagnostic form, not the renderer's: "3", "3+1/2i", "-i", "2-3i".
std::string coefficient_str(const Coefficient& c);

} // namespace calpanic
