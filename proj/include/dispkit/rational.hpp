#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dispkit {

/// Arbitrary-precision rational scalar (exact backend).
using Rational = mpq_class;

/// Parses `p`, `p/q`, or a decimal literal (`-1.25`, `3e-4`) into an exact
/// rational. Decimals are converted digit-for-digit, not through a double.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& q);

/// Shortest decimal text that reads back to the same double.
std::string to_string(double x);

/// Scalar backend traits shared by every templated algorithm.
/// Nearest double to q (mpq_get_d truncates toward zero instead).
double to_nearest_double(const Rational& q);

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static double to_double(double x) { return x; }
    static double from_rational(const Rational& q) { return to_nearest_double(q); }
    static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static double to_double(const Rational& x) { return to_nearest_double(x); }
    // mpq_set_d is exact for every finite double.
    static Rational from_double(double x) { return Rational(x); }
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};

} // namespace dispkit
