#pragma once

// Displacement matrices used throughout: shifts, reversal, cyclic and
// alternating shifts. All entries are 0/±1, so every builder is exact.

#include "dispkit/matrix.hpp"

#include <cstddef>
#include <stdexcept>

namespace dispkit {

namespace detail {
inline void require_positive(std::size_t n, const char* what)
{
    if (n == 0)
        throw std::invalid_argument(std::string(what) + ": size must be positive");
}
} // namespace detail

/// Lower shift S: ones on the first subdiagonal. Nilpotent, S^n = 0.
template <typename T = Rational>
Matrix<T> shift_matrix(std::size_t n)
{
    detail::require_positive(n, "shift_matrix");
    return Matrix<T>::generate(n, n, [](std::size_t i, std::size_t j) { return i == j + 1 ? 1 : 0; });
}

/// Reverse identity J: ones on the anti-diagonal.
template <typename T = Rational>
Matrix<T> reverse_identity(std::size_t n)
{
    detail::require_positive(n, "reverse_identity");
    return Matrix<T>::generate(n, n, [n](std::size_t i, std::size_t j) { return i + j == n - 1 ? 1 : 0; });
}

/// Cyclic up-shift: ones at (i, i+1) and at (n-1, 0).
template <typename T = Rational>
Matrix<T> cyclic_shift(std::size_t n)
{
    detail::require_positive(n, "cyclic_shift");
    return Matrix<T>::generate(n, n, [n](std::size_t i, std::size_t j) { return (i + 1) % n == j ? 1 : 0; });
}

/// Alternating lower shift: entry (i+1, i) = (-1)^i with 0-based i, i.e.
/// subdiagonal +1, -1, +1, ...
template <typename T = Rational>
Matrix<T> alternating_shift(std::size_t n)
{
    detail::require_positive(n, "alternating_shift");
    return Matrix<T>::generate(n, n, [](std::size_t i, std::size_t j) {
        if (i != j + 1)
            return 0;
        return j % 2 == 0 ? 1 : -1;
    });
}

} // namespace dispkit
