#pragma once

#include "dispkit/matrix.hpp"

#include <cstddef>

namespace dispkit {

/// Work (rows·cols·inner) below which `matmul` stays on the calling thread.
inline constexpr std::size_t kParallelMatmulThreshold = 32 * 32 * 32;

namespace detail {

template <typename T>
void check_product_shapes(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows())
        throw DimensionError("matmul: inner dimensions differ (" + shape_string(a.rows(), a.cols()) +
                             " times " + shape_string(b.rows(), b.cols()) + ")");
}

// One output row of a·b. Accumulation order is fixed (k ascending), so the
// serial and parallel drivers produce bit-identical results.
template <typename T>
void product_row(const Matrix<T>& a, const Matrix<T>& b, std::size_t i, T* out)
{
    const std::size_t n = b.cols();
    for (std::size_t j = 0; j < n; ++j)
        out[j] = T(0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const T& aik = a(i, k);
        if (ScalarTraits<T>::is_zero(aik))
            continue;
        const auto brow = b.row(k);
        for (std::size_t j = 0; j < n; ++j)
            out[j] += aik * brow[j];
    }
}

} // namespace detail

/// Reference product, single-threaded. Kept for testing the parallel kernel.
template <typename T>
Matrix<T> matmul_serial(const Matrix<T>& a, const Matrix<T>& b)
{
    detail::check_product_shapes(a, b);
    std::vector<T> v(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        detail::product_row(a, b, i, v.data() + i * b.cols());
    return Matrix<T>(a.rows(), b.cols(), std::move(v));
}

/// Matrix product, rows distributed over OpenMP threads for large operands.
template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b)
{
    detail::check_product_shapes(a, b);
    const std::size_t work = a.rows() * b.cols() * a.cols();
    if (work < kParallelMatmulThreshold)
        return matmul_serial(a, b);

    std::vector<T> v(a.rows() * b.cols());
    const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i)
        detail::product_row(a, b, static_cast<std::size_t>(i),
                            v.data() + static_cast<std::size_t>(i) * b.cols());
    return Matrix<T>(a.rows(), b.cols(), std::move(v));
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    return matmul(a, b);
}

/// a^k for square a (a^0 = I).
template <typename T>
Matrix<T> power(const Matrix<T>& a, std::size_t k)
{
    if (!a.square())
        throw DimensionError("power: matrix must be square, got " + shape_string(a.rows(), a.cols()));
    Matrix<T> result = identity<T>(a.rows());
    for (std::size_t i = 0; i < k; ++i)
        result = result * a;
    return result;
}

} // namespace dispkit
