#pragma once

#include "dispkit/displacement.hpp"
#include "dispkit/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace dispkit {

using Rng = std::mt19937_64;

/// A(i,j) = first_col[i-j] below the diagonal, first_row[j-i] above it.
template <typename T>
Matrix<T> toeplitz(const std::vector<T>& first_col, const std::vector<T>& first_row)
{
    if (first_col.empty() || first_row.empty())
        throw std::invalid_argument("toeplitz: generating vectors must be non-empty");
    if (first_col[0] != first_row[0])
        throw std::invalid_argument("toeplitz: first_col[0] and first_row[0] differ");
    return Matrix<T>::generate(first_col.size(), first_row.size(), [&](std::size_t i, std::size_t j) {
        return i >= j ? first_col[i - j] : first_row[j - i];
    });
}

/// A(i,j) = h[i+j] with h = first_col followed by last_row[1..].
template <typename T>
Matrix<T> hankel(const std::vector<T>& first_col, const std::vector<T>& last_row)
{
    if (first_col.empty() || last_row.empty())
        throw std::invalid_argument("hankel: generating vectors must be non-empty");
    if (first_col.back() != last_row.front())
        throw std::invalid_argument("hankel: first_col[last] and last_row[0] differ");
    const std::size_t m = first_col.size();
    return Matrix<T>::generate(m, last_row.size(), [&](std::size_t i, std::size_t j) {
        const std::size_t k = i + j;
        return k < m ? first_col[k] : last_row[k - m + 1];
    });
}

/// Hankel matrix from the anti-diagonal sequence h (length m+n−1).
template <typename T>
Matrix<T> hankel_from_sequence(const std::vector<T>& h, std::size_t m, std::size_t n)
{
    if (h.size() != m + n - 1)
        throw std::invalid_argument("hankel: sequence length must be rows+cols-1");
    return Matrix<T>::generate(m, n, [&](std::size_t i, std::size_t j) { return h[i + j]; });
}

/// Rows are successive cyclic right shifts of first_row; `rows` = 0 means square.
template <typename T>
Matrix<T> circulant(const std::vector<T>& first_row, std::size_t rows = 0)
{
    const std::size_t n = first_row.size();
    if (n == 0)
        throw std::invalid_argument("circulant: first_row must be non-empty");
    if (rows == 0)
        rows = n;
    return Matrix<T>::generate(rows, n, [&](std::size_t i, std::size_t j) {
        return first_row[(j + n - (i % n)) % n];
    });
}

template <typename T>
bool is_toeplitz(const Matrix<T>& a)
{
    for (std::size_t i = 0; i + 1 < a.rows(); ++i)
        for (std::size_t j = 0; j + 1 < a.cols(); ++j)
            if (a(i, j) != a(i + 1, j + 1))
                return false;
    return true;
}

template <typename T>
bool is_hankel(const Matrix<T>& a)
{
    for (std::size_t i = 0; i + 1 < a.rows(); ++i)
        for (std::size_t j = 1; j < a.cols(); ++j)
            if (a(i, j) != a(i + 1, j - 1))
                return false;
    return true;
}

/// Horizontal block (T H) of a Töplitz and a Hankel matrix with equal row counts.
template <typename T>
Matrix<T> block_th(const Matrix<T>& t, const Matrix<T>& h)
{
    if (t.rows() != h.rows())
        throw DimensionError("block_th: row counts differ (T " + shape_string(t.rows(), t.cols()) +
                             ", H " + shape_string(h.rows(), h.cols()) + ")");
    if (!is_toeplitz(t))
        throw std::invalid_argument("block_th: left block is not Toeplitz");
    if (!is_hankel(h))
        throw std::invalid_argument("block_th: right block is not Hankel");
    return hstack(t, h);
}

/// Pattern {S_m, S_nᵀ ⊕ S_p} under which (T H) has displacement rank ≤ 3.
Pattern block_th_pattern(std::size_t m, std::size_t n, std::size_t p);

// ---------------------------------------------------------------------------
// random families
// ---------------------------------------------------------------------------

/// Integer uniform in [lo, hi].
Rational random_integer(Rng& rng, int lo = -9, int hi = 9);
std::vector<Rational> random_integers(Rng& rng, std::size_t count, int lo = -9, int hi = 9);

RationalMatrix random_toeplitz(Rng& rng, std::size_t m, std::size_t n);
RationalMatrix random_hankel(Rng& rng, std::size_t m, std::size_t n);
RationalMatrix random_dense(Rng& rng, std::size_t m, std::size_t n);
/// Uniform [−1, 1] entries (float mode).
RealMatrix random_uniform(Rng& rng, std::size_t m, std::size_t n);

/// Random integer matrix with exact rank r, built as X·Y with X m×r, Y r×n.
RationalMatrix random_rank_deficient(Rng& rng, std::size_t m, std::size_t n, std::size_t r);

///
/// Hankel H with h_k = Σ c_i x_i^k over r distinct nodes drawn from
/// {±1, ±2, ±1/2, ±3, ±1/3} and nonzero integer weights in [−9, 9].
/// exact_rank(H) = r is verified; degenerate draws are retried (cap 100).
///
RationalMatrix rank_deficient_hankel(std::size_t n, std::size_t r, std::uint64_t seed);

/// J·H for H from rank_deficient_hankel: Töplitz with exact rank r.
RationalMatrix rank_deficient_toeplitz(std::size_t n, std::size_t r, std::uint64_t seed);

// ---------------------------------------------------------------------------
// worked examples
// ---------------------------------------------------------------------------

struct PaperExample {
    std::string name;
    RationalMatrix matrix;
    std::vector<Pattern> patterns;
};

/// Known names: alternate-toeplitz, rank3-toeplitz, circulant-3x4, block-th.
/// `circulant-3x4` takes optional (a,b,c,d) as `circulant-3x4:a,b,c,d`.
PaperExample paper_example(std::string_view name);
std::vector<std::string> paper_example_names();

/// Builds a matrix from a generator spec such as `toeplitz:5`, `hankel:4,6`,
/// `toeplitz-rank:6,3`, `dense:3,5`, `circulant:4`, `paper:alternate-toeplitz`.
RationalMatrix generate_from_spec(std::string_view spec, std::uint64_t seed);

} // namespace dispkit
