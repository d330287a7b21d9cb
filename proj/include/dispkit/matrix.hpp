#pragma once

#include "dispkit/rational.hpp"

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dispkit {

/// Thrown when operand shapes do not fit an operation.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string shape_string(std::size_t rows, std::size_t cols);

///
/// Dense row-major matrix over a scalar backend (`double` or `Rational`).
///
/// Values are immutable once built: every operation returns a new matrix.
/// Zero-sized dimensions are allowed so that empty bases and rank-0
/// generators have a natural representation.
///
template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries))
    {
        if (data_.size() != rows_ * cols_)
            throw DimensionError("matrix entries: expected " + std::to_string(rows_ * cols_) +
                                 " values for shape " + shape_string(rows_, cols_) + ", got " +
                                 std::to_string(data_.size()));
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
    {
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw DimensionError("ragged initializer list");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    template <typename F>
    static Matrix generate(std::size_t rows, std::size_t cols, F&& f)
    {
        std::vector<T> v;
        v.reserve(rows * cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                v.push_back(T(f(i, j)));
        return Matrix(rows, cols, std::move(v));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }
    bool square() const { return rows_ == cols_; }

    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> entries() const { return data_; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using RationalMatrix = Matrix<Rational>;

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

template <typename T>
Matrix<T> zeros(std::size_t rows, std::size_t cols)
{
    return Matrix<T>(rows, cols);
}

template <typename T>
Matrix<T> identity(std::size_t n)
{
    return Matrix<T>::generate(n, n, [](std::size_t i, std::size_t j) { return i == j ? 1 : 0; });
}

template <typename T>
Matrix<T> diagonal(std::span<const T> d)
{
    std::vector<T> v(d.size() * d.size(), T(0));
    for (std::size_t i = 0; i < d.size(); ++i)
        v[i * d.size() + i] = d[i];
    return Matrix<T>(d.size(), d.size(), std::move(v));
}

template <typename T>
Matrix<T> column(std::span<const T> x)
{
    return Matrix<T>(x.size(), 1, std::vector<T>(x.begin(), x.end()));
}

// ---------------------------------------------------------------------------
// backend conversion
// ---------------------------------------------------------------------------

template <typename U, typename T>
Matrix<U> convert(const Matrix<T>& a)
{
    if constexpr (std::is_same_v<U, T>) {
        return a;
    } else {
        std::vector<U> v;
        v.reserve(a.size());
        for (const auto& x : a.entries()) {
            if constexpr (std::is_same_v<U, double>)
                v.push_back(ScalarTraits<T>::to_double(x));
            else
                v.push_back(ScalarTraits<U>::from_double(x));
        }
        return Matrix<U>(a.rows(), a.cols(), std::move(v));
    }
}

inline RealMatrix to_real(const RationalMatrix& a) { return convert<double>(a); }
inline RationalMatrix to_rational(const RealMatrix& a) { return convert<Rational>(a); }

// ---------------------------------------------------------------------------
// elementwise arithmetic
// ---------------------------------------------------------------------------

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("add: shapes " + shape_string(a.rows(), a.cols()) + " and " +
                             shape_string(b.rows(), b.cols()) + " differ");
    std::vector<T> v(a.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = a.entries()[k] + b.entries()[k];
    return Matrix<T>(a.rows(), a.cols(), std::move(v));
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("subtract: shapes " + shape_string(a.rows(), a.cols()) + " and " +
                             shape_string(b.rows(), b.cols()) + " differ");
    std::vector<T> v(a.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = a.entries()[k] - b.entries()[k];
    return Matrix<T>(a.rows(), a.cols(), std::move(v));
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a)
{
    std::vector<T> v(a.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = -a.entries()[k];
    return Matrix<T>(a.rows(), a.cols(), std::move(v));
}

template <typename T>
Matrix<T> scale(const T& c, const Matrix<T>& a)
{
    std::vector<T> v(a.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = c * a.entries()[k];
    return Matrix<T>(a.rows(), a.cols(), std::move(v));
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a)
{
    return Matrix<T>::generate(a.cols(), a.rows(),
                               [&](std::size_t i, std::size_t j) -> const T& { return a(j, i); });
}

// ---------------------------------------------------------------------------
// block assembly
// ---------------------------------------------------------------------------

/// Block-diagonal A ⊕ B of two square matrices.
template <typename T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b)
{
    if (!a.square() || !b.square())
        throw DimensionError("direct_sum: operands must be square, got " +
                             shape_string(a.rows(), a.cols()) + " and " +
                             shape_string(b.rows(), b.cols()));
    const std::size_t na = a.rows();
    return Matrix<T>::generate(na + b.rows(), na + b.rows(), [&](std::size_t i, std::size_t j) {
        if (i < na && j < na)
            return T(a(i, j));
        if (i >= na && j >= na)
            return T(b(i - na, j - na));
        return T(0);
    });
}

template <typename T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows())
        throw DimensionError("hstack: row counts differ (" + shape_string(a.rows(), a.cols()) +
                             " vs " + shape_string(b.rows(), b.cols()) + ")");
    return Matrix<T>::generate(a.rows(), a.cols() + b.cols(), [&](std::size_t i, std::size_t j) {
        return j < a.cols() ? T(a(i, j)) : T(b(i, j - a.cols()));
    });
}

template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.cols())
        throw DimensionError("vstack: column counts differ (" + shape_string(a.rows(), a.cols()) +
                             " vs " + shape_string(b.rows(), b.cols()) + ")");
    return Matrix<T>::generate(a.rows() + b.rows(), a.cols(), [&](std::size_t i, std::size_t j) {
        return i < a.rows() ? T(a(i, j)) : T(b(i - a.rows(), j));
    });
}

/// 2×2 block matrix [[a, b], [c, d]].
template <typename T>
Matrix<T> block2x2(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Matrix<T>& d)
{
    return vstack(hstack(a, b), hstack(c, d));
}

template <typename T>
Matrix<T> submatrix(const Matrix<T>& a, std::size_t r0, std::size_t c0, std::size_t rows,
                    std::size_t cols)
{
    if (r0 + rows > a.rows() || c0 + cols > a.cols())
        throw DimensionError("submatrix: window exceeds " + shape_string(a.rows(), a.cols()));
    return Matrix<T>::generate(rows, cols,
                               [&](std::size_t i, std::size_t j) { return T(a(r0 + i, c0 + j)); });
}

template <typename T>
Matrix<T> columns(const Matrix<T>& a, std::size_t c0, std::size_t count)
{
    return submatrix(a, 0, c0, a.rows(), count);
}

// ---------------------------------------------------------------------------
// norms and predicates
// ---------------------------------------------------------------------------

template <typename T>
double frobenius_norm(const Matrix<T>& a)
{
    double s = 0.0;
    for (const auto& x : a.entries()) {
        const double d = ScalarTraits<T>::to_double(x);
        s += d * d;
    }
    return std::sqrt(s);
}

template <typename T>
bool is_zero(const Matrix<T>& a)
{
    for (const auto& x : a.entries())
        if (!ScalarTraits<T>::is_zero(x))
            return false;
    return true;
}

} // namespace dispkit
