#pragma once

#include "dispkit/kernels.hpp"
#include "dispkit/linalg.hpp"
#include "dispkit/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dispkit {

/// Thrown when a matrix that must be invertible is not; carries the rank found.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, RankReport rank, std::size_t size);
    const RankReport& rank() const { return rank_; }
    std::size_t size() const { return size_; }

private:
    RankReport rank_;
    std::size_t size_;
};

/// Exact inverse by elimination over the rationals.
RationalMatrix inverse(const RationalMatrix& a);

/// LU with partial pivoting; rejects matrices whose smallest singular value
/// is ≤ tol·σ_max.
RealMatrix inverse(const RealMatrix& a, double tol = kDefaultRankTol);

/// Moore-Penrose pseudo-inverse via SVD, inverting singular values above
/// tol·σ_max (the same cutoff as numerical_rank).
RealMatrix pinv(const RealMatrix& a, double tol = kDefaultRankTol);

/// Exact Moore-Penrose pseudo-inverse through a full-rank factorization
/// A = F·G:  A⁻ = Gᵀ(GGᵀ)⁻¹(FᵀF)⁻¹Fᵀ.
RationalMatrix pinv_exact(const RationalMatrix& a);

///
/// Frobenius norms of the four Penrose residuals for a candidate B of A:
///   r1 = ‖ABA − A‖, r2 = ‖BAB − B‖, r3 = ‖(AB)ᵀ − AB‖, r4 = ‖(BA)ᵀ − BA‖.
///
struct PenroseResiduals {
    double r1 = 0, r2 = 0, r3 = 0, r4 = 0;
    double scale = 1; // 1 + ‖A‖·‖B‖ (Frobenius)

    double max() const;
    /// All four residuals ≤ tol·scale.
    bool is_moore_penrose(double tol = 1e-9) const;
    /// Conditions (i) and (ii) only.
    bool is_generalized_inverse(double tol = 1e-9) const;
};

PenroseResiduals penrose_residuals(const RealMatrix& a, const RealMatrix& b);

/// (A + ηI)⁻¹. Throws SingularMatrixError when A + ηI is singular.
template <typename T>
Matrix<T> regularized_inverse(const Matrix<T>& a, const T& eta)
{
    if (!a.square())
        throw DimensionError("regularized_inverse: matrix must be square, got " +
                             shape_string(a.rows(), a.cols()));
    try {
        return inverse(a + scale(eta, identity<T>(a.rows())));
    } catch (const SingularMatrixError& e) {
        throw SingularMatrixError("regularized_inverse: A + eta*I is singular; choose a different eta",
                                  e.rank(), e.size());
    }
}

/// Ā = D − C·A⁻¹·B for M = [[A, B], [C, D]] with A the leading n1×n1 block.
template <typename T>
Matrix<T> schur_complement(const Matrix<T>& m, std::size_t n1)
{
    if (!m.square())
        throw DimensionError("schur_complement: M must be square, got " + shape_string(m.rows(), m.cols()));
    if (n1 == 0 || n1 >= m.rows())
        throw std::invalid_argument("schur_complement: leading block size must lie in [1, n-1]");
    const std::size_t n2 = m.rows() - n1;
    const auto a = submatrix(m, 0, 0, n1, n1);
    const auto b = submatrix(m, 0, n1, n1, n2);
    const auto c = submatrix(m, n1, 0, n2, n1);
    const auto d = submatrix(m, n1, n1, n2, n2);
    Matrix<T> a_inv;
    try {
        a_inv = inverse(a);
    } catch (const SingularMatrixError& e) {
        throw SingularMatrixError("schur_complement: leading block is singular", e.rank(), e.size());
    }
    return d - c * a_inv * b;
}

/// B = (AᵀA)⁻¹Aᵀ for a full-column-rank m×n matrix with m ≥ n.
template <typename T>
Matrix<T> full_rank_pinv(const Matrix<T>& a)
{
    if (a.rows() < a.cols())
        throw DimensionError("full_rank_pinv: need rows >= cols, got " + shape_string(a.rows(), a.cols()));
    const auto r = rank_of(a);
    if (r.rank != a.cols())
        throw SingularMatrixError("full_rank_pinv: matrix is column-rank deficient", r, a.cols());
    const auto at = transpose(a);
    return inverse(at * a) * at;
}

///
/// Candidate Moore-Penrose inverse of M = [[P, A2], [A1, 0]] assembled from
///   X = −(A1·P⁻¹·A2)⁻,  Y = P⁻¹ + P⁻¹·A2·X·A1·P⁻¹,
///   M⁻ = [[Y, −P⁻¹·A2·X], [−X·A1·P⁻¹, X]],
/// returned with the Penrose residuals of (M, M⁻). MP-ness is measured, not
/// assumed.
///
struct BlockMpResult {
    RealMatrix m;
    RealMatrix m_pinv;
    PenroseResiduals residuals;
};

BlockMpResult block_mp_inverse(const RealMatrix& p, const RealMatrix& a1, const RealMatrix& a2,
                               double tol = kDefaultRankTol);

} // namespace dispkit
