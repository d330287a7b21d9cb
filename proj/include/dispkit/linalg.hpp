#pragma once

#include "dispkit/kernels.hpp"
#include "dispkit/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dispkit {

/// Relative singular-value cutoff used for every numerical rank decision.
inline constexpr double kDefaultRankTol = 1e-8;

/// Sweep cap for the one-sided Jacobi SVD.
inline constexpr int kMaxJacobiSweeps = 60;

/// Thin SVD A = U·diag(sigma)·Vᵀ with r = min(m, n) triplets, sigma descending.
struct SvdResult {
    RealMatrix u;              // m×r, orthonormal columns
    std::vector<double> sigma; // length r
    RealMatrix v;              // n×r, orthonormal columns
};

class SvdError : public std::runtime_error {
public:
    SvdError(int sweeps, double off_diagonal);
    int sweeps() const { return sweeps_; }

private:
    int sweeps_;
};

/// One-sided (Hestenes) Jacobi SVD.
SvdResult svd(const RealMatrix& a);

enum class RankMethod { SvdThreshold, ExactBareiss };

const char* to_string(RankMethod m);

struct RankReport {
    std::size_t rank = 0;
    RankMethod method = RankMethod::ExactBareiss;
    double tolerance = 0.0; // 0 for exact
};

/// Count of singular values above tol·sigma_max (0 for the zero matrix).
RankReport numerical_rank(const RealMatrix& a, double tol = kDefaultRankTol);

/// Rank over the rationals by fraction-free (Bareiss) elimination.
RankReport exact_rank(const RationalMatrix& a);

/// Doubles are converted exactly before elimination.
RankReport exact_rank(const RealMatrix& a);

/// Backend default: exact for rationals, SVD threshold for doubles.
inline RankReport rank_of(const RationalMatrix& a) { return exact_rank(a); }
inline RankReport rank_of(const RealMatrix& a, double tol = kDefaultRankTol)
{
    return numerical_rank(a, tol);
}

/// Spectral norm (largest singular value).
double spectral_norm(const RealMatrix& a);

// ---------------------------------------------------------------------------
// subspaces (floating point)
// ---------------------------------------------------------------------------

/// Orthonormal basis (n×k) of Ker A; singular values ≤ tol·sigma_max count as zero.
RealMatrix null_space(const RealMatrix& a, double tol = kDefaultRankTol);

/// Orthonormal basis (m×k) of the column space of A.
RealMatrix range_basis(const RealMatrix& a, double tol = kDefaultRankTol);

/// Orthonormal basis of Ker A ∩ Ker B (A, B with equal column counts).
RealMatrix kernel_intersection(const RealMatrix& a, const RealMatrix& b,
                               double tol = kDefaultRankTol);

/// Modified Gram-Schmidt with one reorthogonalization pass; columns whose
/// residual falls below tol·(largest column norm) are dropped.
RealMatrix orthonormalize(const RealMatrix& a, double tol = kDefaultRankTol);

/// Sine of the largest principal angle between span(q1) and span(q2); both
/// must have orthonormal columns. Returns 1 when the dimensions differ.
double max_principal_angle_sine(const RealMatrix& q1, const RealMatrix& q2);

/// ‖QᵀQ − I‖_F for a matrix expected to have orthonormal columns.
double orthonormality_defect(const RealMatrix& q);

// ---------------------------------------------------------------------------
// exact elimination
// ---------------------------------------------------------------------------

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

RowEchelon reduced_row_echelon(const RationalMatrix& a);

/// Full-rank factorization A = F·G with F (m×r) = pivot columns of A and
/// G (r×n) = nonzero rows of rref(A).
std::pair<RationalMatrix, RationalMatrix> full_rank_factorization(const RationalMatrix& a);

} // namespace dispkit
