#pragma once

// P-symmetric matrices: square M with P·M·Pᵀ = Mᵀ for a fixed orthogonal P.
// Töplitz matrices are J-symmetric, Hankel matrices are I-symmetric.

#include "dispkit/linalg.hpp"
#include "dispkit/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dispkit {

/// A stated hypothesis (orthogonality, P-symmetry, PZP = N) does not hold.
class HypothesisError : public std::invalid_argument {
public:
    HypothesisError(const std::string& what, double residual);
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Default relative tolerance for P-symmetry membership.
inline constexpr double kPSymTol = 1e-10;

struct PSymWitness {
    RealMatrix p;
    double residual = 0; // ‖P·M·Pᵀ − Mᵀ‖_F
    double scale = 0;    // ‖M‖_F
    bool is_member = false;
};

/// Throws HypothesisError when P is not orthogonal within 1e−12·n.
PSymWitness is_p_symmetric(const RealMatrix& m, const RealMatrix& p, double tol = kPSymTol);

/// P-symmetry and Pᵀ-symmetry agree: true iff M is a member for both.
bool check_p_star_equivalence(const RealMatrix& m, const RealMatrix& p, double tol = kPSymTol);

/// One group of (numerically) equal singular values.
struct TripletCluster {
    double sigma = 0;
    std::size_t multiplicity = 0;
    double vector_residual = 0; // max over the group of ‖A·P·u − σ·P·v‖ and ‖Aᵀ·P·v − σ·P·u‖
    double subspace_sine = 0;   // largest principal-angle sine, span(P·U) vs span(V) and span(P·V) vs span(U)
};

struct TripletPairingReport {
    std::vector<TripletCluster> clusters;
    double max_vector_residual = 0;
    double max_subspace_sine = 0;
    bool holds = false;
};

///
/// For P-symmetric A, checks that every singular triplet (u, v, σ) maps to
/// (P·v, P·u, σ): vector-wise, and at subspace level for repeated or zero σ
/// (the zero group pairs Ker Aᵀ with Ker A).
///
TripletPairingReport singular_triplet_pairing(const RealMatrix& a, const RealMatrix& p,
                                              double tol = kDefaultRankTol, double angle_tol = 1e-6);

/// Membership witness for pinv(A) (A⁻¹ when A is invertible).
PSymWitness verify_pinv_p_symmetry(const RealMatrix& a, const RealMatrix& p, double tol = kPSymTol);

///
/// Certificate that δ∇_{N,Z}{A⁻} ≤ 2·δ∇_{Z,N}{A}: two full-column-rank n×(n−δ)
/// matrices E1, E2 with E2ᵀ·∇_{N,Z}(A⁻)·E1 = 0, built as
///   G1 = Ker ∇A,            G2 = Ker (∇A)ᵀ,
///   K1 = Ker AN ∩ Ker ∇A,   K2 = Ker (ZA)ᵀ ∩ Ker (∇A)ᵀ,
///   V1 = range(A·N·G1),     V2 = range(Aᵀ·Zᵀ·G2),
///   Ei = [Vi, P·Ki].
///
struct PinvCertificate {
    RealMatrix e1;
    RealMatrix e2;
    double residual = 0;          // ‖E2ᵀ·∇_{N,Z}(A⁻)·E1‖_F
    double scale = 1;             // max(1, ‖∇_{N,Z}(A⁻)‖_F)
    std::size_t delta = 0;        // δ∇_{Z,N}{A}
    std::size_t pinv_delta = 0;   // observed δ∇_{N,Z}{A⁻}
    std::size_t rank_e1 = 0;
    std::size_t rank_e2 = 0;
    std::size_t dim_g1 = 0, dim_g2 = 0, dim_k1 = 0, dim_k2 = 0, dim_v1 = 0, dim_v2 = 0;
    double pzp_residual = 0;      // ‖P·Z·P − N‖_F
    double p_perturbation = 0;    // change made re-orthogonalizing P
    bool p_is_symmetric = true;   // PZP = N and PZPᵀ = N coincide only then
    bool valid = false;           // residual ≤ 1e−9·scale and both ranks equal n − δ
};

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws HypothesisError if P is far from orthogonal, A is not P-symmetric,
/// or P·Z·P ≠ N; CertificateError if E1 or E2 loses rank.
PinvCertificate pinv_certificate(const RealMatrix& a, const RealMatrix& p, const RealMatrix& z,
                                 const RealMatrix& n, double tol = kDefaultRankTol);

/// Symmetrization M = (X + P·Xᵀ·Pᵀ)/2, P-symmetric whenever P² = ±I.
RealMatrix p_symmetrize(const RealMatrix& x, const RealMatrix& p);

} // namespace dispkit
