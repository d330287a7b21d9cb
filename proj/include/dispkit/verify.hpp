#pragma once

// One check per displacement-rank identity or bound. Every check runs on the
// exact backend: inputs are rational, ranks come from Bareiss elimination,
// and pseudo-inverses from the exact full-rank-factorization formula.

#include "dispkit/displacement.hpp"
#include "dispkit/matrix.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dispkit {

enum class Relation { LessEqual, Equal, Less };

const char* to_string(Relation r);

///
/// One theorem instance. `holds` is exactly relation(lhs, rhs); `witnesses`
/// carries every displacement rank that enters the statement so a failure
/// can be diagnosed from the record alone.
///
struct BoundCheck {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    Relation relation = Relation::LessEqual;
    bool holds = false;
    std::map<std::string, long long> witnesses;
    std::string instance_digest;
};

BoundCheck make_check(std::string name, long long lhs, Relation rel, long long rhs,
                      std::map<std::string, long long> witnesses, std::string digest);

nlohmann::json to_json(const BoundCheck& c);

/// Stable 64-bit FNV-1a digest (hex) of the text form of the inputs.
std::string instance_digest(std::initializer_list<const RationalMatrix*> inputs);

/// Exact displacement rank shorthand: rank(∇_{Z,N} A) or rank(Δ_{Z,N} A).
long long drank(Displacement kind, const RationalMatrix& a, const RationalMatrix& z,
                const RationalMatrix& n);

// ---------------------------------------------------------------------------
// ∇ / Δ link
// ---------------------------------------------------------------------------

/// δ∇_{Z,N}{A} ≤ δΔ_{Zᵀ,N}{A} + δ∇_{Z,Zᵀ}{I}  and  δΔ_{Z,N}{A} ≤ δ∇_{Zᵀ,N}{A} + δ∇_{Z,Zᵀ}{I}.
std::array<BoundCheck, 2> check_link_dn(const RationalMatrix& a, const RationalMatrix& z,
                                        const RationalMatrix& n);

struct LinkWitness {
    RationalMatrix a, z, n;
    BoundCheck check; // the first inequality, attained with equality
};

/// Randomized search (Töplitz A, N = S, Z a perturbed upper shift) for an
/// instance where the first link inequality is an equality with δ∇_{Z,Zᵀ}{I} ≥ 1.
std::optional<LinkWitness> find_link_equality_witness(std::uint64_t seed, std::size_t attempts);

// ---------------------------------------------------------------------------
// inverses
// ---------------------------------------------------------------------------

/// δΔ_{Z,N}{A} = δΔ_{N,Z}{A⁻¹} and δ∇_{Z,N}{A} = δ∇_{N,Z}{A⁻¹}.
std::array<BoundCheck, 2> check_inverse_duality(const RationalMatrix& a, const RationalMatrix& z,
                                                const RationalMatrix& n);

/// δ_{N,Z}{(A+ηI)⁻¹} ≤ δ_{Z,N}{A} + δ_{Z,N}{I} for ∇ and Δ.
std::array<BoundCheck, 2> check_regularized(const RationalMatrix& a, const RationalMatrix& z,
                                            const RationalMatrix& n, const Rational& eta);

/// Töplitz strengthening: δ∇_{Sᵀ,S}{(T+ηI)⁻¹} = δ∇_{S,Sᵀ}{T}.
BoundCheck check_regularized_toeplitz(const RationalMatrix& t, const Rational& eta);

/// δ_{Z2,N2}{Ā} ≤ δ_{Z1⊕Z2, N1⊕N2}{M} for the Schur complement of the
/// leading n1×n1 block, for ∇ and Δ. M and its leading block must be invertible.
std::array<BoundCheck, 2> check_schur(const RationalMatrix& m, const RationalMatrix& z1,
                                      const RationalMatrix& n1, const RationalMatrix& z2,
                                      const RationalMatrix& n2);

// ---------------------------------------------------------------------------
// products
// ---------------------------------------------------------------------------

/// δ_{Z1,Z2}{A1A2} ≤ δ_{Z1,N1}{A1} + δ_{N1,N2}{I} + δ_{N2,Z2}{A2} for A1 (n1×n2), A2 (n2×n1).
BoundCheck check_product(Displacement kind, const RationalMatrix& a1, const RationalMatrix& a2,
                         const RationalMatrix& z1, const RationalMatrix& n1, const RationalMatrix& n2,
                         const RationalMatrix& z2);

enum class ProductFamily { ToeplitzToeplitz, HankelHankel, ToeplitzHankel };

const char* to_string(ProductFamily f);

/// The two "≤ 4" bounds (Δ and ∇) for a product of square Töplitz/Hankel factors.
std::array<BoundCheck, 2> check_product_family(ProductFamily family, const RationalMatrix& a1,
                                               const RationalMatrix& a2);

struct ProductRectCheck {
    BoundCheck bound;    // δΔ_{ZA,NB}{AB} ≤ δΔ_{ZA,NA}{A} + δΔ_{NA,ZB}{I} + δΔ_{ZB,NB}{B}
    BoundCheck identity; // rank of the three-term identity residual = 0
};

ProductRectCheck check_product_rect(const RationalMatrix& a, const RationalMatrix& b,
                                    const RationalMatrix& za, const RationalMatrix& na,
                                    const RationalMatrix& zb, const RationalMatrix& nb);

/// Δ_{Z,Z}(AB) = Δ_{Z,N}A·B + A·Δ_{N,Z}B as a rank-of-residual = 0 check.
BoundCheck check_leibniz(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& z,
                         const RationalMatrix& n);

/// For B = A⁻¹: Δ_{Z,N}A·B + A·Δ_{N,Z}B = Δ_{Z,Z}I = 0.
BoundCheck check_inverse_null_displacement(const RationalMatrix& a, const RationalMatrix& z,
                                           const RationalMatrix& n);

/// For full-column-rank A (m ≥ n) and B = (AᵀA)⁻¹Aᵀ:
///   δΔ_{N,Z}{B} ≤ δΔ_{Z,N}{A} + 2δΔ_{N,Z}{Aᵀ}
///   δΔ_{N,Zᵀ}{B} ≤ 3δΔ_{Z,N}{A} + δΔ_{Zᵀ,Z}{I_m}
std::array<BoundCheck, 2> check_full_rank_pinv(const RationalMatrix& a, const RationalMatrix& z,
                                               const RationalMatrix& n);

// ---------------------------------------------------------------------------
// pseudo-inverses of rank-deficient matrices
// ---------------------------------------------------------------------------

/// δ∇_{N,Z}{A⁻} ≤ 2δ∇_{Z,N}{A} for P-symmetric A with P·Z·P = N (hypotheses
/// checked exactly; HypothesisError otherwise).
BoundCheck check_pinv_psym(const RationalMatrix& a, const RationalMatrix& p, const RationalMatrix& z,
                           const RationalMatrix& n);

/// δ∇_{N,Z}{A⁻} < 2r if δ∇_{Z,N}{A} < 2r, else δ∇_{N,Z}{A⁻} ≤ 2r, with r = rank A.
BoundCheck check_rank_pinv(const RationalMatrix& a, const RationalMatrix& z, const RationalMatrix& n);

enum class StructureFamily { Toeplitz, Hankel };

const char* to_string(StructureFamily f);

/// Töplitz: δ∇_{Sᵀ,S}{T⁻} ≤ 2δ∇_{S,Sᵀ}{T},  δΔ_{S,S}{T⁻} ≤ 2δΔ_{S,S}{T} + 1.
/// Hankel:  δ∇_{S,S}{H⁻} ≤ 2δ∇_{S,S}{H},     δΔ_{Sᵀ,S}{H⁻} ≤ 2δΔ_{S,Sᵀ}{H} + 1.
std::array<BoundCheck, 2> check_pinv_ht(const RationalMatrix& a, StructureFamily family);

/// m > n:  δΔ_{N,Z}{A⁻} ≤ 3δΔ_{N,Z}{Aᵀ} + 2δΔ_{Z,N}{A} + 2δ∇_{N,Nᵀ}{I_n}.
BoundCheck check_pinv_rect(const RationalMatrix& a, const RationalMatrix& z, const RationalMatrix& n);

// ---------------------------------------------------------------------------
// misc
// ---------------------------------------------------------------------------

/// rank(reconstruct_nabla(∇_{Z,N}A) − A) = 0 using the nilpotency index of Z or N.
BoundCheck check_reconstruction(const RationalMatrix& a, const RationalMatrix& z, const RationalMatrix& n);

/// δ_{pattern}{A} compared against a fixed value.
BoundCheck check_displacement_value(std::string name, const RationalMatrix& a, const Pattern& p,
                                    Relation rel, long long value);

} // namespace dispkit
