#pragma once

#include "dispkit/kernels.hpp"
#include "dispkit/linalg.hpp"
#include "dispkit/matrix.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dispkit {

/// Nabla: A − Z·A·N.  Delta: Z·A − A·N.
enum class Displacement { Nabla, Delta };

const char* to_string(Displacement d);

///
/// Displacement pattern {Z, N} together with the operator kind.
///
/// Z acts on the left (m×m) and N on the right (n×n) of an m×n matrix. The
/// matrices are stored exactly; floating-point callers convert on use.
///
struct Pattern {
    Displacement kind = Displacement::Nabla;
    RationalMatrix z;
    RationalMatrix n;
    std::string z_name = "Z";
    std::string n_name = "N";

    /// ASCII label, e.g. `dN[S,St]` or `dD[Zalt,-ZaltT]`.
    std::string label() const;

    bool operator==(const Pattern& o) const { return kind == o.kind && z == o.z && n == o.n; }
};

Pattern make_pattern(Displacement kind, RationalMatrix z, RationalMatrix n, std::string z_name = "Z",
                     std::string n_name = "N");

/// Swaps Z and N; the operator kind is kept.
Pattern dual_pattern(const Pattern& p);

/// Named constructors for the standard patterns on an m×n matrix.
namespace patterns {
Pattern shift_shift(Displacement kind, std::size_t m, std::size_t n);         // (S, S)
Pattern shift_shiftT(Displacement kind, std::size_t m, std::size_t n);        // (S, Sᵀ)
Pattern shiftT_shift(Displacement kind, std::size_t m, std::size_t n);        // (Sᵀ, S)
Pattern shift_cyclic(Displacement kind, std::size_t m, std::size_t n);        // (S_m, C_n)
Pattern alternating(Displacement kind, std::size_t n);                        // (Zalt, −Zaltᵀ)
Pattern alternatingT(Displacement kind, std::size_t n);                       // (Zaltᵀ, −Zaltᵀ)
} // namespace patterns

class PatternSyntaxError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

///
/// Resolves one side of a pattern spec to a size×size matrix.
///
/// Grammar: `term ('+' term)*` where a term is `[-]NAME[size][T]` with NAME
/// one of S, St, J, I, Cn, Zalt, 0, or a path to a matrix file. A `+` forms
/// a direct sum; all terms but the last need an explicit size.
///
RationalMatrix resolve_pattern_matrix(std::string_view spec, std::size_t size);

/// Parses `nabla:Z,N` / `delta:Z,N` for an m×n operand.
Pattern parse_pattern(std::string_view spec, std::size_t rows, std::size_t cols);

// ---------------------------------------------------------------------------
// operators
// ---------------------------------------------------------------------------

namespace detail {
template <typename T>
void check_pattern_shapes(const Matrix<T>& a, const Matrix<T>& z, const Matrix<T>& n, const char* op)
{
    if (!z.square() || z.rows() != a.rows() || !n.square() || n.rows() != a.cols())
        throw DimensionError(std::string(op) + ": operand " + shape_string(a.rows(), a.cols()) +
                             " needs Z " + shape_string(a.rows(), a.rows()) + " and N " +
                             shape_string(a.cols(), a.cols()) + ", got Z " +
                             shape_string(z.rows(), z.cols()) + " and N " +
                             shape_string(n.rows(), n.cols()));
}
} // namespace detail

template <typename T>
Matrix<T> nabla(const Matrix<T>& a, const Matrix<T>& z, const Matrix<T>& n)
{
    detail::check_pattern_shapes(a, z, n, "nabla");
    return a - z * a * n;
}

template <typename T>
Matrix<T> delta(const Matrix<T>& a, const Matrix<T>& z, const Matrix<T>& n)
{
    detail::check_pattern_shapes(a, z, n, "delta");
    return z * a - a * n;
}

template <typename T>
Matrix<T> displace(const Matrix<T>& a, const Pattern& p)
{
    const auto z = convert<T>(p.z);
    const auto n = convert<T>(p.n);
    return p.kind == Displacement::Nabla ? nabla(a, z, n) : delta(a, z, n);
}

RankReport displacement_rank(const RationalMatrix& a, const Pattern& p,
                             RankMethod method = RankMethod::ExactBareiss,
                             double tol = kDefaultRankTol);
RankReport displacement_rank(const RealMatrix& a, const Pattern& p,
                             RankMethod method = RankMethod::SvdThreshold,
                             double tol = kDefaultRankTol);

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

///
/// Low-rank factorization left·core·rightᵀ of a displaced matrix.
///
/// `generator_factorization` produces the minimal one (d = displacement
/// rank, core = diag of singular values). `svd_generator` produces the
/// [U, ZU]·diag(Σ, −Σ)·[V, NᵀV]ᵀ form built from the SVD of A, with d = 2·rank A.
///
struct Generator {
    RealMatrix left;  // m×d
    RealMatrix core;  // d×d
    RealMatrix right; // n×d
    Pattern pattern;

    std::size_t inner_dimension() const { return core.rows(); }
    RealMatrix expand() const { return left * core * transpose(right); }
};

Generator generator_factorization(const RealMatrix& a, const Pattern& p, double tol = kDefaultRankTol);

Generator svd_generator(const RealMatrix& a, const RealMatrix& z, const RealMatrix& n,
                        double tol = kDefaultRankTol);

// ---------------------------------------------------------------------------
// reconstruction
// ---------------------------------------------------------------------------

class NotInvertibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Smallest k with M^k = 0 (checked exactly), if any k ≤ size exists.
std::optional<std::size_t> nilpotency_index(const RationalMatrix& m);

namespace detail {
bool power_vanishes(const RationalMatrix& m, std::size_t k);
}

///
/// Σ_{i=0..k} Zⁱ·D·Nⁱ. When D = nabla(A, Z, N) and either Z^{k+1} = 0 or
/// N^{k+1} = 0 the sum telescopes to A. Throws NotInvertibleError otherwise.
///
template <typename T>
Matrix<T> reconstruct_nabla(const Matrix<T>& d, const Matrix<T>& z, const Matrix<T>& n, std::size_t k)
{
    detail::check_pattern_shapes(d, z, n, "reconstruct_nabla");
    if (!detail::power_vanishes(convert<Rational>(z), k + 1) &&
        !detail::power_vanishes(convert<Rational>(n), k + 1))
        throw NotInvertibleError("reconstruct_nabla: displacement operator not invertible via this sum "
                                 "(neither Z^" + std::to_string(k + 1) + " nor N^" +
                                 std::to_string(k + 1) + " vanishes)");
    Matrix<T> sum = d;
    Matrix<T> zi = identity<T>(z.rows());
    Matrix<T> ni = identity<T>(n.rows());
    for (std::size_t i = 1; i <= k; ++i) {
        zi = zi * z;
        ni = ni * n;
        sum = sum + zi * d * ni;
    }
    return sum;
}

} // namespace dispkit
