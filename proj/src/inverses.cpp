#include "dispkit/inverses.hpp"

#include <algorithm>

namespace dispkit {

SingularMatrixError::SingularMatrixError(const std::string& what, RankReport rank, std::size_t size)
    : std::runtime_error(what + " (rank " + std::to_string(rank.rank) + " of " + std::to_string(size) +
                         ", " + to_string(rank.method) + ")"),
      rank_(rank), size_(size)
{
}

RationalMatrix inverse(const RationalMatrix& a)
{
    if (!a.square())
        throw DimensionError("inverse: matrix must be square, got " + shape_string(a.rows(), a.cols()));
    const std::size_t n = a.rows();
    const std::size_t w = 2 * n;
    // Fraction-free forward elimination on [A | I].
    std::vector<Rational> m(n * w, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i * w + j] = a(i, j);
        m[i * w + n + i] = 1;
    }
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return m[i * w + j]; };

    Rational prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(at(p, k)) == 0)
            ++p;
        if (p == n)
            throw SingularMatrixError("inverse: matrix is singular", exact_rank(a), n);
        if (p != k)
            for (std::size_t j = 0; j < w; ++j)
                std::swap(at(p, j), at(k, j));
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational lead = at(i, k);
            for (std::size_t j = k + 1; j < w; ++j)
                at(i, j) = (at(k, k) * at(i, j) - lead * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    // Back substitution, one right-hand side per column of the identity.
    std::vector<Rational> x(n * n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t ii = n; ii-- > 0;) {
            Rational s = at(ii, n + c);
            for (std::size_t j = ii + 1; j < n; ++j)
                s -= at(ii, j) * x[j * n + c];
            x[ii * n + c] = s / at(ii, ii);
        }
    }
    return RationalMatrix(n, n, std::move(x));
}

RealMatrix inverse(const RealMatrix& a, double tol)
{
    if (!a.square())
        throw DimensionError("inverse: matrix must be square, got " + shape_string(a.rows(), a.cols()));
    const std::size_t n = a.rows();
    const auto s = svd(a);
    if (n > 0 && (s.sigma[0] == 0.0 || s.sigma[n - 1] <= tol * s.sigma[0])) {
        std::size_t r = 0;
        while (r < n && s.sigma[r] > tol * s.sigma[0] && s.sigma[0] > 0.0)
            ++r;
        throw SingularMatrixError("inverse: matrix is numerically singular",
                                  RankReport{r, RankMethod::SvdThreshold, tol}, n);
    }
    return RealMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            acc += s.v(i, k) * s.u(j, k) / s.sigma[k];
        return acc;
    });
}

RealMatrix pinv(const RealMatrix& a, double tol)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (a.empty())
        return RealMatrix(n, m);
    const auto s = svd(a);
    std::size_t r = 0;
    if (s.sigma[0] > 0.0)
        while (r < s.sigma.size() && s.sigma[r] > tol * s.sigma[0])
            ++r;
    return RealMatrix::generate(n, m, [&](std::size_t i, std::size_t j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < r; ++k)
            acc += s.v(i, k) * s.u(j, k) / s.sigma[k];
        return acc;
    });
}

RationalMatrix pinv_exact(const RationalMatrix& a)
{
    const auto [f, g] = full_rank_factorization(a);
    if (f.cols() == 0)
        return RationalMatrix(a.cols(), a.rows());
    const auto ft = transpose(f);
    const auto gt = transpose(g);
    return gt * inverse(g * gt) * inverse(ft * f) * ft;
}

double PenroseResiduals::max() const
{
    return std::max({r1, r2, r3, r4});
}

bool PenroseResiduals::is_moore_penrose(double tol) const
{
    return max() <= tol * scale;
}

bool PenroseResiduals::is_generalized_inverse(double tol) const
{
    return std::max(r1, r2) <= tol * scale;
}

PenroseResiduals penrose_residuals(const RealMatrix& a, const RealMatrix& b)
{
    if (b.rows() != a.cols() || b.cols() != a.rows())
        throw DimensionError("penrose_residuals: candidate must be " + shape_string(a.cols(), a.rows()) +
                             " for A " + shape_string(a.rows(), a.cols()) + ", got " +
                             shape_string(b.rows(), b.cols()));
    const auto ab = a * b;
    const auto ba = b * a;
    PenroseResiduals r;
    r.r1 = frobenius_norm(ab * a - a);
    r.r2 = frobenius_norm(ba * b - b);
    r.r3 = frobenius_norm(transpose(ab) - ab);
    r.r4 = frobenius_norm(transpose(ba) - ba);
    r.scale = 1.0 + frobenius_norm(a) * frobenius_norm(b);
    return r;
}

BlockMpResult block_mp_inverse(const RealMatrix& p, const RealMatrix& a1, const RealMatrix& a2, double tol)
{
    if (!p.square())
        throw DimensionError("block_mp_inverse: P must be square, got " + shape_string(p.rows(), p.cols()));
    const std::size_t n = p.rows();
    if (a1.cols() != n || a2.rows() != n)
        throw DimensionError("block_mp_inverse: need A1 (p x " + std::to_string(n) + ") and A2 (" +
                             std::to_string(n) + " x q), got A1 " + shape_string(a1.rows(), a1.cols()) +
                             " and A2 " + shape_string(a2.rows(), a2.cols()));
    const auto r1 = numerical_rank(a1, tol);
    const auto r2 = numerical_rank(a2, tol);
    if (r1.rank != r2.rank)
        throw std::invalid_argument("block_mp_inverse: rank(A1) = " + std::to_string(r1.rank) +
                                    " differs from rank(A2) = " + std::to_string(r2.rank));
    RealMatrix p_inv;
    try {
        p_inv = inverse(p, tol);
    } catch (const SingularMatrixError& e) {
        throw SingularMatrixError("block_mp_inverse: P is singular", e.rank(), e.size());
    }

    const RealMatrix x = -pinv(a1 * p_inv * a2, tol);
    const RealMatrix p_inv_a2 = p_inv * a2;
    const RealMatrix a1_p_inv = a1 * p_inv;
    const RealMatrix y = p_inv + p_inv_a2 * x * a1_p_inv;

    BlockMpResult out;
    out.m = block2x2(p, a2, a1, RealMatrix(a1.rows(), a2.cols()));
    out.m_pinv = block2x2(y, RealMatrix(-(p_inv_a2 * x)), RealMatrix(-(x * a1_p_inv)), x);
    out.residuals = penrose_residuals(out.m, out.m_pinv);
    return out;
}

} // namespace dispkit
