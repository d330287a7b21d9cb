#include "dispkit/linalg.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

namespace dispkit {

SvdError::SvdError(int sweeps, double off_diagonal)
    : std::runtime_error("svd: no convergence after " + std::to_string(sweeps) +
                         " Jacobi sweeps (largest relative off-diagonal " +
                         std::to_string(off_diagonal) + ")"),
      sweeps_(sweeps)
{
}

const char* to_string(RankMethod m)
{
    return m == RankMethod::SvdThreshold ? "svd-threshold" : "exact-bareiss";
}

namespace {

// Column-major scratch storage for the Jacobi sweeps.
struct ColumnMajor {
    std::size_t rows, cols;
    std::vector<double> data;
    double* col(std::size_t j) { return data.data() + j * rows; }
    const double* col(std::size_t j) const { return data.data() + j * rows; }
};

double dot(const double* x, const double* y, std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += x[i] * y[i];
    return s;
}

// Extends the orthonormal columns `basis` to `target` columns, each time
// taking the unit vector with the largest component outside the span.
void complete_basis(std::vector<std::vector<double>>& basis, std::size_t dim, std::size_t target)
{
    while (basis.size() < target) {
        std::vector<double> best;
        double best_norm = -1.0;
        for (std::size_t e = 0; e < dim; ++e) {
            std::vector<double> x(dim, 0.0);
            x[e] = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& b : basis) {
                    const double c = dot(b.data(), x.data(), dim);
                    for (std::size_t i = 0; i < dim; ++i)
                        x[i] -= c * b[i];
                }
            const double nrm = std::sqrt(dot(x.data(), x.data(), dim));
            if (nrm > best_norm) {
                best_norm = nrm;
                best = std::move(x);
            }
        }
        for (auto& xi : best)
            xi /= best_norm;
        basis.push_back(std::move(best));
    }
}

SvdResult svd_tall(const RealMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    ColumnMajor w{m, n, std::vector<double>(m * n)};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w.col(j)[i] = a(i, j);
    ColumnMajor v{n, n, std::vector<double>(n * n, 0.0)};
    for (std::size_t j = 0; j < n; ++j)
        v.col(j)[j] = 1.0;

    const double rel_tol = std::max(1e-15, static_cast<double>(m) * DBL_EPSILON);
    // Columns this small are roundoff; rotating them only regenerates noise.
    const double negligible = static_cast<double>(m * n) * DBL_EPSILON * frobenius_norm(a);
    const double negligible_sq = negligible * negligible;
    bool converged = n < 2;
    double worst = 0.0;
    int sweep = 0;
    for (; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
        converged = true;
        worst = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double* wp = w.col(p);
                double* wq = w.col(q);
                const double alpha = dot(wp, wp, m);
                const double beta = dot(wq, wq, m);
                const double gamma = dot(wp, wq, m);
                if (alpha <= negligible_sq || beta <= negligible_sq || gamma == 0.0)
                    continue;
                const double rel = std::abs(gamma) / std::sqrt(alpha * beta);
                if (rel <= rel_tol)
                    continue;
                converged = false;
                worst = std::max(worst, rel);

                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double xp = wp[i];
                    const double xq = wq[i];
                    wp[i] = c * xp - s * xq;
                    wq[i] = s * xp + c * xq;
                }
                double* vp = v.col(p);
                double* vq = v.col(q);
                for (std::size_t i = 0; i < n; ++i) {
                    const double xp = vp[i];
                    const double xq = vq[i];
                    vp[i] = c * xp - s * xq;
                    vq[i] = s * xp + c * xq;
                }
            }
        }
    }
    if (!converged)
        throw SvdError(sweep, worst);

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j)
    {
        const double nj = std::sqrt(dot(w.col(j), w.col(j), m));
        norms[j] = nj <= negligible ? 0.0 : nj;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    SvdResult out;
    out.sigma.resize(n);
    std::vector<std::vector<double>> ucols;
    std::vector<double> vdata(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        out.sigma[k] = norms[j];
        for (std::size_t i = 0; i < n; ++i)
            vdata[i * n + k] = v.col(j)[i];
        if (norms[j] > 0.0) {
            std::vector<double> u(w.col(j), w.col(j) + m);
            for (auto& x : u)
                x /= norms[j];
            ucols.push_back(std::move(u));
        }
    }
    // Zero singular values sit at the tail; their left vectors are any
    // orthonormal completion.
    complete_basis(ucols, m, n);

    std::vector<double> udata(m * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < m; ++i)
            udata[i * n + k] = ucols[k][i];
    out.u = RealMatrix(m, n, std::move(udata));
    out.v = RealMatrix(n, n, std::move(vdata));
    return out;
}

} // namespace

SvdResult svd(const RealMatrix& a)
{
    if (a.rows() < a.cols()) {
        auto t = svd_tall(transpose(a));
        return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
    }
    return svd_tall(a);
}

RankReport numerical_rank(const RealMatrix& a, double tol)
{
    if (tol < 0.0)
        throw std::invalid_argument("numerical_rank: tolerance must be non-negative");
    RankReport r{0, RankMethod::SvdThreshold, tol};
    if (a.empty())
        return r;
    const auto s = svd(a);
    if (s.sigma.empty() || s.sigma[0] == 0.0)
        return r;
    const double cutoff = tol * s.sigma[0];
    for (double x : s.sigma)
        if (x > cutoff)
            ++r.rank;
    return r;
}

RankReport exact_rank(const RationalMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<Rational> w(a.entries().begin(), a.entries().end());
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return w[i * n + j]; };

    std::size_t rank = 0;
    Rational prev = 1;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && sgn(at(p, c)) == 0)
            ++p;
        if (p == m)
            continue;
        if (p != rank)
            for (std::size_t j = 0; j < n; ++j)
                std::swap(at(p, j), at(rank, j));
        const Rational pivot = at(rank, c);
        for (std::size_t i = rank + 1; i < m; ++i) {
            const Rational lead = at(i, c);
            for (std::size_t j = c + 1; j < n; ++j)
                at(i, j) = (pivot * at(i, j) - lead * at(rank, j)) / prev;
            at(i, c) = 0;
        }
        prev = pivot;
        ++rank;
    }
    return {rank, RankMethod::ExactBareiss, 0.0};
}

RankReport exact_rank(const RealMatrix& a)
{
    return exact_rank(to_rational(a));
}

double spectral_norm(const RealMatrix& a)
{
    if (a.empty())
        return 0.0;
    const auto s = svd(a);
    return s.sigma.empty() ? 0.0 : s.sigma[0];
}

RealMatrix null_space(const RealMatrix& a, double tol)
{
    const std::size_t n = a.cols();
    if (n == 0)
        return RealMatrix(0, 0);
    if (a.rows() == 0)
        return identity<double>(n);
    // Zero rows leave the kernel unchanged and give a full n×n V.
    const RealMatrix padded = a.rows() < n ? vstack(a, RealMatrix(n - a.rows(), n)) : a;
    const auto s = svd(padded);
    const double cutoff = tol * s.sigma[0];
    std::size_t first = 0;
    while (first < n && s.sigma[first] > cutoff && s.sigma[0] > 0.0)
        ++first;
    return columns(s.v, first, n - first);
}

RealMatrix range_basis(const RealMatrix& a, double tol)
{
    if (a.empty())
        return RealMatrix(a.rows(), 0);
    const auto s = svd(a);
    std::size_t k = 0;
    if (s.sigma[0] > 0.0)
        while (k < s.sigma.size() && s.sigma[k] > tol * s.sigma[0])
            ++k;
    return columns(s.u, 0, k);
}

namespace {
RealMatrix complement_projector(const RealMatrix& basis, std::size_t n)
{
    if (basis.cols() == 0)
        return identity<double>(n);
    return identity<double>(n) - basis * transpose(basis);
}
} // namespace

RealMatrix kernel_intersection(const RealMatrix& a, const RealMatrix& b, double tol)
{
    if (a.cols() != b.cols())
        throw DimensionError("kernel_intersection: column counts differ (" +
                             shape_string(a.rows(), a.cols()) + " vs " +
                             shape_string(b.rows(), b.cols()) + ")");
    const std::size_t n = a.cols();
    const RealMatrix ka = null_space(a, tol);
    const RealMatrix kb = null_space(b, tol);
    if (ka.cols() == 0 || kb.cols() == 0)
        return RealMatrix(n, 0);
    const RealMatrix stacked = vstack(complement_projector(ka, n), complement_projector(kb, n));
    return null_space(stacked, tol);
}

RealMatrix orthonormalize(const RealMatrix& a, double tol)
{
    const std::size_t m = a.rows();
    std::vector<std::vector<double>> kept;
    double largest = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            s += a(i, j) * a(i, j);
        largest = std::max(largest, std::sqrt(s));
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
        std::vector<double> x(m);
        for (std::size_t i = 0; i < m; ++i)
            x[i] = a(i, j);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : kept) {
                const double c = dot(b.data(), x.data(), m);
                for (std::size_t i = 0; i < m; ++i)
                    x[i] -= c * b[i];
            }
        const double nrm = std::sqrt(dot(x.data(), x.data(), m));
        if (nrm > tol * largest && nrm > 0.0) {
            for (auto& xi : x)
                xi /= nrm;
            kept.push_back(std::move(x));
        }
    }
    return RealMatrix::generate(m, kept.size(), [&](std::size_t i, std::size_t j) { return kept[j][i]; });
}

double max_principal_angle_sine(const RealMatrix& q1, const RealMatrix& q2)
{
    if (q1.rows() != q2.rows())
        throw DimensionError("principal angles: ambient dimensions differ");
    if (q1.cols() != q2.cols())
        return 1.0;
    if (q1.cols() == 0)
        return 0.0;
    const RealMatrix residual = q1 - q2 * (transpose(q2) * q1);
    return std::min(1.0, spectral_norm(residual));
}

double orthonormality_defect(const RealMatrix& q)
{
    return frobenius_norm(transpose(q) * q - identity<double>(q.cols()));
}

RowEchelon reduced_row_echelon(const RationalMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<Rational> w(a.entries().begin(), a.entries().end());
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return w[i * n + j]; };

    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < m; ++c) {
        std::size_t p = row;
        while (p < m && sgn(at(p, c)) == 0)
            ++p;
        if (p == m)
            continue;
        if (p != row)
            for (std::size_t j = 0; j < n; ++j)
                std::swap(at(p, j), at(row, j));
        const Rational inv = 1 / at(row, c);
        for (std::size_t j = c; j < n; ++j)
            at(row, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || sgn(at(i, c)) == 0)
                continue;
            const Rational f = at(i, c);
            for (std::size_t j = c; j < n; ++j)
                at(i, j) -= f * at(row, j);
        }
        out.pivots.push_back(c);
        ++row;
    }
    out.reduced = RationalMatrix(m, n, std::move(w));
    return out;
}

std::pair<RationalMatrix, RationalMatrix> full_rank_factorization(const RationalMatrix& a)
{
    const auto ech = reduced_row_echelon(a);
    const std::size_t r = ech.pivots.size();
    auto f = RationalMatrix::generate(a.rows(), r, [&](std::size_t i, std::size_t k) {
        return a(i, ech.pivots[k]);
    });
    auto g = submatrix(ech.reduced, 0, 0, r, a.cols());
    return {std::move(f), std::move(g)};
}

} // namespace dispkit
