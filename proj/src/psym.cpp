#include "dispkit/psym.hpp"

#include "dispkit/displacement.hpp"
#include "dispkit/inverses.hpp"

#include <algorithm>
#include <cmath>

namespace dispkit {

HypothesisError::HypothesisError(const std::string& what, double residual)
    : std::invalid_argument(what + " (residual " + to_string(residual) + ")"), residual_(residual)
{
}

namespace {

constexpr double kOrthogonalTol = 1e-12;
constexpr double kReorthogonalizeLimit = 1e-6;

struct ImageSplit {
    RealMatrix range;  // orthonormal basis of range(W)
    RealMatrix kernel; // basis · Ker W
};

/// One SVD of W = M·basis decides both range(W) and the kernel directions,
/// so their dimensions always add up to basis.cols(). The cutoff is relative
/// to ‖M‖₂: W is judged as an image of M, not on its own scale.
ImageSplit split_image(const RealMatrix& m, const RealMatrix& basis, double tol)
{
    const RealMatrix w = m * basis;
    if (basis.cols() == 0)
        return {RealMatrix(m.rows(), 0), basis};
    const auto s = svd(w);
    const auto sm = svd(m);
    const double top = std::max(s.sigma.empty() ? 0.0 : s.sigma.front(), sm.sigma.empty() ? 0.0 : sm.sigma.front());
    std::size_t k = 0;
    while (k < s.sigma.size() && s.sigma[k] > tol * top)
        ++k;
    return {columns(s.u, 0, k), basis * columns(s.v, k, s.v.cols() - k)};
}

double orthogonality_defect(const RealMatrix& p)
{
    return frobenius_norm(p * transpose(p) - identity<double>(p.rows()));
}

void require_orthogonal(const RealMatrix& p)
{
    if (!p.square())
        throw DimensionError("P must be square, got " + shape_string(p.rows(), p.cols()));
    const double defect = orthogonality_defect(p);
    if (defect > kOrthogonalTol * static_cast<double>(std::max<std::size_t>(p.rows(), 1)))
        throw HypothesisError("P is not orthogonal", defect);
}

// Nearest orthogonal matrix (polar factor U·Vᵀ).
RealMatrix polar_factor(const RealMatrix& p)
{
    const auto s = svd(p);
    return s.u * transpose(s.v);
}

} // namespace

PSymWitness is_p_symmetric(const RealMatrix& m, const RealMatrix& p, double tol)
{
    require_orthogonal(p);
    if (!m.square() || m.rows() != p.rows())
        throw DimensionError("is_p_symmetric: M " + shape_string(m.rows(), m.cols()) +
                             " does not match P " + shape_string(p.rows(), p.cols()));
    PSymWitness w;
    w.p = p;
    w.residual = frobenius_norm(p * m * transpose(p) - transpose(m));
    w.scale = frobenius_norm(m);
    w.is_member = w.residual <= tol * w.scale;
    return w;
}

bool check_p_star_equivalence(const RealMatrix& m, const RealMatrix& p, double tol)
{
    return is_p_symmetric(m, p, tol).is_member && is_p_symmetric(m, transpose(p), tol).is_member;
}

TripletPairingReport singular_triplet_pairing(const RealMatrix& a, const RealMatrix& p, double tol,
                                              double angle_tol)
{
    require_orthogonal(p);
    if (!a.square() || a.rows() != p.rows())
        throw DimensionError("singular_triplet_pairing: A " + shape_string(a.rows(), a.cols()) +
                             " does not match P " + shape_string(p.rows(), p.cols()));
    const std::size_t n = a.rows();
    const auto s = svd(a);
    const double smax = n ? s.sigma[0] : 0.0;
    const double gap = tol * std::max(smax, 1e-300);
    const RealMatrix pu = p * s.u;
    const RealMatrix pv = p * s.v;
    const RealMatrix apu = a * pu;
    const RealMatrix atpv = transpose(a) * pv;

    TripletPairingReport report;
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        const bool zero_group = s.sigma[start] <= gap;
        while (end < n && (zero_group ? s.sigma[end] <= gap : s.sigma[start] - s.sigma[end] <= gap))
            ++end;

        TripletCluster c;
        c.sigma = zero_group ? 0.0 : s.sigma[start];
        c.multiplicity = end - start;
        for (std::size_t k = start; k < end; ++k) {
            const double sk = zero_group ? 0.0 : s.sigma[k];
            double r1 = 0.0, r2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                r1 += std::pow(apu(i, k) - sk * pv(i, k), 2);
                r2 += std::pow(atpv(i, k) - sk * pu(i, k), 2);
            }
            c.vector_residual = std::max({c.vector_residual, std::sqrt(r1), std::sqrt(r2)});
        }
        const auto u_grp = columns(s.u, start, end - start);
        const auto v_grp = columns(s.v, start, end - start);
        const auto pu_grp = columns(pu, start, end - start);
        const auto pv_grp = columns(pv, start, end - start);
        c.subspace_sine = std::max(max_principal_angle_sine(pu_grp, v_grp),
                                   max_principal_angle_sine(pv_grp, u_grp));

        report.max_vector_residual = std::max(report.max_vector_residual, c.vector_residual);
        report.max_subspace_sine = std::max(report.max_subspace_sine, c.subspace_sine);
        report.clusters.push_back(c);
        start = end;
    }
    report.holds = report.max_vector_residual <= tol * std::max(smax, 1.0) &&
                   report.max_subspace_sine <= angle_tol;
    return report;
}

PSymWitness verify_pinv_p_symmetry(const RealMatrix& a, const RealMatrix& p, double tol)
{
    return is_p_symmetric(pinv(a), p, tol);
}

PinvCertificate pinv_certificate(const RealMatrix& a, const RealMatrix& p_in, const RealMatrix& z,
                                 const RealMatrix& n, double tol)
{
    const std::size_t dim = a.rows();
    if (!a.square() || !p_in.square() || p_in.rows() != dim)
        throw DimensionError("pinv_certificate: A and P must be square of equal size");
    detail::check_pattern_shapes(a, z, n, "pinv_certificate");

    PinvCertificate cert;
    RealMatrix p = p_in;
    const double defect = orthogonality_defect(p_in);
    if (defect > kReorthogonalizeLimit)
        throw HypothesisError("pinv_certificate: P is not orthogonal", defect);
    if (defect > kOrthogonalTol * static_cast<double>(dim)) {
        p = polar_factor(p_in);
        cert.p_perturbation = frobenius_norm(p - p_in);
    }
    cert.p_is_symmetric = frobenius_norm(p - transpose(p)) <= kOrthogonalTol * static_cast<double>(dim);

    cert.pzp_residual = frobenius_norm(p * z * p - n);
    if (cert.pzp_residual > kPSymTol * std::max(1.0, frobenius_norm(n)))
        throw HypothesisError("pinv_certificate: hypothesis P*Z*P = N violated", cert.pzp_residual);
    const auto membership = is_p_symmetric(a, p);
    if (!membership.is_member)
        throw HypothesisError("pinv_certificate: A is not P-symmetric", membership.residual);

    const RealMatrix d = nabla(a, z, n);
    const RealMatrix dt = transpose(d);
    cert.delta = numerical_rank(d, tol).rank;

    const RealMatrix g1 = null_space(d, tol);
    const RealMatrix g2 = null_space(dt, tol);
    // K1 = G1·Ker(A·N·G1) = Ker AN ∩ Ker ∇A, V1 = range(A·N·G1); likewise on the left.
    auto [v1, k1] = split_image(a * n, g1, tol);
    auto [v2, k2] = split_image(transpose(z * a), g2, tol);
    cert.dim_g1 = g1.cols();
    cert.dim_g2 = g2.cols();
    cert.dim_k1 = k1.cols();
    cert.dim_k2 = k2.cols();
    cert.dim_v1 = v1.cols();
    cert.dim_v2 = v2.cols();

    cert.e1 = hstack(v1, p * k1);
    cert.e2 = hstack(v2, p * k2);
    const std::size_t target = dim - cert.delta;
    cert.rank_e1 = numerical_rank(cert.e1, tol).rank;
    cert.rank_e2 = numerical_rank(cert.e2, tol).rank;
    if (cert.e1.cols() != target || cert.e2.cols() != target || cert.rank_e1 != target ||
        cert.rank_e2 != target)
        throw CertificateError("pinv_certificate: E1/E2 do not have full column rank n - delta = " +
                               std::to_string(target) + " (E1: " + std::to_string(cert.e1.cols()) +
                               " cols, rank " + std::to_string(cert.rank_e1) + "; E2: " +
                               std::to_string(cert.e2.cols()) + " cols, rank " +
                               std::to_string(cert.rank_e2) + "; dim V1=" + std::to_string(cert.dim_v1) +
                               ", K1=" + std::to_string(cert.dim_k1) + ", V2=" + std::to_string(cert.dim_v2) +
                               ", K2=" + std::to_string(cert.dim_k2) + ")");

    const RealMatrix a_pinv = pinv(a, tol);
    const RealMatrix d_pinv = nabla(a_pinv, n, z);
    cert.pinv_delta = numerical_rank(d_pinv, tol).rank;
    cert.residual = frobenius_norm(transpose(cert.e2) * d_pinv * cert.e1);
    cert.scale = std::max(1.0, frobenius_norm(d_pinv));
    cert.valid = cert.residual <= 1e-9 * cert.scale;
    return cert;
}

RealMatrix p_symmetrize(const RealMatrix& x, const RealMatrix& p)
{
    return scale(0.5, x + p * transpose(x) * transpose(p));
}

} // namespace dispkit
