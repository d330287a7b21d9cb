#include "dispkit/linalg.hpp"
#include "dispkit/structured.hpp"

#include <doctest.h>

#include <random>

using namespace dispkit;

namespace {

double max_abs(const RealMatrix& a)
{
    double m = 0.0;
    for (double x : a.entries())
        m = std::max(m, std::abs(x));
    return m;
}

RealMatrix usvt(const SvdResult& s)
{
    const std::size_t k = s.sigma.size();
    return s.u * RealMatrix::generate(k, k, [&](std::size_t i, std::size_t j) { return i == j ? s.sigma[i] : 0.0; }) *
           transpose(s.v);
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("singular values agree with an independent LAPACK run")
{
    const RealMatrix x{{4, 1, -2}, {1, 3, 0}, {-2, 0, 5}, {1, 1, 1}};
    const auto s = svd(x);
    REQUIRE(s.sigma.size() == 3);
    CHECK(s.sigma[0] == doctest::Approx(6.66926035).epsilon(1e-8));
    CHECK(s.sigma[1] == doctest::Approx(3.85714036).epsilon(1e-8));
    CHECK(s.sigma[2] == doctest::Approx(1.90877831).epsilon(1e-8));
    CHECK(max_abs(usvt(s) - x) < 1e-12);
    CHECK(orthonormality_defect(s.u) < 1e-12);
    CHECK(orthonormality_defect(s.v) < 1e-12);
}

TEST_CASE("svd of wide, rank-deficient and zero matrices")
{
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const std::size_t m = 2 + t % 5, n = 2 + (t * 3) % 7;
        const std::size_t r = t % (std::min(m, n) + 1);
        const auto a = to_real(random_rank_deficient(rng, m, n, r));
        const auto s = svd(a);
        CHECK(max_abs(usvt(s) - a) <= 1e-10 * std::max(1.0, max_abs(a)));
        CHECK(orthonormality_defect(s.u) < 1e-10);
        CHECK(orthonormality_defect(s.v) < 1e-10);
        CHECK(std::is_sorted(s.sigma.rbegin(), s.sigma.rend()));
    }
    const auto z = svd(RealMatrix(3, 2));
    CHECK(z.sigma == std::vector<double>{0.0, 0.0});
    CHECK(orthonormality_defect(z.u) < 1e-14);
}

TEST_CASE("exact and numerical rank")
{
    const RationalMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(exact_rank(a).rank == 2);
    CHECK(exact_rank(a).method == RankMethod::ExactBareiss);
    CHECK(numerical_rank(to_real(a)).rank == 2);
    CHECK(exact_rank(RationalMatrix(3, 4)).rank == 0);
    CHECK(numerical_rank(RealMatrix(0, 0)).rank == 0);
    CHECK_THROWS_AS(numerical_rank(to_real(a), -1.0), std::invalid_argument);
    // 1e-10 perturbation is invisible at 1e-8 but not to exact elimination.
    const RealMatrix near{{1, 1}, {1, 1 + 1e-10}};
    CHECK(numerical_rank(near).rank == 1);
    CHECK(exact_rank(near).rank == 2);
}

TEST_CASE("numerical rank at 1e-8 equals the exact rank on integer matrices")
{
    Rng rng(2024);
    int discrepancies = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t m = 1 + rng() % 8, n = 1 + rng() % 8;
        const std::size_t r = rng() % (std::min(m, n) + 1);
        const auto a = random_rank_deficient(rng, m, n, r);
        discrepancies += numerical_rank(to_real(a)).rank != exact_rank(a).rank;
    }
    CHECK(discrepancies == 0);
}

TEST_CASE("null spaces, ranges and intersections")
{
    const RealMatrix a{{1, 2, 3}, {2, 4, 6}};
    const auto k = null_space(a);
    CHECK(k.cols() == 2);
    CHECK(max_abs(a * k) < 1e-12);
    CHECK(orthonormality_defect(k) < 1e-12);
    CHECK(range_basis(a).cols() == 1);

    // Ker [1 0 0] ∩ Ker [0 1 0] = span(e3).
    const auto i = kernel_intersection(RealMatrix{{1, 0, 0}}, RealMatrix{{0, 1, 0}});
    REQUIRE(i.cols() == 1);
    CHECK(std::abs(std::abs(i(2, 0)) - 1.0) < 1e-12);

    const RealMatrix q1{{1, 0}, {0, 1}, {0, 0}};
    const RealMatrix q2{{0, 1}, {1, 0}, {0, 0}};
    CHECK(max_principal_angle_sine(q1, q2) < 1e-12);
    CHECK(max_principal_angle_sine(q1, RealMatrix{{0}, {0}, {1}}) == doctest::Approx(1.0));
}

TEST_CASE("full-rank factorization reproduces the matrix")
{
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        const auto a = random_rank_deficient(rng, 5, 6, 1 + t % 4);
        const auto [f, g] = full_rank_factorization(a);
        CHECK(f.cols() == exact_rank(a).rank);
        CHECK(f * g == a);
    }
}

} // TEST_SUITE
