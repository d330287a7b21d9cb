#include "dispkit/displacement.hpp"
#include "dispkit/special.hpp"
#include "dispkit/structured.hpp"

#include <doctest.h>

using namespace dispkit;
using enum Displacement;

namespace {

RationalMatrix S(std::size_t n) { return shift_matrix<Rational>(n); }
RationalMatrix St(std::size_t n) { return transpose(shift_matrix<Rational>(n)); }

std::size_t rk(const RationalMatrix& a) { return exact_rank(a).rank; }

double max_abs(const RealMatrix& a)
{
    double m = 0.0;
    for (double x : a.entries())
        m = std::max(m, std::abs(x));
    return m;
}

} // namespace

TEST_SUITE("displacement") {

TEST_CASE("operator definitions")
{
    const RationalMatrix a{{1, 2}, {3, 4}};
    const RationalMatrix z{{0, 1}, {0, 0}};
    const RationalMatrix n{{2, 0}, {1, 1}};
    CHECK(nabla(a, z, n) == a - z * a * n);
    CHECK(delta(a, z, n) == z * a - a * n);
    CHECK(nabla(a, RationalMatrix(2, 2), RationalMatrix(2, 2)) == a);
    CHECK(is_zero(delta(identity<Rational>(4), S(4), S(4))));
    CHECK(rk(nabla(identity<Rational>(5), S(5), St(5))) == 1);
    CHECK(rk(nabla(identity<Rational>(5), St(5), S(5))) == 1);
    CHECK_THROWS_AS(nabla(a, S(3), S(2)), DimensionError);
    CHECK_THROWS_AS(delta(a, S(2), S(3)), DimensionError);
}

TEST_CASE("Toeplitz nabla is confined to the first row and column")
{
    Rng rng(1);
    const auto t = random_toeplitz(rng, 5, 5);
    const auto d = nabla(t, S(5), St(5));
    for (std::size_t i = 1; i < 5; ++i)
        for (std::size_t j = 1; j < 5; ++j)
            CHECK(d(i, j) == 0);
    CHECK(rk(delta(t, S(5), S(5))) <= 2);
    const auto h = random_hankel(rng, 5, 5);
    CHECK(rk(delta(h, S(5), St(5))) <= 2);
}

TEST_CASE("patterns and the spec mini-language")
{
    const auto p = parse_pattern("nabla:S,St", 5, 5);
    CHECK(p.kind == Nabla);
    CHECK(p.z == S(5));
    CHECK(p.n == St(5));
    CHECK(p.label() == "dN[S,St]");

    const auto q = parse_pattern("delta:Zalt,-ZaltT", 5, 5);
    CHECK(q.kind == Delta);
    CHECK(q.n == -transpose(alternating_shift<Rational>(5)));
    CHECK(q.label() == "dD[Zalt,-ZaltT]");

    const auto r = parse_pattern("nabla:S3,St4+S3", 3, 7);
    CHECK(r.n == direct_sum(St(4), S(3)));

    CHECK(parse_pattern("N:J,I", 3, 3).n == identity<Rational>(3));
    CHECK(parse_pattern("D:Cn,0", 4, 4).z == cyclic_shift<Rational>(4));

    CHECK_THROWS_AS(parse_pattern("nabla:S", 3, 3), PatternSyntaxError);
    CHECK_THROWS_AS(parse_pattern("grad:S,S", 3, 3), PatternSyntaxError);
    CHECK_THROWS_AS(parse_pattern("nabla:Q,S", 3, 3), PatternSyntaxError);
    CHECK_THROWS(parse_pattern("nabla:S4,S", 3, 3));
    CHECK_THROWS(parse_pattern("nabla:missing/file.mat,S", 3, 3));

    const auto d = dual_pattern(p);
    CHECK(d.z == St(5));
    CHECK(d.n == S(5));
    CHECK(d.kind == Nabla);
    CHECK(dual_pattern(d) == p);
}

TEST_CASE("displacement ranks of the worked examples")
{
    const auto circ = paper_example("circulant-3x4:1,2,3,4");
    CHECK(displacement_rank(circ.matrix, circ.patterns[0]).rank == 1);
    CHECK(displacement_rank(circ.matrix, circ.patterns[1]).rank == 1);
    const auto bth = paper_example("block-th");
    CHECK(displacement_rank(bth.matrix, bth.patterns[0]).rank == 3);
    CHECK(displacement_rank(identity<Rational>(5), patterns::shift_shiftT(Nabla, 5, 5)).rank == 1);
}

TEST_CASE("operators are linear (exact)")
{
    Rng rng(8);
    for (int t = 0; t < 100; ++t) {
        const std::size_t m = 2 + t % 6, n = 2 + (t * 5) % 7;
        const auto a = random_dense(rng, m, n), b = random_dense(rng, m, n);
        const auto z = random_dense(rng, m, m), nn = random_dense(rng, n, n);
        const Rational c = random_integer(rng);
        CHECK(nabla(a + b, z, nn) == nabla(a, z, nn) + nabla(b, z, nn));
        CHECK(delta(a + b, z, nn) == delta(a, z, nn) + delta(b, z, nn));
        CHECK(nabla(scale(c, a), z, nn) == scale(c, nabla(a, z, nn)));
        CHECK(delta(scale(c, a), z, nn) == scale(c, delta(a, z, nn)));
    }
}

TEST_CASE("dual consistency under transposition")
{
    Rng rng(9);
    for (int t = 0; t < 100; ++t) {
        const std::size_t m = 2 + t % 6, n = 2 + (t * 3) % 7;
        const auto a = random_dense(rng, m, n);
        const auto z = random_dense(rng, m, m), nn = random_dense(rng, n, n);
        const auto at = transpose(a);
        CHECK(nabla(at, transpose(nn), transpose(z)) == transpose(nabla(a, z, nn)));
        CHECK(delta(at, transpose(nn), transpose(z)) == -transpose(delta(a, z, nn)));
    }
    // Without transposing the pattern the identity needs symmetric Z and N.
    const RationalMatrix a{{1, 2}, {0, 3}};
    CHECK(nabla(transpose(a), St(2), S(2)) != transpose(nabla(a, S(2), St(2))));
    const RationalMatrix sym{{0, 1}, {1, 0}};
    CHECK(nabla(transpose(a), sym, sym) == transpose(nabla(a, sym, sym)));
}

TEST_CASE("exact and SVD displacement ranks agree on integer matrices")
{
    Rng rng(10);
    for (int t = 0; t < 200; ++t) {
        const std::size_t m = 2 + t % 7, n = 2 + (t * 3) % 7;
        const auto a = t % 2 ? random_toeplitz(rng, m, n) : random_dense(rng, m, n);
        for (const auto& p : {patterns::shift_shiftT(Nabla, m, n), patterns::shift_shift(Delta, m, n)})
            CHECK(displacement_rank(a, p).rank == displacement_rank(to_real(a), p).rank);
    }
}

TEST_CASE("generators")
{
    Rng rng(12);
    const auto p = patterns::shift_shiftT(Nabla, 6, 6);
    const auto a = to_real(random_dense(rng, 6, 6));
    const auto g = generator_factorization(a, p);
    CHECK(max_abs(g.expand() - displace(a, p)) <= 1e-10 * std::max(1.0, max_abs(a)));
    CHECK(g.inner_dimension() == displacement_rank(a, p).rank);

    const auto t = to_real(random_toeplitz(rng, 7, 7));
    CHECK(generator_factorization(t, patterns::shift_shiftT(Nabla, 7, 7)).inner_dimension() <= 2);
    CHECK(generator_factorization(RealMatrix(4, 4), patterns::shift_shift(Nabla, 4, 4)).inner_dimension() == 0);

    const auto t3 = to_real(paper_example("rank3-toeplitz").matrix);
    const auto s5 = to_real(S(5)), st5 = to_real(St(5));
    const auto sg = svd_generator(t3, s5, st5);
    CHECK(sg.inner_dimension() == 6);
    CHECK(max_abs(sg.expand() - nabla(t3, s5, st5)) <= 1e-10 * max_abs(t3));
    CHECK(numerical_rank(sg.expand()).rank == 2);

    for (int k = 0; k < 20; ++k) {
        const auto d = to_real(random_rank_deficient(rng, 6, 6, 1 + k % 4));
        const auto sgk = svd_generator(d, to_real(S(6)), to_real(St(6)));
        CHECK(sgk.inner_dimension() == 2 * (1 + k % 4));
        CHECK(max_abs(sgk.expand() - nabla(d, to_real(S(6)), to_real(St(6)))) <= 1e-10 * max_abs(d));
    }
}

TEST_CASE("reconstruction from the displaced matrix")
{
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        const std::size_t m = 1 + t % 8, n = 1 + (t * 3) % 8;
        const auto a = random_dense(rng, m, n);
        const auto d = nabla(a, S(m), St(n));
        CHECK(reconstruct_nabla(d, S(m), St(n), m - 1) == a);
        // N nilpotent is enough as well.
        CHECK(reconstruct_nabla(nabla(a, cyclic_shift<Rational>(m), S(n)), cyclic_shift<Rational>(m), S(n), n - 1) == a);
    }
    const auto t = random_toeplitz(rng, 6, 6);
    CHECK(reconstruct_nabla(nabla(t, S(6), St(6)), S(6), St(6), 5) == t);

    const auto ta = to_real(t);
    const auto back = reconstruct_nabla(nabla(ta, to_real(S(6)), to_real(St(6))), to_real(S(6)), to_real(St(6)), 5);
    CHECK(max_abs(back - ta) <= 1e-12 * max_abs(ta));

    const auto d0 = random_dense(rng, 3, 3);
    CHECK(reconstruct_nabla(d0, RationalMatrix(3, 3), identity<Rational>(3), 0) == d0);

    try {
        reconstruct_nabla(d0, S(3), St(3), 1);
        FAIL("expected NotInvertibleError");
    } catch (const NotInvertibleError& e) {
        CHECK(std::string(e.what()).find("displacement operator not invertible via this sum") != std::string::npos);
    }
    CHECK_THROWS_AS(reconstruct_nabla(d0, cyclic_shift<Rational>(3), identity<Rational>(3), 5), NotInvertibleError);
    CHECK(nilpotency_index(S(5)) == 5u);
    CHECK_FALSE(nilpotency_index(cyclic_shift<Rational>(4)).has_value());
}

} // TEST_SUITE
