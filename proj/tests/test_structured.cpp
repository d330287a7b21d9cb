#include "dispkit/special.hpp"
#include "dispkit/structured.hpp"

#include <doctest.h>

using namespace dispkit;
using enum Displacement;

TEST_SUITE("structured") {

TEST_CASE("builders")
{
    using V = std::vector<Rational>;
    const auto t = toeplitz(V{1, 2, 3}, V{1, 4, 5, 6});
    CHECK(t == RationalMatrix{{1, 4, 5, 6}, {2, 1, 4, 5}, {3, 2, 1, 4}});
    CHECK(is_toeplitz(t));
    CHECK_THROWS(toeplitz(V{1, 2}, V{9, 3}));

    const auto h = hankel(V{1, 2, 3}, V{3, 4});
    CHECK(h == RationalMatrix{{1, 2}, {2, 3}, {3, 4}});
    CHECK(is_hankel(h));
    CHECK(hankel_from_sequence(V{1, 2, 3, 4}, 3, 2) == h);
    CHECK_THROWS(hankel_from_sequence(V{1, 2}, 3, 2));

    const auto c = circulant(V{1, 2, 3, 4}, 3);
    CHECK(c == RationalMatrix{{1, 2, 3, 4}, {4, 1, 2, 3}, {3, 4, 1, 2}});
    CHECK(is_toeplitz(c));

    const auto j = reverse_identity<Rational>(3);
    CHECK(is_hankel(j * toeplitz(V{1, 2, 3}, V{1, 5, 6})));

    CHECK_THROWS_AS(block_th(t, RationalMatrix(2, 2)), DimensionError);
    CHECK_THROWS(block_th(h, h));
}

TEST_CASE("worked examples")
{
    const auto alt = paper_example("alternate-toeplitz").matrix;
    CHECK(alt == RationalMatrix{{2, -2, -2, 1, 1},
                                {1, -2, -2, 2, 1},
                                {1, 1, 2, -2, -2},
                                {4, -1, 1, -2, -2},
                                {-8, 4, 1, 1, 2}});
    CHECK(exact_rank(alt).rank == 4);
    const auto j = reverse_identity<Rational>(5);
    CHECK(j * alt * j == transpose(alt));

    const auto t3 = paper_example("rank3-toeplitz").matrix;
    CHECK(is_toeplitz(t3));
    CHECK(exact_rank(t3).rank == 3);

    const auto bth = paper_example("block-th");
    CHECK(bth.matrix.rows() == 4);
    CHECK(bth.matrix.cols() == 7);
    CHECK(is_toeplitz(submatrix(bth.matrix, 0, 0, 4, 4)));
    CHECK(is_hankel(submatrix(bth.matrix, 0, 4, 4, 3)));

    CHECK(paper_example_names().size() == 4);
    CHECK_THROWS(paper_example("nope"));
}

TEST_CASE("structure bounds hold on random instances")
{
    Rng rng(77);
    for (int t = 0; t < 300; ++t) {
        const std::size_t m = 1 + rng() % 8, n = 1 + rng() % 8;
        const auto a = random_toeplitz(rng, m, n);
        const auto h = random_hankel(rng, m, n);
        CHECK(displacement_rank(a, patterns::shift_shiftT(Nabla, m, n)).rank <= 2);
        CHECK(displacement_rank(a, patterns::shiftT_shift(Nabla, m, n)).rank <= 2);
        CHECK(displacement_rank(a, patterns::shift_shift(Delta, m, n)).rank <= 2);
        CHECK(displacement_rank(h, patterns::shift_shift(Nabla, m, n)).rank <= 2);
        CHECK(displacement_rank(h, patterns::shift_shiftT(Delta, m, n)).rank <= 2);
        CHECK(displacement_rank(h, patterns::shiftT_shift(Delta, m, n)).rank <= 2);
        const std::size_t p = 1 + rng() % 6;
        const auto th = block_th(a, random_hankel(rng, m, p));
        CHECK(displacement_rank(th, block_th_pattern(m, n, p)).rank <= 3);
    }
}

TEST_CASE("rank-deficient generators hit the requested rank")
{
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::size_t r = 1; r < n; ++r) {
            const auto h = rank_deficient_hankel(n, r, 1000 * n + r);
            CHECK(is_hankel(h));
            CHECK(exact_rank(h).rank == r);
            const auto t = rank_deficient_toeplitz(n, r, 1000 * n + r);
            CHECK(is_toeplitz(t));
            CHECK(exact_rank(t).rank == r);
        }
    CHECK_THROWS(rank_deficient_hankel(4, 0, 1));
    CHECK_THROWS(rank_deficient_hankel(4, 5, 1));
}

TEST_CASE("generator specs are deterministic given the seed")
{
    CHECK(generate_from_spec("toeplitz:5", 3) == generate_from_spec("toeplitz:5", 3));
    CHECK(generate_from_spec("toeplitz:5", 3) != generate_from_spec("toeplitz:5", 4));
    const auto r = generate_from_spec("hankel-rank:6,2", 9);
    CHECK(is_hankel(r));
    CHECK(exact_rank(r).rank == 2);
    CHECK(generate_from_spec("dense:3,5", 1).cols() == 5);
    CHECK(generate_from_spec("paper:rank3-toeplitz", 0) == paper_example("rank3-toeplitz").matrix);
    CHECK_THROWS(generate_from_spec("wavelet:4", 1));
    CHECK_THROWS(generate_from_spec("toeplitz", 1));
}

} // TEST_SUITE
