#include "dispkit/psym.hpp"
#include "dispkit/special.hpp"
#include "dispkit/structured.hpp"
#include "dispkit/suite.hpp"
#include "dispkit/verify.hpp"

#include <doctest.h>

using namespace dispkit;

namespace {

using V = std::vector<Rational>;

RationalMatrix S(std::size_t n) { return shift_matrix<Rational>(n); }
RationalMatrix St(std::size_t n) { return transpose(shift_matrix<Rational>(n)); }

void check_values(const BoundCheck& c, long long lhs, long long rhs, bool holds)
{
    INFO(c.name);
    CHECK(c.lhs == lhs);
    CHECK(c.rhs == rhs);
    CHECK(c.holds == holds);
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("regularized inverse of the alternate Toeplitz example")
{
    const auto a = paper_example("alternate-toeplitz").matrix;
    const auto z = alternating_shift<Rational>(5);
    const auto [n, d] = check_regularized(a, z, -transpose(z), Rational(1));
    check_values(n, 5, 2 + 5, true);
    check_values(d, 5, 5 + 4, true);
    CHECK(n.witnesses.at("dN[Z,N]{I}") == 5);
}

TEST_CASE("Schur complement of an 8x8 Toeplitz matrix")
{
    const auto m = toeplitz(V{5, 1, -2, 3, 0, 4, -1, 2}, V{5, -3, 1, 2, -4, 1, 3, -2});
    const auto [n, d] = check_schur(m, S(4), St(4), S(4), St(4));
    check_values(n, 2, 4, true);
    check_values(d, 4, 8, true);
    CHECK_THROWS(check_schur(RationalMatrix{{1, 1}, {1, 1}}, S(1), St(1), S(1), St(1)));
}

TEST_CASE("rectangular product bound and identity")
{
    const auto a = RationalMatrix::generate(5, 7, [](std::size_t i, std::size_t j) {
        return Rational(static_cast<long>((3 * i + 5 * j) % 7) - 3);
    });
    const auto b = RationalMatrix::generate(7, 4, [](std::size_t i, std::size_t j) {
        return Rational(static_cast<long>((2 * i + 3 * j + 1) % 5) - 2);
    });
    const auto r = check_product_rect(a, b, S(5), St(7), S(7), reverse_identity<Rational>(4));
    check_values(r.bound, 4, 5 + 6 + 2, true);
    check_values(r.identity, 0, 0, true);
}

TEST_CASE("full-column-rank pseudo-inverse of a tall Toeplitz matrix")
{
    const auto t = toeplitz(V{3, 1, -2, 4, 0, 1, -1, 2}, V{3, 2, -1, 5, 1});
    const auto [first, second] = check_full_rank_pinv(t, S(8), S(5));
    check_values(first, 4, 2 + 2 * 2, true);
    check_values(second, 5, 3 * 2 + 8, true);
}

TEST_CASE("inverse duality")
{
    const RationalMatrix d{{2, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 5}};
    const auto [dd, dn] = check_inverse_duality(d, S(4), S(4));
    check_values(dd, 3, 3, true);
    check_values(dn, 4, 4, true);

    const auto [li, ld] = check_link_dn(identity<Rational>(5), identity<Rational>(5), identity<Rational>(5));
    check_values(li, 0, 0, true);
    check_values(ld, 0, 0, true);

    Rng rng(41);
    for (int k = 0; k < 30; ++k) {
        const auto t = random_toeplitz(rng, 6, 6);
        if (exact_rank(t).rank < 6)
            continue;
        for (const auto& c : check_inverse_duality(t, S(6), St(6)))
            CHECK(c.holds);
    }
}

TEST_CASE("the Toeplitz delta bound for pseudo-inverses fails at T = S")
{
    const auto [n, d] = check_pinv_ht(S(5), StructureFamily::Toeplitz);
    CHECK(n.holds);
    check_values(d, 2, 2 * 0 + 1, false);
    // The Hankel analogue at J·S holds.
    const auto [hn, hd] = check_pinv_ht(reverse_identity<Rational>(5) * S(5), StructureFamily::Hankel);
    CHECK(hn.holds);
    check_values(hd, 0, 2 * 2 + 1, true);
}

TEST_CASE("the strict rank bound needs more than arbitrary Z and N")
{
    const RationalMatrix a{{1, 2, -1, 3}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    const RationalMatrix n{{0, 1, 2, 0}, {1, -1, 0, 2}, {0, 3, 1, 1}, {2, 0, -1, 1}};
    const auto c = check_rank_pinv(a, St(4), n);
    CHECK(c.relation == Relation::Less);
    check_values(c, 2, 2, false);
    CHECK(c.witnesses.at("rank(A)") == 1);
}

TEST_CASE("P-symmetric pseudo-inverse bound and hypotheses")
{
    const auto t3 = paper_example("rank3-toeplitz").matrix;
    const auto j = reverse_identity<Rational>(5);
    CHECK(check_pinv_psym(t3, j, S(5), St(5)).holds);
    CHECK_THROWS_AS(check_pinv_psym(t3, j, S(5), S(5)), HypothesisError);
    Rng rng(42);
    CHECK_THROWS_AS(check_pinv_psym(random_dense(rng, 5, 5), j, S(5), St(5)), HypothesisError);
}

TEST_CASE("Leibniz identity and the inverse null displacement")
{
    Rng rng(43);
    for (int k = 0; k < 30; ++k) {
        const auto a = random_dense(rng, 5, 5), b = random_dense(rng, 5, 5);
        const auto z = random_dense(rng, 5, 5), n = random_dense(rng, 5, 5);
        CHECK(check_leibniz(a, b, z, n).holds);
        if (exact_rank(a).rank == 5)
            CHECK(check_inverse_null_displacement(a, z, n).holds);
    }
}

TEST_CASE("records serialize with witnesses and a stable digest")
{
    const auto a = paper_example("rank3-toeplitz").matrix;
    const auto c = check_reconstruction(a, S(5), St(5));
    CHECK(c.holds);
    CHECK(c.instance_digest.size() == 16);
    CHECK(c.instance_digest == check_reconstruction(a, S(5), St(5)).instance_digest);
    const auto j = to_json(c);
    CHECK(j.at("name") == "reconstruction/round-trip");
    CHECK(j.at("relation") == "=");
    CHECK(j.at("holds") == true);
}

TEST_CASE("link equality witness")
{
    const auto w = find_link_equality_witness(7, 20000);
    REQUIRE(w.has_value());
    CHECK(w->check.lhs == w->check.rhs);
    CHECK(w->check.holds);
}

TEST_CASE("suite runner")
{
    SuiteOptions o;
    o.trials = 20;
    o.seed = 5;
    for (const auto& name : suite_names()) {
        INFO(name);
        const auto par = run_suite(name, o);
        CHECK(par.passed());
        CHECK(to_json(par) == to_json(run_suite_serial(name, o)));
        CHECK(to_json(par) == to_json(run_suite(name, o)));
    }
    o.trials = 0;
    const auto empty = run_suite("structure-bounds", o);
    CHECK(empty.passed());
    CHECK(empty.checks.empty());
    CHECK_THROWS_AS(run_suite("no-such-suite", o), UnknownSuiteError);
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 0) != trial_seed(2, 0));
}

TEST_CASE("all worked examples pass")
{
    const auto r = run_suite("all-paper-examples", {});
    CHECK(r.passed());
    CHECK(r.checks.size() >= 40);
}

} // TEST_SUITE
