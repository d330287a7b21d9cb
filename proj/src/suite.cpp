#include "dispkit/suite.hpp"

#include "dispkit/inverses.hpp"
#include "dispkit/psym.hpp"
#include "dispkit/special.hpp"
#include "dispkit/structured.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <random>

namespace dispkit {

std::uint64_t trial_seed(std::uint64_t seed, std::size_t index)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

using enum Displacement;

struct TrialResult {
    std::vector<BoundCheck> checks;
    std::map<std::string, double> observed;

    void add(BoundCheck c) { checks.push_back(std::move(c)); }
    template <std::size_t K>
    void add(const std::array<BoundCheck, K>& cs)
    {
        checks.insert(checks.end(), cs.begin(), cs.end());
    }
    void observe(const std::string& key, double value)
    {
        auto [it, inserted] = observed.emplace(key, value);
        if (!inserted)
            it->second = std::max(it->second, value);
    }
};

using TrialFn = std::function<TrialResult(Rng&, const SuiteOptions&)>;

struct SuiteDef {
    const char* name;
    TrialFn run;
    bool fixed = false; // deterministic instance list, run once
};

constexpr int kMaxRetries = 1000;

std::size_t pick_size(Rng& rng, const SuiteOptions& o)
{
    return std::uniform_int_distribution<std::size_t>(o.min_size, o.max_size)(rng);
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

RationalMatrix s_of(std::size_t n) { return shift_matrix<Rational>(n); }
RationalMatrix st_of(std::size_t n) { return transpose(shift_matrix<Rational>(n)); }

bool invertible(const RationalMatrix& a)
{
    return a.square() && exact_rank(a).rank == a.rows();
}

template <typename Gen>
RationalMatrix draw_until(Gen&& gen, const std::function<bool(const RationalMatrix&)>& ok, const char* what)
{
    for (int i = 0; i < kMaxRetries; ++i) {
        auto a = gen();
        if (ok(a))
            return a;
    }
    throw std::runtime_error(std::string("suite: could not draw ") + what);
}

// Small-integer operator matrix for patterns not tied to a structure.
RationalMatrix random_operator(Rng& rng, std::size_t n)
{
    switch (pick(rng, 0, 5)) {
    case 0: return s_of(n);
    case 1: return st_of(n);
    case 2: return reverse_identity<Rational>(n);
    case 3: return cyclic_shift<Rational>(n);
    case 4: return alternating_shift<Rational>(n);
    default: {
        std::vector<Rational> e(n * n);
        for (auto& x : e)
            x = random_integer(rng, -2, 2);
        return RationalMatrix(n, n, std::move(e));
    }
    }
}

RationalMatrix random_rank_deficient_structured(Rng& rng, StructureFamily f, std::size_t n, std::size_t r)
{
    const std::uint64_t s = rng();
    return f == StructureFamily::Toeplitz ? rank_deficient_toeplitz(n, r, s) : rank_deficient_hankel(n, r, s);
}

// ---------------------------------------------------------------------------
// fixed instance list
// ---------------------------------------------------------------------------

TrialResult paper_examples(Rng&, const SuiteOptions&)
{
    TrialResult out;
    const auto rel_eq = Relation::Equal;
    auto rank_check = [](std::string name, const RationalMatrix& a, long long value) {
        const long long r = static_cast<long long>(exact_rank(a).rank);
        return make_check(std::move(name), r, Relation::Equal, value, {{"rank", r}}, instance_digest({&a}));
    };
    auto zero_check = [](std::string name, const RationalMatrix& d, std::initializer_list<const RationalMatrix*> in) {
        const long long r = static_cast<long long>(exact_rank(d).rank);
        return make_check(std::move(name), r, Relation::Equal, 0, {{"rank(residual)", r}}, instance_digest(in));
    };

    // Circulant 3x4 with (a,b,c,d) = (1,2,3,4).
    {
        const auto ex = paper_example("circulant-3x4:1,2,3,4");
        out.add(check_displacement_value("circulant/nabla", ex.matrix, ex.patterns[0], rel_eq, 1));
        out.add(check_displacement_value("circulant/delta", ex.matrix, ex.patterns[1], rel_eq, 1));
        out.add(check_link_dn(ex.matrix, ex.patterns[0].z, ex.patterns[0].n));
    }
    // Alternate-Töplitz 5x5.
    {
        const auto ex = paper_example("alternate-toeplitz");
        const auto& a = ex.matrix;
        const auto z = alternating_shift<Rational>(5);
        const RationalMatrix n = -transpose(z);
        const auto zt = transpose(z);
        const auto j = reverse_identity<Rational>(5);
        out.add(rank_check("alternate-toeplitz/rank", a, 4));
        out.add(check_displacement_value("alternate-toeplitz/nabla", a, ex.patterns[0], rel_eq, 2));
        out.add(check_displacement_value("alternate-toeplitz/delta", a, ex.patterns[1], rel_eq, 2));
        out.add(zero_check("alternate-toeplitz/J-symmetric", j * a * j - transpose(a), {&a, &j}));
        out.add(zero_check("alternate-toeplitz/JZJ=N", j * z * j - n, {&z, &j}));
        const auto ap = pinv_exact(a);
        out.add(check_displacement_value("alternate-toeplitz/pinv-nabla", ap, make_pattern(Nabla, n, z), rel_eq, 4));
        out.add(check_displacement_value("alternate-toeplitz/pinv-delta", ap, make_pattern(Delta, n, zt), rel_eq, 4));
        const auto apf = pinv(to_real(a));
        const long long pn = static_cast<long long>(numerical_rank(nabla(apf, to_real(n), to_real(z))).rank);
        const long long pd = static_cast<long long>(numerical_rank(delta(apf, to_real(n), to_real(zt))).rank);
        out.add(make_check("alternate-toeplitz/pinv-nabla-float", pn, rel_eq, 4, {{"numerical_rank", pn}},
                           instance_digest({&a})));
        out.add(make_check("alternate-toeplitz/pinv-delta-float", pd, rel_eq, 4, {{"numerical_rank", pd}},
                           instance_digest({&a})));
        out.add(check_pinv_psym(a, j, z, n));
        const auto cert = pinv_certificate(to_real(a), to_real(j), to_real(z), to_real(n));
        out.add(make_check("alternate-toeplitz/certificate", cert.valid ? 0 : 1, rel_eq, 0,
                           {{"width", static_cast<long long>(cert.e1.cols())},
                            {"rank_e1", static_cast<long long>(cert.rank_e1)},
                            {"rank_e2", static_cast<long long>(cert.rank_e2)}},
                           instance_digest({&a, &j, &z, &n})));
        out.observe("certificate/residual-over-scale", cert.residual / cert.scale);
        out.add(check_regularized(a, z, n, Rational(1)));
    }
    // Rank-3 Töplitz 5x5.
    {
        const auto ex = paper_example("rank3-toeplitz");
        const auto& t = ex.matrix;
        const auto s = s_of(5), st = st_of(5), j = reverse_identity<Rational>(5);
        out.add(rank_check("rank3-toeplitz/rank", t, 3));
        out.add(check_displacement_value("rank3-toeplitz/nabla", t, ex.patterns[0], rel_eq, 2));
        out.add(check_displacement_value("rank3-toeplitz/pinv-nabla", pinv_exact(t), make_pattern(Nabla, st, s),
                                         rel_eq, 4));
        out.add(check_pinv_psym(t, j, s, st));
        out.add(check_rank_pinv(t, s, st));
        out.add(check_pinv_ht(t, StructureFamily::Toeplitz));
        const auto cert = pinv_certificate(to_real(t), to_real(j), to_real(s), to_real(st));
        out.add(make_check("rank3-toeplitz/certificate", cert.valid ? 0 : 1, rel_eq, 0,
                           {{"width", static_cast<long long>(cert.e1.cols())},
                            {"rank_e1", static_cast<long long>(cert.rank_e1)},
                            {"rank_e2", static_cast<long long>(cert.rank_e2)}},
                           instance_digest({&t, &j, &s, &st})));
        out.observe("certificate/residual-over-scale", cert.residual / cert.scale);
    }
    // Block (T H).
    {
        const auto ex = paper_example("block-th");
        out.add(check_displacement_value("block-th/nabla", ex.matrix, ex.patterns[0], Relation::LessEqual, 3));
    }
    // Identity facts.
    {
        const auto i = identity<Rational>(5);
        const auto s = s_of(5), st = st_of(5);
        out.add(check_displacement_value("identity/nabla-S-St", i, make_pattern(Nabla, s, st), rel_eq, 1));
        out.add(check_displacement_value("identity/nabla-St-S", i, make_pattern(Nabla, st, s), rel_eq, 1));
        out.add(check_displacement_value("identity/delta-S-S", i, make_pattern(Delta, s, s), rel_eq, 0));
        out.add(check_inverse_duality(i, s, st));
        out.add(check_link_dn(i, s, s));
    }
    // Fixed pseudo-random instances for the theorem statements.
    Rng rng(20240601);
    {
        const std::size_t n = 6;
        const auto s = s_of(n), st = st_of(n);
        const auto t = draw_until([&] { return random_toeplitz(rng, n, n); }, invertible, "invertible Toeplitz");
        out.add(check_inverse_duality(t, s, st));
        out.add(check_inverse_null_displacement(t, s, st));
        out.add(check_regularized_toeplitz(t, Rational(3)));
        const auto t2 = random_toeplitz(rng, n, n);
        const auto h1 = random_hankel(rng, n, n), h2 = random_hankel(rng, n, n);
        out.add(check_product_family(ProductFamily::ToeplitzToeplitz, t, t2));
        out.add(check_product_family(ProductFamily::HankelHankel, h1, h2));
        out.add(check_product_family(ProductFamily::ToeplitzHankel, t, h2));
        out.add(check_leibniz(t, t2, s, st));
    }
    {
        const auto tall = draw_until([&] { return random_toeplitz(rng, 8, 5); },
                                     [](const RationalMatrix& a) { return exact_rank(a).rank == 5; },
                                     "full-rank tall Toeplitz");
        const auto fr = check_full_rank_pinv(tall, s_of(8), s_of(5));
        out.add(fr);
        out.add(make_check("full-rank-pinv/example-rhs", fr[0].rhs, Relation::LessEqual, 6, fr[0].witnesses,
                           fr[0].instance_digest));
        out.observe("full-rank-pinv/example-lhs", static_cast<double>(fr[0].lhs));
    }
    {
        const auto h = rank_deficient_hankel(6, 3, 99);
        const auto ht = check_pinv_ht(h, StructureFamily::Hankel);
        out.add(ht);
        out.add(make_check("pinv-ht/hankel-bounded-by-5", ht[1].lhs, Relation::LessEqual, 5, ht[1].witnesses,
                           ht[1].instance_digest));
    }
    if (const auto w = find_link_equality_witness(7, 20000))
        out.add(w->check);
    else
        out.add(make_check("link-dn/equality-witness", 1, rel_eq, 0, {}, "none"));
    return out;
}

// ---------------------------------------------------------------------------
// randomized trials
// ---------------------------------------------------------------------------

TrialResult structure_bounds(Rng& rng, const SuiteOptions& o)
{
    TrialResult out;
    const std::size_t m = pick_size(rng, o), n = pick_size(rng, o);
    const auto t = random_toeplitz(rng, m, n);
    const auto h = random_hankel(rng, m, n);
    const auto le = Relation::LessEqual;
    out.add(check_displacement_value("structure/toeplitz/nabla-S-St", t, patterns::shift_shiftT(Nabla, m, n), le, 2));
    out.add(check_displacement_value("structure/toeplitz/nabla-St-S", t, patterns::shiftT_shift(Nabla, m, n), le, 2));
    out.add(check_displacement_value("structure/toeplitz/delta-S-S", t, patterns::shift_shift(Delta, m, n), le, 2));
    out.add(check_displacement_value("structure/hankel/nabla-S-S", h, patterns::shift_shift(Nabla, m, n), le, 2));
    out.add(check_displacement_value("structure/hankel/delta-S-St", h, patterns::shift_shiftT(Delta, m, n), le, 2));
    out.add(check_displacement_value("structure/hankel/delta-St-S", h, patterns::shiftT_shift(Delta, m, n), le, 2));
    return out;
}

TrialResult block_th_trial(Rng& rng, const SuiteOptions& o)
{
    const std::size_t m = pick_size(rng, o), n = pick_size(rng, o), p = pick_size(rng, o);
    const auto a = block_th(random_toeplitz(rng, m, n), random_hankel(rng, m, p));
    TrialResult out;
    out.add(check_displacement_value("block-th/nabla", a, block_th_pattern(m, n, p), Relation::LessEqual, 3));
    return out;
}

TrialResult inverse_duality(Rng& rng, const SuiteOptions& o)
{
    const std::size_t n = pick_size(rng, o);
    TrialResult out;
    switch (pick(rng, 0, 2)) {
    case 0: {
        const auto t = draw_until([&] { return random_toeplitz(rng, n, n); }, invertible, "invertible Toeplitz");
        out.add(check_inverse_duality(t, s_of(n), st_of(n)));
        break;
    }
    case 1: {
        const auto h = draw_until([&] { return random_hankel(rng, n, n); }, invertible, "invertible Hankel");
        out.add(check_inverse_duality(h, s_of(n), s_of(n)));
        break;
    }
    default: {
        const auto a = draw_until([&] { return random_dense(rng, n, n); }, invertible, "invertible dense");
        out.add(check_inverse_duality(a, random_operator(rng, n), random_operator(rng, n)));
        break;
    }
    }
    return out;
}

TrialResult regularized(Rng& rng, const SuiteOptions& o)
{
    const std::size_t n = pick_size(rng, o);
    TrialResult out;
    const auto t = random_toeplitz(rng, n, n);
    Rational eta;
    do
        eta = random_integer(rng, -5, 5);
    while (sgn(eta) == 0 || !invertible(t + scale(eta, identity<Rational>(n))));
    out.add(check_regularized(t, s_of(n), st_of(n), eta));
    out.add(check_regularized_toeplitz(t, eta));

    const auto a = random_dense(rng, n, n);
    do
        eta = random_integer(rng, -5, 5);
    while (sgn(eta) == 0 || !invertible(a + scale(eta, identity<Rational>(n))));
    out.add(check_regularized(a, random_operator(rng, n), random_operator(rng, n), eta));
    return out;
}

TrialResult schur(Rng& rng, const SuiteOptions& o)
{
    const std::size_t n = std::max<std::size_t>(2, pick_size(rng, o));
    const std::size_t k = n / 2;
    const auto m = draw_until(
        [&] { return random_toeplitz(rng, n, n); },
        [k](const RationalMatrix& x) { return invertible(x) && invertible(submatrix(x, 0, 0, k, k)); },
        "Toeplitz with invertible leading block");
    TrialResult out;
    out.add(check_schur(m, s_of(k), st_of(k), s_of(n - k), st_of(n - k)));
    out.add(check_schur(m, s_of(k), s_of(k), s_of(n - k), s_of(n - k)));
    return out;
}

TrialResult products(Rng& rng, const SuiteOptions& o)
{
    const std::size_t n = pick_size(rng, o);
    const auto t1 = random_toeplitz(rng, n, n), t2 = random_toeplitz(rng, n, n);
    const auto h1 = random_hankel(rng, n, n), h2 = random_hankel(rng, n, n);
    const auto s = s_of(n), st = st_of(n);
    TrialResult out;
    out.add(check_product_family(ProductFamily::ToeplitzToeplitz, t1, t2));
    out.add(check_product_family(ProductFamily::HankelHankel, h1, h2));
    out.add(check_product_family(ProductFamily::ToeplitzHankel, t1, h2));
    out.add(check_product(Delta, t1, t2, s, s, s, s));
    out.add(check_product(Nabla, t1, t2, s, st, st, s));
    out.add(check_leibniz(t1, t2, s, st));
    out.add(check_leibniz(h1, h2, s, s));
    if (invertible(t1))
        out.add(check_inverse_null_displacement(t1, s, st));
    return out;
}

TrialResult product_rect(Rng& rng, const SuiteOptions& o)
{
    const std::size_t m = pick_size(rng, o), n = pick_size(rng, o), p = pick_size(rng, o);
    const auto a = random_dense(rng, m, n);
    const auto b = random_dense(rng, n, p);
    const auto r = check_product_rect(a, b, random_operator(rng, m), random_operator(rng, n),
                                      random_operator(rng, n), random_operator(rng, p));
    TrialResult out;
    out.add(r.bound);
    out.add(r.identity);
    return out;
}

TrialResult reconstruction(Rng& rng, const SuiteOptions& o)
{
    const std::size_t m = pick_size(rng, o), n = pick_size(rng, o);
    TrialResult out;
    out.add(check_reconstruction(random_dense(rng, m, n), s_of(m), st_of(n)));
    return out;
}

TrialResult link_dn(Rng& rng, const SuiteOptions& o)
{
    const std::size_t m = pick_size(rng, o), n = pick_size(rng, o);
    const auto a = pick(rng, 0, 1) ? random_toeplitz(rng, m, n) : random_dense(rng, m, n);
    TrialResult out;
    out.add(check_link_dn(a, random_operator(rng, m), random_operator(rng, n)));
    return out;
}

TrialResult full_rank_pinv(Rng& rng, const SuiteOptions& o)
{
    const std::size_t n = pick(rng, o.min_size, std::max(o.min_size, o.max_size - 1));
    const std::size_t m = pick(rng, n + 1, std::max(n + 1, o.max_size));
    const auto a = draw_until([&] { return random_toeplitz(rng, m, n); },
                              [n](const RationalMatrix& x) { return exact_rank(x).rank == n; },
                              "full-rank tall Toeplitz");
    TrialResult out;
    out.add(check_full_rank_pinv(a, s_of(m), s_of(n)));
    out.add(check_pinv_rect(a, s_of(m), s_of(n)));
    return out;
}

// Rank-deficient P-symmetric instance: Töplitz (P = J, {S, Sᵀ}), Hankel
// (P = I, {S, S}) or Töplitz under the alternating pattern.
struct PSymInstance {
    RationalMatrix a, p, z, n;
    StructureFamily family;
};

PSymInstance draw_psym(Rng& rng, const SuiteOptions& o)
{
    const std::size_t n = std::max<std::size_t>(2, pick_size(rng, o));
    const std::size_t r = pick(rng, 1, n - 1);
    switch (pick(rng, 0, 2)) {
    case 0:
        return {random_rank_deficient_structured(rng, StructureFamily::Toeplitz, n, r),
                reverse_identity<Rational>(n), s_of(n), st_of(n), StructureFamily::Toeplitz};
    case 1:
        return {random_rank_deficient_structured(rng, StructureFamily::Hankel, n, r), identity<Rational>(n),
                s_of(n), s_of(n), StructureFamily::Hankel};
    default: {
        // J·Zalt·J equals −Zaltᵀ for odd n and +Zaltᵀ for even n.
        const auto z = alternating_shift<Rational>(n);
        const auto j = reverse_identity<Rational>(n);
        return {random_rank_deficient_structured(rng, StructureFamily::Toeplitz, n, r), j, z, j * z * j,
                StructureFamily::Toeplitz};
    }
    }
}

TrialResult pinv_psym(Rng& rng, const SuiteOptions& o)
{
    const auto x = draw_psym(rng, o);
    TrialResult out;
    out.add(check_pinv_psym(x.a, x.p, x.z, x.n));
    return out;
}

TrialResult rank_pinv(Rng& rng, const SuiteOptions& o)
{
    const auto x = draw_psym(rng, o);
    TrialResult out;
    out.add(check_rank_pinv(x.a, x.z, x.n));
    return out;
}

TrialResult pinv_ht(Rng& rng, const SuiteOptions& o)
{
    const std::size_t n = std::max<std::size_t>(2, pick_size(rng, o));
    TrialResult out;
    for (const auto f : {StructureFamily::Toeplitz, StructureFamily::Hankel})
        out.add(check_pinv_ht(random_rank_deficient_structured(rng, f, n, pick(rng, 1, n - 1)), f));
    return out;
}

TrialResult pinv_rect(Rng& rng, const SuiteOptions& o)
{
    const std::size_t m = std::max<std::size_t>(3, pick_size(rng, o));
    const std::size_t n = pick(rng, 2, m - 1);
    const std::size_t r = pick(rng, 1, n);
    // Leading columns of a rank-r square Töplitz matrix are a tall Töplitz matrix of rank ≤ r.
    const auto sq = random_rank_deficient_structured(rng, StructureFamily::Toeplitz, m, r);
    TrialResult out;
    out.add(check_pinv_rect(columns(sq, 0, n), s_of(m), s_of(n)));
    out.add(check_pinv_rect(random_toeplitz(rng, m, n), s_of(m), s_of(n)));
    return out;
}

TrialResult penrose(Rng& rng, const SuiteOptions& o)
{
    const std::size_t m = pick_size(rng, o), n = pick_size(rng, o);
    const std::size_t r = pick(rng, 1, std::min(m, n) - 1);
    const auto aq = random_rank_deficient(rng, m, n, r);
    const auto a = to_real(aq);
    const auto b = pinv(a);
    const auto res = penrose_residuals(a, b);
    const auto exact = to_real(pinv_exact(aq));
    const double gap = frobenius_norm(b - exact) / std::max(1.0, frobenius_norm(exact));
    const long long violated = (res.r1 > 1e-9 * res.scale) + (res.r2 > 1e-9 * res.scale) +
                               (res.r3 > 1e-9 * res.scale) + (res.r4 > 1e-9 * res.scale);
    TrialResult out;
    out.add(make_check("penrose/conditions", violated, Relation::Equal, 0, {{"violated", violated}},
                       instance_digest({&aq})));
    out.add(make_check("penrose/uniqueness", gap <= 1e-8 ? 0 : 1, Relation::Equal, 0, {},
                       instance_digest({&aq})));
    out.observe("penrose/max-residual-over-scale", res.max() / res.scale);
    out.observe("penrose/max-uniqueness-gap", gap);
    return out;
}

TrialResult rank_oracle(Rng& rng, const SuiteOptions& o)
{
    const std::size_t m = pick_size(rng, o), n = pick_size(rng, o);
    const std::size_t full = std::min(m, n);
    const std::size_t r = pick(rng, 0, full);
    const auto a = r == full ? random_dense(rng, m, n) : random_rank_deficient(rng, m, n, r);
    const long long ex = static_cast<long long>(exact_rank(a).rank);
    const long long nu = static_cast<long long>(numerical_rank(to_real(a)).rank);
    TrialResult out;
    out.add(make_check("rank-oracle", nu, Relation::Equal, ex, {{"exact", ex}, {"numerical", nu}},
                       instance_digest({&a})));
    return out;
}

TrialResult block_mp(Rng& rng, const SuiteOptions& o)
{
    const std::size_t n = pick_size(rng, o);
    const auto p = draw_until([&] { return random_dense(rng, n, n); }, invertible, "invertible P");
    TrialResult out;
    if (pick(rng, 0, 1) == 0) {
        const auto a1 = draw_until([&] { return random_dense(rng, n, n); }, invertible, "invertible A1");
        const auto a2 = draw_until([&] { return random_dense(rng, n, n); }, invertible, "invertible A2");
        const auto mq = block2x2(p, a2, a1, RationalMatrix(n, n));
        const auto exact_inv = to_real(inverse(mq));
        const auto r = block_mp_inverse(to_real(p), to_real(a1), to_real(a2));
        const double gap = frobenius_norm(r.m_pinv - exact_inv) / std::max(1.0, frobenius_norm(exact_inv));
        out.add(make_check("block-mp/invertible", gap <= 1e-9 ? 0 : 1, Relation::Equal, 0, {},
                           instance_digest({&p, &a1, &a2})));
        out.observe("block-mp/invertible-gap", gap);
        return out;
    }
    const std::size_t pr = pick_size(rng, o), q = pick_size(rng, o);
    const std::size_t rank = pick(rng, 1, std::min({pr, q, n}) - 1);
    const auto a1 = random_rank_deficient(rng, pr, n, rank);
    const auto a2 = random_rank_deficient(rng, n, q, rank);
    const auto r = block_mp_inverse(to_real(p), to_real(a1), to_real(a2));
    const auto oracle = pinv(r.m);
    const double gap = frobenius_norm(r.m_pinv - oracle) / std::max(1.0, frobenius_norm(oracle));
    const long long violated = (r.residuals.r1 > 1e-8 * r.residuals.scale) + (r.residuals.r2 > 1e-8 * r.residuals.scale);
    out.add(make_check("block-mp/generalized-inverse", violated, Relation::Equal, 0, {{"violated", violated}},
                       instance_digest({&p, &a1, &a2})));
    out.observe("block-mp/deficient-gap-vs-svd-pinv", gap);
    out.observe("block-mp/deficient-r1-r2-over-scale", std::max(r.residuals.r1, r.residuals.r2) / r.residuals.scale);
    out.observe("block-mp/deficient-r3-r4-over-scale", std::max(r.residuals.r3, r.residuals.r4) / r.residuals.scale);
    return out;
}

const std::vector<SuiteDef>& registry()
{
    static const std::vector<SuiteDef> defs{
        {"all-paper-examples", paper_examples, true},
        {"structure-bounds", structure_bounds},
        {"block-th", block_th_trial},
        {"link-dn", link_dn},
        {"inverse-duality", inverse_duality},
        {"regularized", regularized},
        {"schur", schur},
        {"products", products},
        {"product-rect", product_rect},
        {"reconstruction", reconstruction},
        {"full-rank-pinv", full_rank_pinv},
        {"pinv-psym", pinv_psym},
        {"rank-pinv", rank_pinv},
        {"pinv-ht", pinv_ht},
        {"pinv-rect", pinv_rect},
        {"penrose", penrose},
        {"rank-oracle", rank_oracle},
        {"block-mp", block_mp},
    };
    return defs;
}

const SuiteDef& find_suite(std::string_view name)
{
    for (const auto& d : registry())
        if (name == d.name)
            return d;
    std::string known;
    for (const auto& d : registry())
        known += (known.empty() ? "" : ", ") + std::string(d.name);
    throw UnknownSuiteError("unknown suite '" + std::string(name) + "' (known: " + known + ")");
}

void validate(const SuiteOptions& o)
{
    if (o.min_size < 2 || o.min_size > o.max_size)
        throw std::invalid_argument("suite sizes must satisfy 2 <= min <= max");
}

SuiteReport aggregate(const SuiteDef& def, const SuiteOptions& o, std::size_t trials,
                      std::vector<TrialResult>& results)
{
    SuiteReport rep;
    rep.suite = def.name;
    rep.trials = trials;
    rep.seed = o.seed;
    rep.min_size = o.min_size;
    rep.max_size = o.max_size;
    for (auto& t : results) {
        for (auto& c : t.checks) {
            if (!c.holds)
                rep.failures.push_back(c.name + ":" + c.instance_digest);
            auto [it, inserted] = rep.observed_max.emplace(c.name, c.lhs);
            if (!inserted)
                it->second = std::max(it->second, c.lhs);
            rep.checks.push_back(std::move(c));
        }
        for (const auto& [k, v] : t.observed) {
            auto [it, inserted] = rep.observed.emplace(k, v);
            if (!inserted)
                it->second = std::max(it->second, v);
        }
    }
    return rep;
}

SuiteReport run(std::string_view name, const SuiteOptions& o, bool parallel)
{
    const auto& def = find_suite(name);
    validate(o);
    const std::size_t trials = def.fixed ? std::min<std::size_t>(o.trials, 1) : o.trials;
    std::vector<TrialResult> results(trials);
    std::vector<std::exception_ptr> errors(trials);
    auto one = [&](std::size_t i) {
        try {
            Rng rng(trial_seed(o.seed, i));
            results[i] = def.run(rng, o);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (parallel) {
        const auto count = static_cast<long long>(trials);
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < count; ++i)
            one(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < trials; ++i)
            one(i);
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return aggregate(def, o, trials, results);
}

} // namespace

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const auto& d : registry())
        out.emplace_back(d.name);
    return out;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options)
{
    return run(name, options, true);
}

SuiteReport run_suite_serial(std::string_view name, const SuiteOptions& options)
{
    return run(name, options, false);
}

nlohmann::json to_json(const SuiteReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back(to_json(c));
    return {{"suite", r.suite},
            {"trials", r.trials},
            {"seed", r.seed},
            {"sizes", {r.min_size, r.max_size}},
            {"passed", r.passed()},
            {"checks", std::move(checks)},
            {"failures", r.failures},
            {"observed_max", r.observed_max},
            {"observed", r.observed}};
}

} // namespace dispkit
