#include "dispkit/structured.hpp"

#include "dispkit/special.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace dispkit {

Pattern block_th_pattern(std::size_t m, std::size_t n, std::size_t p)
{
    return make_pattern(Displacement::Nabla, shift_matrix(m),
                        direct_sum(transpose(shift_matrix(n)), shift_matrix(p)), "S",
                        "St" + std::to_string(n) + "+S" + std::to_string(p));
}

Rational random_integer(Rng& rng, int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    return Rational(dist(rng));
}

std::vector<Rational> random_integers(Rng& rng, std::size_t count, int lo, int hi)
{
    std::vector<Rational> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        v.push_back(random_integer(rng, lo, hi));
    return v;
}

RationalMatrix random_toeplitz(Rng& rng, std::size_t m, std::size_t n)
{
    auto col = random_integers(rng, m);
    auto row = random_integers(rng, n);
    row[0] = col[0];
    return toeplitz(col, row);
}

RationalMatrix random_hankel(Rng& rng, std::size_t m, std::size_t n)
{
    return hankel_from_sequence(random_integers(rng, m + n - 1), m, n);
}

RationalMatrix random_dense(Rng& rng, std::size_t m, std::size_t n)
{
    return RationalMatrix(m, n, random_integers(rng, m * n));
}

RealMatrix random_uniform(Rng& rng, std::size_t m, std::size_t n)
{
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(m * n);
    for (auto& x : v)
        x = dist(rng);
    return RealMatrix(m, n, std::move(v));
}

RationalMatrix random_rank_deficient(Rng& rng, std::size_t m, std::size_t n, std::size_t r)
{
    if (r > std::min(m, n))
        throw std::invalid_argument("random_rank_deficient: rank exceeds min(rows, cols)");
    for (int attempt = 0; attempt < 100; ++attempt) {
        const auto x = random_dense(rng, m, r);
        const auto y = random_dense(rng, r, n);
        auto a = x * y;
        if (exact_rank(a).rank == r)
            return a;
    }
    throw std::runtime_error("random_rank_deficient: could not reach the target rank");
}

RationalMatrix rank_deficient_hankel(std::size_t n, std::size_t r, std::uint64_t seed)
{
    static const std::array<Rational, 10> pool{Rational(1),    Rational(-1),   Rational(2),
                                               Rational(-2),   Rational(1, 2), Rational(-1, 2),
                                               Rational(3),    Rational(-3),   Rational(1, 3),
                                               Rational(-1, 3)};
    if (r < 1 || r > n)
        throw std::invalid_argument("rank_deficient_hankel: need 1 <= r <= n");
    if (r > pool.size())
        throw std::invalid_argument("rank_deficient_hankel: at most " + std::to_string(pool.size()) +
                                    " distinct nodes available");
    Rng rng(seed);
    std::uniform_int_distribution<int> weight(1, 9);
    std::bernoulli_distribution negative(0.5);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::array<std::size_t, 10> idx{};
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);

        std::vector<Rational> h(2 * n - 1, Rational(0));
        for (std::size_t i = 0; i < r; ++i) {
            const Rational& x = pool[idx[i]];
            Rational c(weight(rng));
            if (negative(rng))
                c = -c;
            Rational xk = 1;
            for (auto& hk : h) {
                hk += c * xk;
                xk *= x;
            }
        }
        auto a = hankel_from_sequence(h, n, n);
        if (exact_rank(a).rank == r)
            return a;
    }
    throw std::runtime_error("rank_deficient_hankel: target rank not reached after 100 draws");
}

RationalMatrix rank_deficient_toeplitz(std::size_t n, std::size_t r, std::uint64_t seed)
{
    return reverse_identity(n) * rank_deficient_hankel(n, r, seed);
}

// ---------------------------------------------------------------------------
// worked examples
// ---------------------------------------------------------------------------

namespace {

RationalMatrix from_ints(std::size_t rows, std::size_t cols, std::initializer_list<int> values)
{
    std::vector<Rational> v;
    for (int x : values)
        v.emplace_back(x);
    return RationalMatrix(rows, cols, std::move(v));
}

std::vector<Rational> parse_list(std::string_view text)
{
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::size_t> parse_sizes(std::string_view text, std::string_view spec)
{
    std::vector<std::size_t> out;
    for (const auto& q : parse_list(text)) {
        if (q.get_den() != 1 || sgn(q) <= 0)
            throw std::invalid_argument("generator spec '" + std::string(spec) +
                                        "': sizes must be positive integers");
        out.push_back(q.get_num().get_ui());
    }
    return out;
}

} // namespace

std::vector<std::string> paper_example_names()
{
    return {"alternate-toeplitz", "rank3-toeplitz", "circulant-3x4", "block-th"};
}

PaperExample paper_example(std::string_view name)
{
    std::string_view base = name;
    std::string_view params;
    if (const auto colon = name.find(':'); colon != std::string_view::npos) {
        base = name.substr(0, colon);
        params = name.substr(colon + 1);
    }

    if (base == "alternate-toeplitz") {
        auto a = from_ints(5, 5, {2,  -2, -2, 1,  1,  //
                                  1,  -2, -2, 2,  1,  //
                                  1,  1,  2,  -2, -2, //
                                  4,  -1, 1,  -2, -2, //
                                  -8, 4,  1,  1,  2});
        return {"alternate-toeplitz", std::move(a),
                {patterns::alternating(Displacement::Nabla, 5),
                 patterns::alternatingT(Displacement::Delta, 5)}};
    }
    if (base == "rank3-toeplitz") {
        auto a = from_ints(5, 5, {2, 4, 3, 1, 2, //
                                  1, 2, 4, 3, 1, //
                                  3, 1, 2, 4, 3, //
                                  4, 3, 1, 2, 4, //
                                  2, 4, 3, 1, 2});
        return {"rank3-toeplitz", std::move(a), {patterns::shift_shiftT(Displacement::Nabla, 5, 5)}};
    }
    if (base == "circulant-3x4") {
        std::vector<Rational> abcd{1, 2, 3, 4};
        if (!params.empty()) {
            abcd = parse_list(params);
            if (abcd.size() != 4)
                throw std::invalid_argument("circulant-3x4 takes four parameters a,b,c,d");
        }
        Pattern delta_pattern = make_pattern(Displacement::Delta, transpose(shift_matrix(3)),
                                             cyclic_shift(4), "St", "Cn");
        return {"circulant-3x4", circulant(abcd, 3),
                {patterns::shift_cyclic(Displacement::Nabla, 3, 4), std::move(delta_pattern)}};
    }
    if (base == "block-th") {
        // A fixed generic instance: T is 4×4 Töplitz, H is 4×3 Hankel.
        const std::vector<Rational> tc{3, -1, 4, 1}, tr{3, 5, -9, 2};
        const std::vector<Rational> hs{6, -5, 3, 5, -8, 9};
        auto a = block_th(toeplitz(tc, tr), hankel_from_sequence(hs, 4, 3));
        return {"block-th", std::move(a), {block_th_pattern(4, 4, 3)}};
    }
    throw std::invalid_argument("unknown example '" + std::string(name) +
                                "' (known: alternate-toeplitz, rank3-toeplitz, circulant-3x4, block-th)");
}

RationalMatrix generate_from_spec(std::string_view spec, std::uint64_t seed)
{
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("generator spec '" + std::string(spec) + "' lacks ':'");
    const auto family = spec.substr(0, colon);
    const auto args = spec.substr(colon + 1);
    if (family == "paper")
        return paper_example(args).matrix;

    const auto sizes = parse_sizes(args, spec);
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (sizes.size() < lo || sizes.size() > hi)
            throw std::invalid_argument("generator spec '" + std::string(spec) +
                                        "': wrong number of parameters");
    };
    Rng rng(seed);
    if (family == "toeplitz") {
        need(1, 2);
        return random_toeplitz(rng, sizes[0], sizes.back());
    }
    if (family == "hankel") {
        need(1, 2);
        return random_hankel(rng, sizes[0], sizes.back());
    }
    if (family == "dense") {
        need(1, 2);
        return random_dense(rng, sizes[0], sizes.back());
    }
    if (family == "circulant") {
        need(1, 2);
        return circulant(random_integers(rng, sizes.back()), sizes.size() == 2 ? sizes[0] : 0);
    }
    if (family == "toeplitz-rank") {
        need(2, 2);
        return rank_deficient_toeplitz(sizes[0], sizes[1], seed);
    }
    if (family == "hankel-rank") {
        need(2, 2);
        return rank_deficient_hankel(sizes[0], sizes[1], seed);
    }
    if (family == "dense-rank") {
        need(3, 3);
        return random_rank_deficient(rng, sizes[0], sizes[1], sizes[2]);
    }
    if (family == "block-th") {
        need(3, 3);
        return block_th(random_toeplitz(rng, sizes[0], sizes[1]), random_hankel(rng, sizes[0], sizes[2]));
    }
    throw std::invalid_argument("unknown generator family '" + std::string(family) + "'");
}

} // namespace dispkit
