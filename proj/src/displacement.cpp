#include "dispkit/displacement.hpp"

#include "dispkit/matrix_io.hpp"
#include "dispkit/special.hpp"

#include <array>
#include <charconv>
#include <vector>

namespace dispkit {

const char* to_string(Displacement d)
{
    return d == Displacement::Nabla ? "nabla" : "delta";
}

std::string Pattern::label() const
{
    return std::string(kind == Displacement::Nabla ? "dN[" : "dD[") + z_name + "," + n_name + "]";
}

Pattern make_pattern(Displacement kind, RationalMatrix z, RationalMatrix n, std::string z_name,
                     std::string n_name)
{
    if (!z.square() || !n.square())
        throw DimensionError("pattern: displacement matrices must be square, got Z " +
                             shape_string(z.rows(), z.cols()) + " and N " +
                             shape_string(n.rows(), n.cols()));
    return Pattern{kind, std::move(z), std::move(n), std::move(z_name), std::move(n_name)};
}

Pattern dual_pattern(const Pattern& p)
{
    return Pattern{p.kind, p.n, p.z, p.n_name, p.z_name};
}

namespace patterns {

Pattern shift_shift(Displacement kind, std::size_t m, std::size_t n)
{
    return make_pattern(kind, shift_matrix(m), shift_matrix(n), "S", "S");
}

Pattern shift_shiftT(Displacement kind, std::size_t m, std::size_t n)
{
    return make_pattern(kind, shift_matrix(m), transpose(shift_matrix(n)), "S", "St");
}

Pattern shiftT_shift(Displacement kind, std::size_t m, std::size_t n)
{
    return make_pattern(kind, transpose(shift_matrix(m)), shift_matrix(n), "St", "S");
}

Pattern shift_cyclic(Displacement kind, std::size_t m, std::size_t n)
{
    return make_pattern(kind, shift_matrix(m), cyclic_shift(n), "S", "Cn");
}

Pattern alternating(Displacement kind, std::size_t n)
{
    const auto z = alternating_shift(n);
    return make_pattern(kind, z, -transpose(z), "Zalt", "-ZaltT");
}

Pattern alternatingT(Displacement kind, std::size_t n)
{
    const auto z = alternating_shift(n);
    return make_pattern(kind, transpose(z), -transpose(z), "ZaltT", "-ZaltT");
}

} // namespace patterns

// ---------------------------------------------------------------------------
// pattern mini-language
// ---------------------------------------------------------------------------

namespace {

struct Term {
    bool negate = false;
    bool transpose = false;
    std::string name;                 // atom name, empty for files
    std::string path;                 // file atom
    std::optional<std::size_t> size;  // explicit size suffix
};

bool looks_like_path(std::string_view s)
{
    return s.find('/') != std::string_view::npos || s.find('.') != std::string_view::npos;
}

Term parse_term(std::string_view text)
{
    Term t;
    std::string_view s = text;
    if (!s.empty() && s.front() == '-') {
        t.negate = true;
        s.remove_prefix(1);
    }
    if (s.empty())
        throw PatternSyntaxError("pattern: empty term in '" + std::string(text) + "'");
    if (looks_like_path(s)) {
        t.path = std::string(s);
        return t;
    }
    static constexpr std::array<std::string_view, 7> names{"Zalt", "St", "Cn", "S", "J", "I", "0"};
    for (auto name : names) {
        if (s.substr(0, name.size()) == name) {
            t.name = std::string(name);
            s.remove_prefix(name.size());
            break;
        }
    }
    if (t.name.empty())
        throw PatternSyntaxError("pattern: unknown matrix name '" + std::string(text) +
                                 "' (expected S, St, J, I, Cn, Zalt, 0 or a file path)");
    std::size_t digits = 0;
    while (digits < s.size() && s[digits] >= '0' && s[digits] <= '9')
        ++digits;
    if (digits > 0) {
        std::size_t value = 0;
        std::from_chars(s.data(), s.data() + digits, value);
        if (value == 0)
            throw PatternSyntaxError("pattern: zero size in '" + std::string(text) + "'");
        t.size = value;
        s.remove_prefix(digits);
    }
    if (s == "T") {
        t.transpose = true;
    } else if (!s.empty()) {
        throw PatternSyntaxError("pattern: unexpected suffix '" + std::string(s) + "' in '" +
                                 std::string(text) + "'");
    }
    return t;
}

RationalMatrix build_term(const Term& t, std::size_t size)
{
    RationalMatrix m;
    if (!t.path.empty()) {
        m = read_matrix_file(t.path);
        if (m.rows() != size || m.cols() != size)
            throw DimensionError("pattern: matrix file '" + t.path + "' is " +
                                 shape_string(m.rows(), m.cols()) + ", expected " +
                                 shape_string(size, size));
    } else if (t.name == "S") {
        m = shift_matrix(size);
    } else if (t.name == "St") {
        m = transpose(shift_matrix(size));
    } else if (t.name == "J") {
        m = reverse_identity(size);
    } else if (t.name == "I") {
        m = identity<Rational>(size);
    } else if (t.name == "Cn") {
        m = cyclic_shift(size);
    } else if (t.name == "Zalt") {
        m = alternating_shift(size);
    } else {
        m = RationalMatrix(size, size);
    }
    if (t.transpose)
        m = transpose(m);
    if (t.negate)
        m = -m;
    return m;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace

RationalMatrix resolve_pattern_matrix(std::string_view spec, std::size_t size)
{
    std::vector<Term> terms;
    std::size_t start = 0;
    const std::string_view body = trim(spec);
    while (true) {
        const auto plus = body.find('+', start);
        terms.push_back(parse_term(trim(body.substr(start, plus == std::string_view::npos ? plus : plus - start))));
        if (plus == std::string_view::npos)
            break;
        start = plus + 1;
    }

    std::size_t fixed = 0;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        if (!terms[i].size && terms[i].path.empty())
            throw PatternSyntaxError("pattern: direct-sum term '" + terms[i].name +
                                     "' needs an explicit size (e.g. S4)");
        fixed += terms[i].size.value_or(0);
        if (!terms[i].path.empty())
            fixed += read_matrix_file(terms[i].path).rows();
    }
    if (fixed >= size && terms.size() > 1)
        throw DimensionError("pattern: direct-sum sizes exceed " + std::to_string(size));
    auto& last = terms.back();
    const std::size_t last_size = size - fixed;
    if (last.size && *last.size != last_size)
        throw DimensionError("pattern: term '" + std::string(spec) + "' has size " +
                             std::to_string(*last.size) + " but operand needs " + std::to_string(last_size));

    RationalMatrix out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::size_t sz = i + 1 == terms.size() ? last_size : terms[i].size.value_or(0);
        if (!terms[i].path.empty() && i + 1 < terms.size())
            sz = read_matrix_file(terms[i].path).rows();
        auto m = build_term(terms[i], sz);
        out = i == 0 ? std::move(m) : direct_sum(out, m);
    }
    return out;
}

Pattern parse_pattern(std::string_view spec, std::size_t rows, std::size_t cols)
{
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw PatternSyntaxError("pattern: expected 'nabla:Z,N' or 'delta:Z,N', got '" + std::string(spec) + "'");
    const auto kind_text = trim(spec.substr(0, colon));
    Displacement kind;
    if (kind_text == "nabla" || kind_text == "N")
        kind = Displacement::Nabla;
    else if (kind_text == "delta" || kind_text == "D")
        kind = Displacement::Delta;
    else
        throw PatternSyntaxError("pattern: unknown operator '" + std::string(kind_text) + "'");

    const auto rest = spec.substr(colon + 1);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos || rest.find(',', comma + 1) != std::string_view::npos)
        throw PatternSyntaxError("pattern: expected exactly two matrices 'Z,N' in '" + std::string(spec) + "'");
    const auto zs = trim(rest.substr(0, comma));
    const auto ns = trim(rest.substr(comma + 1));
    return make_pattern(kind, resolve_pattern_matrix(zs, rows), resolve_pattern_matrix(ns, cols),
                        std::string(zs), std::string(ns));
}

// ---------------------------------------------------------------------------
// ranks and generators
// ---------------------------------------------------------------------------

RankReport displacement_rank(const RationalMatrix& a, const Pattern& p, RankMethod method, double tol)
{
    const auto d = displace(a, p);
    return method == RankMethod::ExactBareiss ? exact_rank(d) : numerical_rank(to_real(d), tol);
}

RankReport displacement_rank(const RealMatrix& a, const Pattern& p, RankMethod method, double tol)
{
    const auto d = displace(a, p);
    return method == RankMethod::ExactBareiss ? exact_rank(d) : numerical_rank(d, tol);
}

Generator generator_factorization(const RealMatrix& a, const Pattern& p, double tol)
{
    const RealMatrix d = displace(a, p);
    const std::size_t m = d.rows();
    const std::size_t n = d.cols();
    const auto s = svd(d);
    std::size_t r = 0;
    if (!s.sigma.empty() && s.sigma[0] > 0.0)
        while (r < s.sigma.size() && s.sigma[r] > tol * s.sigma[0])
            ++r;
    Generator g;
    g.left = submatrix(s.u, 0, 0, m, r);
    g.right = submatrix(s.v, 0, 0, n, r);
    g.core = diagonal<double>(std::span<const double>(s.sigma.data(), r));
    g.pattern = p;
    return g;
}

Generator svd_generator(const RealMatrix& a, const RealMatrix& z, const RealMatrix& n, double tol)
{
    detail::check_pattern_shapes(a, z, n, "svd_generator");
    const auto s = svd(a);
    std::size_t r = 0;
    if (!s.sigma.empty() && s.sigma[0] > 0.0)
        while (r < s.sigma.size() && s.sigma[r] > tol * s.sigma[0])
            ++r;
    const RealMatrix u = columns(s.u, 0, r);
    const RealMatrix v = columns(s.v, 0, r);

    std::vector<double> core_diag(2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        core_diag[i] = s.sigma[i];
        core_diag[r + i] = -s.sigma[i];
    }
    Generator g;
    g.left = hstack(u, z * u);
    g.right = hstack(v, transpose(n) * v);
    g.core = diagonal<double>(core_diag);
    g.pattern = make_pattern(Displacement::Nabla, to_rational(z), to_rational(n));
    return g;
}

// ---------------------------------------------------------------------------
// nilpotency
// ---------------------------------------------------------------------------

namespace detail {
bool power_vanishes(const RationalMatrix& m, std::size_t k)
{
    return is_zero(power(m, k));
}
} // namespace detail

std::optional<std::size_t> nilpotency_index(const RationalMatrix& m)
{
    if (!m.square())
        return std::nullopt;
    RationalMatrix p = identity<Rational>(m.rows());
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        p = p * m;
        if (is_zero(p))
            return k;
    }
    return std::nullopt;
}

} // namespace dispkit
