#include "dispkit/verify.hpp"

#include "dispkit/inverses.hpp"
#include "dispkit/matrix_io.hpp"
#include "dispkit/psym.hpp"
#include "dispkit/special.hpp"
#include "dispkit/structured.hpp"

#include <cstdio>
#include <random>
#include <stdexcept>

namespace dispkit {

const char* to_string(Relation r)
{
    switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::Equal: return "=";
    case Relation::Less: return "<";
    }
    return "?";
}

const char* to_string(ProductFamily f)
{
    switch (f) {
    case ProductFamily::ToeplitzToeplitz: return "TT";
    case ProductFamily::HankelHankel: return "HH";
    case ProductFamily::ToeplitzHankel: return "TH";
    }
    return "?";
}

const char* to_string(StructureFamily f)
{
    return f == StructureFamily::Toeplitz ? "toeplitz" : "hankel";
}

BoundCheck make_check(std::string name, long long lhs, Relation rel, long long rhs,
                      std::map<std::string, long long> witnesses, std::string digest)
{
    BoundCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.relation = rel;
    switch (rel) {
    case Relation::LessEqual: c.holds = lhs <= rhs; break;
    case Relation::Equal: c.holds = lhs == rhs; break;
    case Relation::Less: c.holds = lhs < rhs; break;
    }
    c.witnesses = std::move(witnesses);
    c.instance_digest = std::move(digest);
    return c;
}

nlohmann::json to_json(const BoundCheck& c)
{
    return {{"name", c.name},
            {"lhs", c.lhs},
            {"rhs", c.rhs},
            {"relation", to_string(c.relation)},
            {"holds", c.holds},
            {"witnesses", c.witnesses},
            {"instance_digest", c.instance_digest}};
}

std::string instance_digest(std::initializer_list<const RationalMatrix*> inputs)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](std::string_view s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto* m : inputs) {
        feed(format_matrix(*m));
        feed("\x1e");
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

long long drank(Displacement kind, const RationalMatrix& a, const RationalMatrix& z,
                const RationalMatrix& n)
{
    const auto d = kind == Displacement::Nabla ? nabla(a, z, n) : delta(a, z, n);
    return static_cast<long long>(exact_rank(d).rank);
}

namespace {

using enum Displacement;

long long rank_ll(const RationalMatrix& a)
{
    return static_cast<long long>(exact_rank(a).rank);
}

RationalMatrix eye(std::size_t n)
{
    return identity<Rational>(n);
}

void require_square(const RationalMatrix& a, const char* op)
{
    if (!a.square())
        throw DimensionError(std::string(op) + ": matrix must be square, got " + shape_string(a.rows(), a.cols()));
}

// Exact Frobenius norm as a double, for hypothesis diagnostics only.
double residual_norm(const RationalMatrix& r)
{
    return frobenius_norm(to_real(r));
}

} // namespace

// ---------------------------------------------------------------------------

std::array<BoundCheck, 2> check_link_dn(const RationalMatrix& a, const RationalMatrix& z,
                                        const RationalMatrix& n)
{
    detail::check_pattern_shapes(a, z, n, "check_link_dn");
    const auto zt = transpose(z);
    const auto digest = instance_digest({&a, &z, &n});
    const long long dn = drank(Nabla, a, z, n);
    const long long dd = drank(Delta, a, z, n);
    const long long dd_t = drank(Delta, a, zt, n);
    const long long dn_t = drank(Nabla, a, zt, n);
    const long long di = drank(Nabla, eye(z.rows()), z, zt);
    const std::map<std::string, long long> w{{"dN[Z,N]{A}", dn},  {"dD[Z,N]{A}", dd},
                                             {"dD[Zt,N]{A}", dd_t}, {"dN[Zt,N]{A}", dn_t},
                                             {"dN[Z,Zt]{I}", di}};
    return {make_check("link-dn/nabla", dn, Relation::LessEqual, dd_t + di, w, digest),
            make_check("link-dn/delta", dd, Relation::LessEqual, dn_t + di, w, digest)};
}

std::optional<LinkWitness> find_link_equality_witness(std::uint64_t seed, std::size_t attempts)
{
    Rng rng(seed);
    std::uniform_int_distribution<int> size(3, 6);
    std::uniform_int_distribution<int> coin(0, 3);
    std::uniform_int_distribution<int> sparse(-1, 1);
    for (std::size_t t = 0; t < attempts; ++t) {
        const std::size_t m = static_cast<std::size_t>(size(rng));
        const std::size_t n = static_cast<std::size_t>(size(rng));
        std::vector<Rational> col(m), row(n);
        for (auto& x : col)
            x = sparse(rng);
        for (auto& x : row)
            x = sparse(rng);
        row[0] = col[0];
        const auto a = toeplitz(col, row);
        if (is_zero(a))
            continue;
        // Upper shift, sometimes with one extra unit entry.
        std::vector<Rational> z_entries(m * m, Rational(0));
        for (std::size_t i = 0; i + 1 < m; ++i)
            z_entries[i * m + i + 1] = 1;
        if (coin(rng) == 0) {
            std::uniform_int_distribution<std::size_t> pos(0, m * m - 1);
            z_entries[pos(rng)] = 1;
        }
        const RationalMatrix z(m, m, std::move(z_entries));
        const auto nn = shift_matrix<Rational>(n);
        const auto checks = check_link_dn(a, z, nn);
        const auto& c = checks[0];
        if (c.lhs == c.rhs && c.witnesses.at("dN[Z,Zt]{I}") >= 1 && c.witnesses.at("dD[Zt,N]{A}") >= 1) {
            auto eq = c;
            eq.name = "link-dn/equality-witness";
            eq.relation = Relation::Equal;
            return LinkWitness{a, z, nn, eq};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

std::array<BoundCheck, 2> check_inverse_duality(const RationalMatrix& a, const RationalMatrix& z,
                                                const RationalMatrix& n)
{
    require_square(a, "check_inverse_duality");
    detail::check_pattern_shapes(a, z, n, "check_inverse_duality");
    const auto inv = inverse(a);
    const auto digest = instance_digest({&a, &z, &n});
    const long long dd = drank(Delta, a, z, n);
    const long long dd_inv = drank(Delta, inv, n, z);
    const long long dn = drank(Nabla, a, z, n);
    const long long dn_inv = drank(Nabla, inv, n, z);
    const std::map<std::string, long long> w{
        {"dD[Z,N]{A}", dd}, {"dD[N,Z]{Ainv}", dd_inv}, {"dN[Z,N]{A}", dn}, {"dN[N,Z]{Ainv}", dn_inv}};
    return {make_check("inverse-duality/delta", dd, Relation::Equal, dd_inv, w, digest),
            make_check("inverse-duality/nabla", dn, Relation::Equal, dn_inv, w, digest)};
}

std::array<BoundCheck, 2> check_regularized(const RationalMatrix& a, const RationalMatrix& z,
                                            const RationalMatrix& n, const Rational& eta)
{
    require_square(a, "check_regularized");
    detail::check_pattern_shapes(a, z, n, "check_regularized");
    const auto r = regularized_inverse(a, eta);
    const RationalMatrix eta_m(1, 1, {eta});
    const auto digest = instance_digest({&a, &z, &n, &eta_m});
    const auto i = eye(a.rows());
    std::array<BoundCheck, 2> out;
    for (const auto kind : {Nabla, Delta}) {
        const long long lhs = drank(kind, r, n, z);
        const long long da = drank(kind, a, z, n);
        const long long di = drank(kind, i, z, n);
        const std::string tag = kind == Nabla ? "N" : "D";
        out[kind == Nabla ? 0 : 1] =
            make_check(std::string("regularized/") + to_string(kind), lhs, Relation::LessEqual, da + di,
                       {{"d" + tag + "[N,Z]{R}", lhs}, {"d" + tag + "[Z,N]{A}", da}, {"d" + tag + "[Z,N]{I}", di}},
                       digest);
    }
    return out;
}

BoundCheck check_regularized_toeplitz(const RationalMatrix& t, const Rational& eta)
{
    require_square(t, "check_regularized_toeplitz");
    if (!is_toeplitz(t))
        throw std::invalid_argument("check_regularized_toeplitz: matrix is not Toeplitz");
    const std::size_t n = t.rows();
    const auto s = shift_matrix<Rational>(n);
    const auto st = transpose(s);
    const auto r = regularized_inverse(t, eta);
    const RationalMatrix eta_m(1, 1, {eta});
    const long long lhs = drank(Nabla, r, st, s);
    const long long dt = drank(Nabla, t, s, st);
    const long long dshift = drank(Nabla, t + scale(eta, eye(n)), s, st);
    return make_check("regularized/toeplitz-equality", lhs, Relation::Equal, dt,
                      {{"dN[St,S]{R}", lhs}, {"dN[S,St]{T}", dt}, {"dN[S,St]{T+eta*I}", dshift}},
                      instance_digest({&t, &eta_m}));
}

std::array<BoundCheck, 2> check_schur(const RationalMatrix& m, const RationalMatrix& z1,
                                      const RationalMatrix& n1, const RationalMatrix& z2,
                                      const RationalMatrix& n2)
{
    require_square(m, "check_schur");
    if (!z1.square() || !n1.square() || z1.rows() != n1.rows() || !z2.square() || !n2.square() ||
        z2.rows() != n2.rows() || z1.rows() + z2.rows() != m.rows() || z1.rows() == 0 || z2.rows() == 0)
        throw DimensionError("check_schur: blocks Z1/N1 (k x k) and Z2/N2 ((n-k) x (n-k)) must split M " +
                             shape_string(m.rows(), m.cols()));
    if (exact_rank(m).rank != m.rows())
        throw SingularMatrixError("check_schur: M must be invertible", exact_rank(m), m.rows());
    const std::size_t k = z1.rows();
    const auto schur = schur_complement(m, k);
    const auto z = direct_sum(z1, z2);
    const auto n = direct_sum(n1, n2);
    const auto digest = instance_digest({&m, &z1, &n1, &z2, &n2});
    std::array<BoundCheck, 2> out;
    for (const auto kind : {Nabla, Delta}) {
        const long long lhs = drank(kind, schur, z2, n2);
        const long long rhs = drank(kind, m, z, n);
        const std::string tag = kind == Nabla ? "N" : "D";
        out[kind == Nabla ? 0 : 1] =
            make_check(std::string("schur/") + to_string(kind), lhs, Relation::LessEqual, rhs,
                       {{"d" + tag + "[Z2,N2]{Schur}", lhs}, {"d" + tag + "[Z,N]{M}", rhs}}, digest);
    }
    return out;
}

// ---------------------------------------------------------------------------

BoundCheck check_product(Displacement kind, const RationalMatrix& a1, const RationalMatrix& a2,
                         const RationalMatrix& z1, const RationalMatrix& n1, const RationalMatrix& n2,
                         const RationalMatrix& z2)
{
    if (a1.rows() != a2.cols() || a1.cols() != a2.rows())
        throw DimensionError("check_product: need A1 (n1 x n2) and A2 (n2 x n1), got " +
                             shape_string(a1.rows(), a1.cols()) + " and " + shape_string(a2.rows(), a2.cols()));
    detail::check_pattern_shapes(a1, z1, n1, "check_product");
    detail::check_pattern_shapes(a2, n2, z2, "check_product");
    const auto prod = a1 * a2;
    const long long lhs = drank(kind, prod, z1, z2);
    const long long d1 = drank(kind, a1, z1, n1);
    const long long di = drank(kind, eye(a1.cols()), n1, n2);
    const long long d2 = drank(kind, a2, n2, z2);
    const std::string tag = kind == Nabla ? "N" : "D";
    return make_check(std::string("product/") + to_string(kind), lhs, Relation::LessEqual, d1 + di + d2,
                      {{"d" + tag + "[Z1,Z2]{A1A2}", lhs},
                       {"d" + tag + "[Z1,N1]{A1}", d1},
                       {"d" + tag + "[N1,N2]{I}", di},
                       {"d" + tag + "[N2,Z2]{A2}", d2}},
                      instance_digest({&a1, &a2, &z1, &n1, &n2, &z2}));
}

std::array<BoundCheck, 2> check_product_family(ProductFamily family, const RationalMatrix& a1,
                                               const RationalMatrix& a2)
{
    require_square(a1, "check_product_family");
    if (a2.rows() != a1.rows() || a2.cols() != a1.cols())
        throw DimensionError("check_product_family: factors must have equal square shape");
    const std::size_t n = a1.rows();
    const auto s = shift_matrix<Rational>(n);
    const auto st = transpose(s);
    const auto prod = a1 * a2;
    const auto digest = instance_digest({&a1, &a2});
    const std::string f = to_string(family);

    // Δ bound: general product theorem with the per-family pattern choice.
    // ∇ bound: the Töplitz/Hankel-specific count of nonzero rows and columns.
    RationalMatrix zd_right, n1, n2, zn_right;
    switch (family) {
    case ProductFamily::ToeplitzToeplitz:
        zd_right = s, n1 = s, n2 = s, zn_right = st;
        break;
    case ProductFamily::HankelHankel:
        zd_right = s, n1 = st, n2 = st, zn_right = st;
        break;
    case ProductFamily::ToeplitzHankel:
        zd_right = st, n1 = s, n2 = s, zn_right = s;
        break;
    }
    const long long ld = drank(Delta, prod, s, zd_right);
    const long long ln = drank(Nabla, prod, s, zn_right);
    const long long d1 = drank(Delta, a1, s, n1);
    const long long di = drank(Delta, eye(n), n1, n2);
    const long long d2 = drank(Delta, a2, n2, zd_right);
    const bool a1_toeplitz = family != ProductFamily::HankelHankel;
    const bool a2_toeplitz = family == ProductFamily::ToeplitzToeplitz;
    const long long n1rank = drank(Nabla, a1, s, a1_toeplitz ? st : s);
    const long long n2rank = drank(Nabla, a2, s, a2_toeplitz ? st : s);
    return {make_check("product-" + f + "/delta", ld, Relation::LessEqual, 4,
                       {{"dD{A1A2}", ld}, {"dD[Z1,N1]{A1}", d1}, {"dD[N1,N2]{I}", di}, {"dD[N2,Z2]{A2}", d2}},
                       digest),
            make_check("product-" + f + "/nabla", ln, Relation::LessEqual, 4,
                       {{"dN{A1A2}", ln}, {"dN{A1}", n1rank}, {"dN{A2}", n2rank}}, digest)};
}

ProductRectCheck check_product_rect(const RationalMatrix& a, const RationalMatrix& b,
                                    const RationalMatrix& za, const RationalMatrix& na,
                                    const RationalMatrix& zb, const RationalMatrix& nb)
{
    if (a.cols() != b.rows())
        throw DimensionError("check_product_rect: inner dimensions differ, A " + shape_string(a.rows(), a.cols()) +
                             " and B " + shape_string(b.rows(), b.cols()));
    detail::check_pattern_shapes(a, za, na, "check_product_rect");
    detail::check_pattern_shapes(b, zb, nb, "check_product_rect");
    const auto ab = a * b;
    const auto da = delta(a, za, na);
    const auto di = delta(eye(a.cols()), na, zb);
    const auto db = delta(b, zb, nb);
    const auto dab = delta(ab, za, nb);
    const auto residual = dab - (da * b + a * di * b + a * db);
    const auto digest = instance_digest({&a, &b, &za, &na, &zb, &nb});
    const long long lhs = rank_ll(dab);
    const long long ra = rank_ll(da), ri = rank_ll(di), rb = rank_ll(db);
    ProductRectCheck out;
    out.bound = make_check("product-rect/delta", lhs, Relation::LessEqual, ra + ri + rb,
                           {{"dD[ZA,NB]{AB}", lhs}, {"dD[ZA,NA]{A}", ra}, {"dD[NA,ZB]{I}", ri}, {"dD[ZB,NB]{B}", rb}},
                           digest);
    out.identity = make_check("product-rect/identity", rank_ll(residual), Relation::Equal, 0,
                              {{"rank(residual)", rank_ll(residual)}}, digest);
    return out;
}

BoundCheck check_leibniz(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& z,
                         const RationalMatrix& n)
{
    detail::check_pattern_shapes(a, z, n, "check_leibniz");
    detail::check_pattern_shapes(b, n, z, "check_leibniz");
    const auto residual = delta(a * b, z, z) - (delta(a, z, n) * b + a * delta(b, n, z));
    const long long r = rank_ll(residual);
    return make_check("leibniz/identity", r, Relation::Equal, 0, {{"rank(residual)", r}},
                      instance_digest({&a, &b, &z, &n}));
}

BoundCheck check_inverse_null_displacement(const RationalMatrix& a, const RationalMatrix& z,
                                           const RationalMatrix& n)
{
    require_square(a, "check_inverse_null_displacement");
    detail::check_pattern_shapes(a, z, n, "check_inverse_null_displacement");
    const auto b = inverse(a);
    const auto sum = delta(a, z, n) * b + a * delta(b, n, z);
    const long long r = rank_ll(sum);
    return make_check("leibniz/inverse-null", r, Relation::Equal, 0, {{"rank(dA*B+A*dB)", r}},
                      instance_digest({&a, &z, &n}));
}

std::array<BoundCheck, 2> check_full_rank_pinv(const RationalMatrix& a, const RationalMatrix& z,
                                               const RationalMatrix& n)
{
    detail::check_pattern_shapes(a, z, n, "check_full_rank_pinv");
    const auto b = full_rank_pinv(a);
    const auto at = transpose(a);
    const auto zt = transpose(z);
    const auto digest = instance_digest({&a, &z, &n});
    const long long l1 = drank(Delta, b, n, z);
    const long long l2 = drank(Delta, b, n, zt);
    const long long da = drank(Delta, a, z, n);
    const long long dat = drank(Delta, at, n, z);
    const long long di = drank(Delta, eye(a.rows()), zt, z);
    const std::map<std::string, long long> w{{"dD[N,Z]{B}", l1},    {"dD[N,Zt]{B}", l2},
                                             {"dD[Z,N]{A}", da},    {"dD[N,Z]{At}", dat},
                                             {"dD[Zt,Z]{I_m}", di}};
    return {make_check("full-rank-pinv/first", l1, Relation::LessEqual, da + 2 * dat, w, digest),
            make_check("full-rank-pinv/second", l2, Relation::LessEqual, 3 * da + di, w, digest)};
}

// ---------------------------------------------------------------------------

BoundCheck check_pinv_psym(const RationalMatrix& a, const RationalMatrix& p, const RationalMatrix& z,
                           const RationalMatrix& n)
{
    require_square(a, "check_pinv_psym");
    detail::check_pattern_shapes(a, z, n, "check_pinv_psym");
    if (!p.square() || p.rows() != a.rows())
        throw DimensionError("check_pinv_psym: P must match A");
    const auto pt = transpose(p);
    if (const auto d = p * pt - eye(p.rows()); !is_zero(d))
        throw HypothesisError("check_pinv_psym: P is not orthogonal", residual_norm(d));
    if (const auto d = p * z * p - n; !is_zero(d))
        throw HypothesisError("check_pinv_psym: hypothesis P*Z*P = N violated", residual_norm(d));
    if (const auto d = p * a * pt - transpose(a); !is_zero(d))
        throw HypothesisError("check_pinv_psym: A is not P-symmetric", residual_norm(d));
    const auto ap = pinv_exact(a);
    const long long lhs = drank(Nabla, ap, n, z);
    const long long da = drank(Nabla, a, z, n);
    return make_check("pinv-psym", lhs, Relation::LessEqual, 2 * da,
                      {{"dN[N,Z]{Apinv}", lhs}, {"dN[Z,N]{A}", da}, {"rank(A)", rank_ll(a)}},
                      instance_digest({&a, &p, &z, &n}));
}

BoundCheck check_rank_pinv(const RationalMatrix& a, const RationalMatrix& z, const RationalMatrix& n)
{
    detail::check_pattern_shapes(a, z, n, "check_rank_pinv");
    const auto ap = pinv_exact(a);
    const long long r = rank_ll(a);
    const long long da = drank(Nabla, a, z, n);
    const long long lhs = drank(Nabla, ap, n, z);
    const Relation rel = da < 2 * r ? Relation::Less : Relation::LessEqual;
    return make_check("rank-pinv", lhs, rel, 2 * r,
                      {{"dN[N,Z]{Apinv}", lhs}, {"dN[Z,N]{A}", da}, {"rank(A)", r}},
                      instance_digest({&a, &z, &n}));
}

std::array<BoundCheck, 2> check_pinv_ht(const RationalMatrix& a, StructureFamily family)
{
    require_square(a, "check_pinv_ht");
    const std::size_t n = a.rows();
    const auto s = shift_matrix<Rational>(n);
    const auto st = transpose(s);
    const auto ap = pinv_exact(a);
    const auto digest = instance_digest({&a});
    const std::string f = to_string(family);
    if (family == StructureFamily::Toeplitz) {
        const long long ln = drank(Nabla, ap, st, s);
        const long long dn = drank(Nabla, a, s, st);
        const long long ld = drank(Delta, ap, s, s);
        const long long dd = drank(Delta, a, s, s);
        return {make_check("pinv-ht/" + f + "/nabla", ln, Relation::LessEqual, 2 * dn,
                           {{"dN[St,S]{Apinv}", ln}, {"dN[S,St]{A}", dn}}, digest),
                make_check("pinv-ht/" + f + "/delta", ld, Relation::LessEqual, 2 * dd + 1,
                           {{"dD[S,S]{Apinv}", ld}, {"dD[S,S]{A}", dd}}, digest)};
    }
    const long long ln = drank(Nabla, ap, s, s);
    const long long dn = drank(Nabla, a, s, s);
    const long long ld = drank(Delta, ap, st, s);
    const long long dd = drank(Delta, a, s, st);
    return {make_check("pinv-ht/" + f + "/nabla", ln, Relation::LessEqual, 2 * dn,
                       {{"dN[S,S]{Apinv}", ln}, {"dN[S,S]{A}", dn}}, digest),
            make_check("pinv-ht/" + f + "/delta", ld, Relation::LessEqual, 2 * dd + 1,
                       {{"dD[St,S]{Apinv}", ld}, {"dD[S,St]{A}", dd}}, digest)};
}

BoundCheck check_pinv_rect(const RationalMatrix& a, const RationalMatrix& z, const RationalMatrix& n)
{
    detail::check_pattern_shapes(a, z, n, "check_pinv_rect");
    if (a.rows() <= a.cols())
        throw DimensionError("check_pinv_rect: need m > n, got " + shape_string(a.rows(), a.cols()));
    const auto ap = pinv_exact(a);
    const auto at = transpose(a);
    const long long lhs = drank(Delta, ap, n, z);
    const long long dat = drank(Delta, at, n, z);
    const long long da = drank(Delta, a, z, n);
    const long long di = drank(Nabla, eye(a.cols()), n, transpose(n));
    return make_check("pinv-rect", lhs, Relation::LessEqual, 3 * dat + 2 * da + 2 * di,
                      {{"dD[N,Z]{Apinv}", lhs}, {"dD[N,Z]{At}", dat}, {"dD[Z,N]{A}", da},
                       {"dN[N,Nt]{I_n}", di}, {"rank(A)", rank_ll(a)}},
                      instance_digest({&a, &z, &n}));
}

// ---------------------------------------------------------------------------

BoundCheck check_reconstruction(const RationalMatrix& a, const RationalMatrix& z, const RationalMatrix& n)
{
    detail::check_pattern_shapes(a, z, n, "check_reconstruction");
    const auto kz = nilpotency_index(z);
    const auto kn = nilpotency_index(n);
    if (!kz && !kn)
        throw NotInvertibleError("check_reconstruction: neither Z nor N is nilpotent");
    std::size_t k = std::min(kz.value_or(SIZE_MAX), kn.value_or(SIZE_MAX));
    k = k == 0 ? 0 : k - 1;
    const auto back = reconstruct_nabla(nabla(a, z, n), z, n, k);
    const long long r = rank_ll(back - a);
    return make_check("reconstruction/round-trip", r, Relation::Equal, 0,
                      {{"rank(residual)", r}, {"k", static_cast<long long>(k)}},
                      instance_digest({&a, &z, &n}));
}

BoundCheck check_displacement_value(std::string name, const RationalMatrix& a, const Pattern& p,
                                    Relation rel, long long value)
{
    const long long d = static_cast<long long>(displacement_rank(a, p).rank);
    return make_check(std::move(name), d, rel, value, {{p.label(), d}}, instance_digest({&a, &p.z, &p.n}));
}

} // namespace dispkit
