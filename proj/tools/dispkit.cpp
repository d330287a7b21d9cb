// dispkit: command-line front end.
//
// Exit status: 0 success, 1 a check failed, 2 usage or input error.

#include "dispkit/displacement.hpp"
#include "dispkit/inverses.hpp"
#include "dispkit/matrix_io.hpp"
#include "dispkit/psym.hpp"
#include "dispkit/structured.hpp"
#include "dispkit/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace dispkit;
using nlohmann::json;

namespace {

enum class Backend { Exact, Float };

struct Options {
    std::string in = "-";
    std::string out;
    std::string pattern;
    std::string spec;
    std::string p = "J";
    std::string suite = "all-paper-examples";
    std::string backend = "exact";
    double tol = kDefaultRankTol;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 100;
    std::size_t min_size = 4, max_size = 8;
    std::optional<std::size_t> k;
    bool json = false;
    bool serial = false;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::uint64_t resolve_seed(const Options& o)
{
    if (o.seed)
        return *o.seed;
    if (const char* env = std::getenv("DISPKIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("DISPKIT_SEED is not an unsigned integer: '") + env + "'");
        }
    }
    return 1;
}

Backend resolve_backend(const Options& o)
{
    if (o.backend == "exact")
        return Backend::Exact;
    if (o.backend == "float") {
        if (!(o.tol > 0.0))
            throw UsageError("--tol must be positive for the float backend");
        return Backend::Float;
    }
    throw UsageError("unknown backend '" + o.backend + "' (expected exact or float)");
}

RationalMatrix load(const std::string& path)
{
    return path == "-" ? read_matrix(std::cin, "<stdin>") : read_matrix_file(path);
}

template <typename T>
void emit_matrix(const Options& o, const Matrix<T>& m, std::string_view comment)
{
    if (o.out.empty() || o.out == "-")
        std::cout << format_matrix(m, comment);
    else
        write_matrix_file(o.out, m, comment);
}

json matrix_json(const RealMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(m(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

json rank_json(const RankReport& r)
{
    return {{"rank", r.rank}, {"method", to_string(r.method)}, {"tolerance", r.tolerance}};
}

// ---------------------------------------------------------------------------

int cmd_gen(const Options& o)
{
    if (o.spec.empty())
        throw UsageError("gen: --spec is required");
    const auto seed = resolve_seed(o);
    const auto a = generate_from_spec(o.spec, seed);
    emit_matrix(o, a, "generated by dispkit gen --spec " + o.spec + " --seed " + std::to_string(seed));
    return 0;
}

int cmd_displace(const Options& o)
{
    const auto a = load(o.in);
    const auto p = parse_pattern(o.pattern, a.rows(), a.cols());
    if (resolve_backend(o) == Backend::Exact)
        emit_matrix(o, displace(a, p), p.label());
    else
        emit_matrix(o, displace(to_real(a), p), p.label());
    return 0;
}

int cmd_drank(const Options& o)
{
    const auto a = load(o.in);
    const auto p = parse_pattern(o.pattern, a.rows(), a.cols());
    const auto r = resolve_backend(o) == Backend::Exact ? displacement_rank(a, p)
                                                         : displacement_rank(to_real(a), p, RankMethod::SvdThreshold, o.tol);
    if (o.json)
        std::cout << json{{"pattern", p.label()}, {"displacement_rank", rank_json(r)}}.dump(2) << "\n";
    else
        std::cout << p.label() << " = " << r.rank << "\n";
    return 0;
}

int cmd_reconstruct(const Options& o)
{
    const auto d = load(o.in);
    const auto p = parse_pattern(o.pattern, d.rows(), d.cols());
    if (p.kind != Displacement::Nabla)
        throw UsageError("reconstruct: only nabla patterns are invertible by the power sum");
    std::size_t k;
    if (o.k) {
        k = *o.k;
    } else {
        const auto kz = nilpotency_index(p.z);
        const auto kn = nilpotency_index(p.n);
        if (!kz && !kn)
            throw NotInvertibleError("reconstruct: neither Z nor N is nilpotent");
        k = std::min(kz.value_or(SIZE_MAX), kn.value_or(SIZE_MAX));
        k = k == 0 ? 0 : k - 1;
    }
    if (resolve_backend(o) == Backend::Exact)
        emit_matrix(o, reconstruct_nabla(d, p.z, p.n, k), "reconstructed from " + p.label());
    else
        emit_matrix(o, reconstruct_nabla(to_real(d), to_real(p.z), to_real(p.n), k),
                    "reconstructed from " + p.label());
    return 0;
}

int cmd_pinv(const Options& o)
{
    if (resolve_backend(o) == Backend::Exact)
        throw UsageError("pinv: the exact backend does not support SVD-based pseudo-inverses; use --backend float");
    const auto aq = load(o.in);
    const auto a = to_real(aq);
    const auto b = pinv(a, o.tol);
    const auto res = penrose_residuals(a, b);
    const bool ok = res.is_moore_penrose();
    if (!o.out.empty())
        write_matrix_file(o.out, b, "pseudo-inverse");
    if (o.json) {
        json j{{"shape", {a.rows(), a.cols()}},
               {"rank", rank_json(numerical_rank(a, o.tol))},
               {"penrose", {{"r1", res.r1}, {"r2", res.r2}, {"r3", res.r3}, {"r4", res.r4}, {"scale", res.scale}}},
               {"is_moore_penrose", ok}};
        if (o.out.empty())
            j["pinv"] = matrix_json(b);
        std::cout << j.dump(2) << "\n";
    } else {
        if (o.out.empty())
            std::cout << format_matrix(b, "pseudo-inverse");
        std::cout << "# penrose residuals r1=" << to_string(res.r1) << " r2=" << to_string(res.r2)
                  << " r3=" << to_string(res.r3) << " r4=" << to_string(res.r4)
                  << " scale=" << to_string(res.scale) << (ok ? " ok" : " FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_certify(const Options& o)
{
    const auto aq = load(o.in);
    if (!aq.square())
        throw DimensionError("certify: matrix must be square, got " + shape_string(aq.rows(), aq.cols()));
    const auto p = parse_pattern(o.pattern, aq.rows(), aq.cols());
    if (p.kind != Displacement::Nabla)
        throw UsageError("certify: the certificate is defined for nabla patterns");
    const auto pm = resolve_pattern_matrix(o.p, aq.rows());
    const auto cert = pinv_certificate(to_real(aq), to_real(pm), to_real(p.z), to_real(p.n), o.tol);
    if (o.json) {
        std::cout << json{{"pattern", p.label()},
                          {"delta", cert.delta},
                          {"pinv_delta", cert.pinv_delta},
                          {"width", cert.e1.cols()},
                          {"rank_e1", cert.rank_e1},
                          {"rank_e2", cert.rank_e2},
                          {"residual", cert.residual},
                          {"scale", cert.scale},
                          {"pzp_residual", cert.pzp_residual},
                          {"p_perturbation", cert.p_perturbation},
                          {"p_is_symmetric", cert.p_is_symmetric},
                          {"valid", cert.valid}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << p.label() << " = " << cert.delta << ", pinv " << "dN[" << p.n_name << "," << p.z_name
                  << "] = " << cert.pinv_delta << " <= " << 2 * cert.delta << "\n"
                  << "E1, E2 width " << cert.e1.cols() << " (ranks " << cert.rank_e1 << ", " << cert.rank_e2
                  << "), residual " << to_string(cert.residual) << " / scale " << to_string(cert.scale) << "\n"
                  << (cert.valid ? "certificate valid" : "certificate INVALID") << "\n";
    }
    return cert.valid ? 0 : 1;
}

int cmd_verify(const Options& o)
{
    SuiteOptions so{o.trials, resolve_seed(o), o.min_size, o.max_size};
    const auto rep = o.serial ? run_suite_serial(o.suite, so) : run_suite(o.suite, so);
    if (o.json) {
        std::cout << to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "suite " << rep.suite << ": " << rep.trials << " trials, seed " << rep.seed << ", "
                  << rep.checks.size() << " checks, " << rep.failures.size() << " failures\n";
        for (const auto& [name, v] : rep.observed_max)
            std::cout << "  max lhs " << name << " = " << v << "\n";
        for (const auto& [name, v] : rep.observed)
            std::cout << "  max " << name << " = " << to_string(v) << "\n";
        for (const auto& f : rep.failures)
            std::cout << "  FAILED " << f << "\n";
    }
    return rep.passed() ? 0 : 1;
}

int cmd_report(const Options& o)
{
    const auto a = load(o.in);
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<Pattern> pats;
    if (!o.pattern.empty()) {
        pats.push_back(parse_pattern(o.pattern, m, n));
    } else {
        for (const auto kind : {Displacement::Nabla, Displacement::Delta}) {
            pats.push_back(patterns::shift_shift(kind, m, n));
            pats.push_back(patterns::shift_shiftT(kind, m, n));
            pats.push_back(patterns::shiftT_shift(kind, m, n));
        }
    }
    const auto rank = exact_rank(a);
    const auto ap = pinv_exact(a);
    json rows = json::array();
    for (const auto& p : pats) {
        const auto dual = dual_pattern(p);
        rows.push_back({{"pattern", p.label()},
                        {"displacement_rank", displacement_rank(a, p).rank},
                        {"pinv_pattern", dual.label()},
                        {"pinv_displacement_rank", displacement_rank(ap, dual).rank}});
    }
    const json j{{"shape", {m, n}},
                 {"rank", rank_json(rank)},
                 {"toeplitz", is_toeplitz(a)},
                 {"hankel", is_hankel(a)},
                 {"displacement", rows}};
    if (o.json) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "shape " << m << "x" << n << ", rank " << rank.rank << " (exact)"
              << (is_toeplitz(a) ? ", Toeplitz" : "") << (is_hankel(a) ? ", Hankel" : "") << "\n";
    for (const auto& r : rows)
        std::cout << "  " << r["pattern"].get<std::string>() << " = " << r["displacement_rank"].get<std::size_t>()
                  << "    pinv " << r["pinv_pattern"].get<std::string>() << " = "
                  << r["pinv_displacement_rank"].get<std::size_t>() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"dispkit: displacement ranks of structured matrices and their (pseudo-)inverses"};
    app.require_subcommand(1);
    Options o;

    auto in_opt = [&](CLI::App* c) { c->add_option("--in,-i", o.in, "matrix file ('-' for stdin)"); };
    auto out_opt = [&](CLI::App* c) { c->add_option("--out,-o", o.out, "output file (default stdout)"); };
    auto backend_opt = [&](CLI::App* c) {
        c->add_option("--backend", o.backend, "exact or float")->capture_default_str();
        c->add_option("--tol", o.tol, "relative rank tolerance (float backend)")->capture_default_str();
    };
    auto pattern_opt = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("--pattern,-p", o.pattern, "nabla:Z,N or delta:Z,N, e.g. nabla:S,St");
        if (required)
            opt->required();
    };

    auto* gen = app.add_subcommand("gen", "generate a matrix from a spec");
    gen->add_option("--spec", o.spec, "e.g. toeplitz:5, hankel-rank:6,3, paper:alternate-toeplitz")->required();
    gen->add_option("--seed", o.seed, "random seed (falls back to DISPKIT_SEED)");
    out_opt(gen);

    auto* disp = app.add_subcommand("displace", "print the displaced matrix");
    in_opt(disp), out_opt(disp), pattern_opt(disp, true), backend_opt(disp);

    auto* dr = app.add_subcommand("drank", "displacement rank");
    in_opt(dr), pattern_opt(dr, true), backend_opt(dr);
    dr->add_flag("--json", o.json);

    auto* rec = app.add_subcommand("reconstruct", "recover A from its nabla-displaced matrix");
    in_opt(rec), out_opt(rec), pattern_opt(rec, true), backend_opt(rec);
    rec->add_option("--k", o.k, "number of power-sum terms minus one (default: nilpotency index - 1)");

    auto* pi = app.add_subcommand("pinv", "Moore-Penrose pseudo-inverse with Penrose residuals");
    in_opt(pi), out_opt(pi);
    pi->add_option("--backend", o.backend, "float (exact is rejected)")->default_str("float");
    pi->add_option("--tol", o.tol, "relative singular value cutoff")->capture_default_str();
    pi->add_flag("--json", o.json);

    auto* cert = app.add_subcommand("certify", "certificate for the pseudo-inverse displacement bound");
    in_opt(cert), pattern_opt(cert, true);
    cert->add_option("--P", o.p, "P matrix: J, I, or a matrix file")->capture_default_str();
    cert->add_option("--tol", o.tol, "relative rank tolerance")->capture_default_str();
    cert->add_flag("--json", o.json);

    auto* ver = app.add_subcommand("verify", "run a randomized or fixed verification suite");
    ver->add_option("--suite", o.suite, "suite name")->capture_default_str();
    ver->add_option("--trials", o.trials, "number of trials")->capture_default_str();
    ver->add_option("--seed", o.seed, "suite seed (falls back to DISPKIT_SEED)");
    ver->add_option("--min-size", o.min_size)->capture_default_str();
    ver->add_option("--max-size", o.max_size)->capture_default_str();
    ver->add_flag("--serial", o.serial, "run trials on one thread");
    ver->add_flag("--json", o.json);
    ver->add_flag_callback("--list", [] {
        for (const auto& s : suite_names())
            std::cout << s << "\n";
        std::exit(0);
    }, "list suite names");

    auto* rep = app.add_subcommand("report", "rank and displacement summary of a matrix");
    in_opt(rep), pattern_opt(rep, false);
    rep->add_flag("--json", o.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // pinv defaults to float unless the user asked otherwise.
    if (pi->parsed() && pi->count("--backend") == 0)
        o.backend = "float";

    try {
        if (gen->parsed())
            return cmd_gen(o);
        if (disp->parsed())
            return cmd_displace(o);
        if (dr->parsed())
            return cmd_drank(o);
        if (rec->parsed())
            return cmd_reconstruct(o);
        if (pi->parsed())
            return cmd_pinv(o);
        if (cert->parsed())
            return cmd_certify(o);
        if (ver->parsed())
            return cmd_verify(o);
        if (rep->parsed())
            return cmd_report(o);
    } catch (const std::exception& e) {
        std::cerr << "dispkit: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
