// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "dispkit/inverses.hpp"
#include "dispkit/psym.hpp"
#include "dispkit/special.hpp"
#include "dispkit/structured.hpp"
#include "dispkit/suite.hpp"

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace dispkit;
using enum Displacement;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body)
{
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2d %-28s %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
}

SuiteReport suite(const char* name, std::size_t trials)
{
    SuiteOptions o;
    o.trials = trials;
    o.seed = kSeed;
    return run_suite(name, o);
}

std::string summary(const SuiteReport& r)
{
    std::ostringstream s;
    s << r.suite << ": " << r.trials << " trials, " << r.checks.size() << " checks, " << r.failures.size()
      << " failures";
    if (!r.failures.empty())
        s << " (first " << r.failures.front() << ")";
    return s.str();
}

/// All checks whose name starts with `prefix` hold (and at least one exists).
Outcome named_checks(const SuiteReport& r, const std::string& prefix)
{
    std::size_t seen = 0, bad = 0;
    std::string first_bad;
    for (const auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) {
            ++seen;
            if (!c.holds && bad++ == 0)
                first_bad = c.name + " lhs=" + std::to_string(c.lhs) + " rhs=" + std::to_string(c.rhs);
        }
    std::ostringstream s;
    s << prefix << "*: " << seen << " checks";
    if (bad)
        s << ", " << bad << " failed (" << first_bad << ")";
    return {seen > 0 && bad == 0, s.str()};
}

std::size_t float_drank(Displacement kind, const RealMatrix& a, const RealMatrix& z, const RealMatrix& n)
{
    return numerical_rank(kind == Nabla ? nabla(a, z, n) : delta(a, z, n), 1e-8).rank;
}

} // namespace

int main()
{
    const auto paper = suite("all-paper-examples", 1);
    const auto jr = reverse_identity<double>(5);
    const auto s5 = shift_matrix<double>(5);
    const auto zalt = alternating_shift<double>(5);

    criterion(1, "circulant example", [&] { return named_checks(paper, "circulant/"); });

    criterion(2, "alternate Toeplitz example", [&] {
        auto o = named_checks(paper, "alternate-toeplitz/");
        const auto ap = pinv(to_real(paper_example("alternate-toeplitz").matrix), 1e-8);
        const auto n = -transpose(zalt);
        const auto pn = float_drank(Nabla, ap, n, zalt);
        const auto pd = float_drank(Delta, ap, n, transpose(zalt));
        o.pass = o.pass && pn == 4 && pd == 4;
        o.detail += "; float pinv dN=" + std::to_string(pn) + " dD=" + std::to_string(pd);
        return o;
    });

    criterion(3, "rank-3 Toeplitz example", [&] {
        auto o = named_checks(paper, "rank3-toeplitz/");
        const auto tp = pinv(to_real(paper_example("rank3-toeplitz").matrix), 1e-8);
        const auto pn = float_drank(Nabla, tp, transpose(s5), s5);
        o.pass = o.pass && pn == 4;
        o.detail += "; float pinv dN[St,S]=" + std::to_string(pn);
        return o;
    });

    criterion(4, "structure bounds", [&] {
        const auto r = suite("structure-bounds", 500);
        return Outcome{r.passed(), summary(r)};
    });

    criterion(5, "inverse duality", [&] {
        const auto r = suite("inverse-duality", 500);
        return Outcome{r.passed(), summary(r)};
    });

    criterion(6, "product corollaries", [&] {
        const auto r = suite("products", 200);
        return Outcome{r.passed(), summary(r)};
    });

    criterion(7, "reconstruction", [&] {
        const auto r = suite("reconstruction", 200);
        return Outcome{r.passed(), summary(r)};
    });

    criterion(8, "Penrose conditions", [&] {
        const auto r = suite("penrose", 200);
        std::ostringstream s;
        s << summary(r) << "; max residual/scale " << r.observed.at("penrose/max-residual-over-scale")
          << ", max gap " << r.observed.at("penrose/max-uniqueness-gap");
        return Outcome{r.passed(), s.str()};
    });

    criterion(9, "kernel certificates", [&] {
        const auto alt = to_real(paper_example("alternate-toeplitz").matrix);
        const auto t3 = to_real(paper_example("rank3-toeplitz").matrix);
        const auto c1 = pinv_certificate(alt, jr, zalt, -transpose(zalt));
        const auto c2 = pinv_certificate(t3, jr, s5, transpose(s5));
        bool ok = true;
        std::ostringstream s;
        for (const auto* c : {&c1, &c2}) {
            const std::size_t w = 5 - c->delta;
            ok = ok && c->valid && c->e1.cols() == w && c->e2.cols() == w && c->rank_e1 == w &&
                 c->rank_e2 == w && c->residual <= 1e-9 * c->scale;
            s << "width " << w << " ranks " << c->rank_e1 << "," << c->rank_e2 << " residual/scale "
              << c->residual / c->scale << "; ";
        }
        return Outcome{ok, s.str()};
    });

    criterion(10, "pseudo-inverse bounds", [&] {
        const auto a = suite("pinv-psym", 200);
        const auto b = suite("rank-pinv", 200);
        const auto c = suite("pinv-ht", 200);
        const auto alt = paper_example("alternate-toeplitz").matrix;
        const auto t3 = paper_example("rank3-toeplitz").matrix;
        const auto j = reverse_identity<Rational>(5);
        const auto z = alternating_shift<Rational>(5);
        const auto s = shift_matrix<Rational>(5);
        const auto e1 = check_pinv_psym(alt, j, z, -transpose(z));
        const auto e2 = check_pinv_psym(t3, j, s, transpose(s));
        const bool tight = e1.holds && e2.holds && e1.lhs == e1.rhs && e2.lhs == e2.rhs;
        std::ostringstream d;
        d << a.failures.size() + b.failures.size() + c.failures.size() << " failures over "
          << a.checks.size() + b.checks.size() + c.checks.size() << " checks; equality cases " << e1.lhs
          << "<=" << e1.rhs << ", " << e2.lhs << "<=" << e2.rhs;
        return Outcome{a.passed() && b.passed() && c.passed() && tight, d.str()};
    });

    criterion(11, "rank oracle equivalence", [&] {
        const auto r = suite("rank-oracle", 1000);
        return Outcome{r.passed(), summary(r)};
    });

    criterion(12, "block Moore-Penrose lemma", [&] {
        const auto r = suite("block-mp", 100);
        std::ostringstream s;
        s << summary(r);
        for (const auto& [k, v] : r.observed)
            s << "; " << k << " " << v;
        return Outcome{r.passed(), s.str()};
    });

    std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
