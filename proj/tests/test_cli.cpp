#include "dispkit/matrix_io.hpp"
#include "dispkit/structured.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

using namespace dispkit;
namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / "dispkit_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

/// Runs the CLI through the shell; stdout is captured, stderr is discarded.
Run run(const std::string& args, const std::string& env = {})
{
    const auto out = scratch("stdout.txt");
    const std::string cmd = env + " \"" DISPKIT_CLI_PATH "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    Run r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("gen then drank")
{
    const auto f = scratch("t3.mat");
    REQUIRE(run("gen --spec paper:rank3-toeplitz --out " + q(f)).status == 0);
    CHECK(read_matrix_file(f) == paper_example("rank3-toeplitz").matrix);
    const auto r = run("drank --in " + q(f) + " --pattern nabla:S,St");
    CHECK(r.status == 0);
    CHECK(r.out == "dN[S,St] = 2\n");

    const auto j = run("drank --in " + q(f) + " --pattern nabla:S,St --json");
    REQUIRE(j.status == 0);
    CHECK(nlohmann::json::parse(j.out).at("displacement_rank").at("rank") == 2);
}

TEST_CASE("verify suites")
{
    const auto r = run("verify --suite all-paper-examples --json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("passed") == true);
    CHECK(j.at("suite") == "all-paper-examples");

    const auto s = run("verify --suite structure-bounds --trials 10 --seed 3 --json");
    CHECK(s.status == 0);
    CHECK(s.out == run("verify --suite structure-bounds --trials 10 --seed 3 --json --serial").out);
    CHECK(s.out == run("verify --suite structure-bounds --trials 10 --json", "DISPKIT_SEED=3").out);

    CHECK(run("verify --suite nonsense").status == 2);
    CHECK(run("verify --list").out.find("rank-oracle") != std::string::npos);
}

TEST_CASE("pinv residuals")
{
    const auto f = scratch("h.mat");
    write_matrix_file(f, rank_deficient_hankel(6, 3, 11));
    const auto r = run("pinv --in " + q(f) + " --json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("is_moore_penrose") == true);
    CHECK(j.at("rank").at("rank") == 3);
    const double scale = j.at("penrose").at("scale");
    for (const char* k : {"r1", "r2", "r3", "r4"})
        CHECK(j.at("penrose").at(k).get<double>() <= 1e-9 * scale);
    CHECK(run("pinv --in " + q(f) + " --backend exact").status == 2);
}

TEST_CASE("certify")
{
    const auto f = scratch("alt.mat");
    REQUIRE(run("gen --spec paper:alternate-toeplitz --out " + q(f)).status == 0);
    const auto r = run("certify --in " + q(f) + " --pattern nabla:Zalt,-ZaltT --json");
    REQUIRE(r.status == 0);
    CHECK(nlohmann::json::parse(r.out).at("valid") == true);
}

TEST_CASE("input errors exit with status 2")
{
    CHECK(run("drank --in /nonexistent/x.mat --pattern nabla:S,St").status == 2);
    const auto bad = scratch("bad.mat");
    std::ofstream(bad) << "2 2\n1 2\n3 oops\n";
    CHECK(run("drank --in " + q(bad) + " --pattern nabla:S,St").status == 2);
    const auto ok = scratch("ok.mat");
    write_matrix_file(ok, RationalMatrix{{1, 2}, {3, 4}});
    CHECK(run("drank --in " + q(ok) + " --pattern nabla:Q,St").status == 2);
    CHECK(run("drank --in " + q(ok)).status == 2);
    CHECK(run("gen --spec wavelet:3").status == 2);
    CHECK(run("gen --spec toeplitz:4", "DISPKIT_SEED=abc").status == 2);
}

TEST_CASE("gen honours DISPKIT_SEED")
{
    const auto a = run("gen --spec toeplitz:5", "DISPKIT_SEED=9");
    const auto b = run("gen --spec toeplitz:5 --seed 9");
    const auto c = run("gen --spec toeplitz:5 --seed 10");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK(parse_matrix(a.out) == generate_from_spec("toeplitz:5", 9));
}

TEST_CASE("reconstruct round trip")
{
    const auto f = scratch("dense.mat");
    const auto d = scratch("disp.mat");
    REQUIRE(run("gen --spec dense:5,5 --seed 4 --out " + q(f)).status == 0);
    REQUIRE(run("displace --in " + q(f) + " --pattern nabla:S,St --out " + q(d)).status == 0);
    const auto r = run("reconstruct --in " + q(d) + " --pattern nabla:S,St");
    REQUIRE(r.status == 0);
    CHECK(parse_matrix(r.out) == read_matrix_file(f));
}

} // TEST_SUITE
