#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr interleaved
};

std::string cli_path() {
    const char* bin = std::getenv("RDSIM_BIN");
    REQUIRE(bin != nullptr);
    return bin;
}

// Run the CLI with the given argument string; capture combined output.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + "'" + cli_path() + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("rdsim_cli_test_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

// Split one CSV line on commas.
std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else cur += c;
    }
    out.push_back(cur);
    return out;
}

} // namespace

TEST_CASE("list prints the whole catalog") {
    const auto r = run_cli("list");
    CHECK(r.exit_code == 0);
    for (const char* name : {"FP-GAUSS", "NFP-GAUSS", "NFP-EXP", "NFP-QUAD", "NL-DIFF",
                             "GR-GAUSS", "GR-HALF", "GR-Q1", "GR-Q2", "FISHER-N"})
        CHECK(r.output.find(name) != std::string::npos);

    const auto j = run_cli("list --json");
    CHECK(j.exit_code == 0);
    const auto arr = nlohmann::json::parse(j.output);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 10);
    CHECK(arr[0].contains("name"));
    CHECK(arr[0].contains("constraint_note"));
}

TEST_CASE("family filter splits five and five") {
    const auto c = run_cli("list --json --family conserving");
    REQUIRE(c.exit_code == 0);
    CHECK(nlohmann::json::parse(c.output).size() == 5);
    const auto g = run_cli("list --json --family growth");
    REQUIRE(g.exit_code == 0);
    CHECK(nlohmann::json::parse(g.output).size() == 5);
    CHECK(run_cli("list --family nonsense").exit_code == 2);
}

TEST_CASE("verify passes the documented figure parameter set") {
    const auto r = run_cli("verify NFP-GAUSS alpha=0.6 gamma=2 eta=0.1 C=1 --checks all");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify rejects a constraint violation with exit 2") {
    const auto r = run_cli("verify NFP-EXP alpha=0.6 eta=0.5 C=0");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("1/|alpha - eta|") != std::string::npos);
}

TEST_CASE("verify warns about anti-parabolic coefficients but checks residuals") {
    const auto r = run_cli("verify GR-Q1 alpha=1 mu=0.5 --checks pde");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("negative diffusion coefficient") != std::string::npos);
}

TEST_CASE("verify usage errors exit 2") {
    CHECK(run_cli("verify NO-SUCH-SYSTEM").exit_code == 2);
    CHECK(run_cli("verify FP-GAUSS --checks bogus").exit_code == 2);
    CHECK(run_cli("verify FP-GAUSS alpha").exit_code == 2);
    CHECK(run_cli("verify FP-GAUSS alpha=abc").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
}

TEST_CASE("verify reports a numerical failure with exit 1") {
    const auto r = run_cli("verify FP-GAUSS --checks ode --tol-ode 1e-30");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("ode") != std::string::npos);
    CHECK(r.output.find("FAIL") != std::string::npos);
}

TEST_CASE("verify switches to the windowed identity for the divergent front") {
    const auto r = run_cli("verify FISHER-N --checks conservation");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("divergent total number") != std::string::npos);
}

TEST_CASE("verify emits machine-readable reports on request") {
    const auto r = run_cli("verify GR-HALF --checks identity,scale --json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["system"] == "GR-HALF");
    CHECK(j["verdict"] == "pass");
    CHECK(j["checks"]["identity"]["verdict"] == "pass");
    CHECK(j["checks"]["identity"].contains("defect"));
    CHECK(j["checks"]["scale"]["verdict"] == "pass");
}

TEST_CASE("simulate refuses anti-parabolic systems with exit 2") {
    const auto r = run_cli("simulate GR-Q1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("anti-parabolic system not integrable") != std::string::npos);
    CHECK(run_cli("simulate GR-Q2").exit_code == 2);
}

TEST_CASE("simulate writes fields, comparison, and manifest") {
    TempDir tmp;
    const auto r = run_cli("simulate FP-GAUSS --t1 1.1 --n 200 --dt 5e-3 --out-dir " +
                           tmp.path.string());
    REQUIRE(r.exit_code == 0);

    const auto manifest =
        nlohmann::json::parse(slurp(tmp.path / "FP-GAUSS_manifest.json"));
    CHECK(manifest["command"] == "simulate");
    for (const auto& out : manifest["outputs"]) {
        CHECK(fs::exists(out.get<std::string>()));
    }

    const auto cmp = nlohmann::json::parse(slurp(tmp.path / "FP-GAUSS_comparison.json"));
    CHECK(cmp["l2_relative"].get<double>() < 1e-2);
    CHECK(cmp["t_end"].get<double>() == Catch::Approx(1.1));

    const std::string csv = slurp(tmp.path / "FP-GAUSS_final.csv");
    CHECK(csv.rfind("x,W\n", 0) == 0);
}

TEST_CASE("simulate honors the failure threshold with exit 1") {
    TempDir tmp;
    // a deliberately impossible accuracy demand on an otherwise good run
    const auto r = run_cli("simulate FP-GAUSS --t1 1.05 --n 100 --dt 1e-2 --tol 1e-12 --out-dir " +
                           tmp.path.string());
    CHECK(r.exit_code == 1);
}

TEST_CASE("figure emits three csv files with the documented spot values") {
    TempDir tmp;
    const auto r = run_cli("figure 1 --out-dir " + tmp.path.string());
    REQUIRE(r.exit_code == 0);
    for (const char* stem : {"fig1_D.csv", "fig1_f.csv", "fig1_W.csv", "fig1_manifest.json"})
        CHECK(fs::exists(tmp.path / stem));

    // W(x=0, t=1) = 11 in the first value column
    std::istringstream lines(slurp(tmp.path / "fig1_W.csv"));
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "x,t=1,t=2,t=3");
    bool found_zero = false;
    while (std::getline(lines, line)) {
        const auto f = fields(line);
        REQUIRE(f.size() == 4);
        if (f[0] == "0") {
            found_zero = true;
            CHECK(std::stod(f[1]) == Catch::Approx(11.0).epsilon(1e-12));
        }
    }
    CHECK(found_zero);
}

TEST_CASE("figure data is byte-deterministic") {
    TempDir tmp;
    REQUIRE(run_cli("figure 3 --out-dir " + (tmp.path / "a").string()).exit_code == 0);
    REQUIRE(run_cli("figure 3 --out-dir " + (tmp.path / "b").string()).exit_code == 0);
    for (const char* name : {"fig3_D.csv", "fig3_f.csv", "fig3_W.csv"})
        CHECK(slurp(tmp.path / "a" / name) == slurp(tmp.path / "b" / name));
}

TEST_CASE("figure index is range-checked") {
    CHECK(run_cli("figure 5").exit_code == 2);
    CHECK(run_cli("figure 0").exit_code == 2);
    CHECK(run_cli("figure").exit_code == 2);
}

TEST_CASE("RD_OUT_DIR provides the default output directory") {
    TempDir tmp;
    const auto r = run_cli("figure 2", "RD_OUT_DIR='" + tmp.path.string() + "' ");
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(tmp.path / "fig2_W.csv"));
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("verify --help").exit_code == 0);
    // no subcommand is a usage error
    CHECK(run_cli("").exit_code == 2);
}
