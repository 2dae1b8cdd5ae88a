#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <rdsim/io.hpp>

using namespace rdsim;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("rdsim_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("doubles are formatted as shortest round-trip decimals") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(0.0) == "0");
    for (double v : {1.0 / 3.0, 6.02e23, -1.6e-19, 3.141592653589793, 1e300}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("numeric field CSV has the documented schema") {
    TempDir tmp;
    Grid1D grid(-1.0, 1.0, 16);
    NumericField field{grid, 1.0, std::vector<double>(grid.n_nodes(), 0.5)};
    const std::string path = tmp.file("field.csv");
    write_field_csv(path, field);

    const std::string body = slurp(path);
    CHECK(body.find('\r') == std::string::npos); // LF endings only
    std::istringstream lines(body);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "x,W");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == grid.n_nodes());
}

TEST_CASE("profile CSV carries one column per time") {
    TempDir tmp;
    const std::string path = tmp.file("profile.csv");
    write_profile_csv(path, {0.0, 0.5, 1.0}, {1.0, 2.0},
                      [](double x, double t) { return x * t; });
    const std::string body = slurp(path);
    std::istringstream lines(body);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "x,t=1,t=2");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "0,0,0");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "0.5,0.5,1");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "1,1,2");
}

TEST_CASE("identical inputs produce byte-identical files") {
    TempDir tmp;
    auto value = [](double x, double t) { return std::sin(x) * t + 1.0 / 3.0; };
    std::vector<double> xs;
    for (int i = 0; i <= 100; ++i) xs.push_back(-3.0 + 0.06 * i);
    write_profile_csv(tmp.file("a.csv"), xs, {0.05, 1.25}, value);
    write_profile_csv(tmp.file("b.csv"), xs, {0.05, 1.25}, value);
    CHECK(slurp(tmp.file("a.csv")) == slurp(tmp.file("b.csv")));
}

TEST_CASE("report serializers pin their key sets and order") {
    ResidualReport rr;
    rr.max_abs = 1e-9;
    rr.l2 = 1e-10;
    rr.n_samples = 300;
    rr.method = "analytic-derivative";
    rr.skipped = 2;
    auto key_order = [](const json& j) {
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
        return keys;
    };
    CHECK(key_order(to_json(rr)) ==
          std::vector<std::string>{"max_abs", "l2", "n_samples", "method", "skipped"});

    ConservationReport cr;
    CHECK(key_order(to_json(cr)) ==
          std::vector<std::string>{"times", "N_values", "fitted_exponent", "expected_exponent",
                                   "identity_lhs", "identity_rhs", "defect"});

    ComparisonReport pr;
    CHECK(key_order(to_json(pr)) ==
          std::vector<std::string>{"l2_relative", "max_abs_error", "t_end", "mass_numeric",
                                   "mass_analytic"});
}

TEST_CASE("run manifest serializes every field") {
    RunManifest m;
    m.command = "figure";
    m.system = "NFP-GAUSS";
    m.parameters = {{"alpha", 0.6}, {"C", 1.0}};
    m.config = json{{"which", 1}};
    m.outputs = {"fig1_D.csv", "fig1_f.csv", "fig1_W.csv"};
    m.duration_seconds = 0.25;
    m.verdicts = {{"spot", "pass"}};

    const json j = to_json(m);
    CHECK(j["command"] == "figure");
    CHECK(j["system"] == "NFP-GAUSS");
    CHECK(j["parameters"]["alpha"] == 0.6);
    CHECK(j["outputs"].size() == 3);
    CHECK(j["verdicts"]["spot"] == "pass");

    // pretty printing is stable
    CHECK(j.dump(2) == to_json(m).dump(2));
}

TEST_CASE("unwritable paths raise the library error type") {
    CHECK_THROWS_AS(write_text_file("/nonexistent-dir/twelve/file.txt", "x"), Error);
}
