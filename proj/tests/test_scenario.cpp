#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgd/errors.hpp"
#include "pgd/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace pgd;
using namespace pgd::cli;

namespace {

const char* kFreeScenario = R"(# rarefaction limit study
[scenario]
name = rarefaction-limit
solver = free

[data]
f1 = 1
f2 = 1
u1 = 1
u2 = 1
x0 = 0

[grid]
t = 1
x_min = -0.5
x_max = 3.5
x_count = 41
)";

std::string scratch_dir(const std::string& leaf) {
    const auto dir = std::filesystem::temp_directory_path() / "pgdlab_tests" / leaf;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir.string();
}

std::vector<std::vector<std::string>> read_csv_rows(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("scenario text parses with defaults") {
    const Scenario sc = parse_scenario_text(kFreeScenario);
    CHECK(sc.name == "rarefaction-limit");
    CHECK(sc.solver == Solver::free_fan);
    REQUIRE(sc.riemann.has_value());
    CHECK(sc.riemann->u2 == 1.0);
    CHECK(sc.grid.x_count == 41);
    CHECK(sc.seed == 1);
}

TEST_CASE("config errors carry line and field diagnostics") {
    try {
        parse_scenario_text("[scenario]\nname = x\nbogus_key = 1\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        CHECK(e.field == "bogus_key");
    }

    // grid count 1 violates the invariant
    std::string bad = kFreeScenario;
    const auto pos = bad.find("x_count = 41");
    bad.replace(pos, 12, "x_count = 1");
    CHECK_THROWS_AS(parse_scenario_text(bad), ConfigError);

    CHECK_THROWS_AS(parse_scenario_text("[scenario]\nname = q\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_text("[nosuch]\na = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_text("[data]\nf1 = abc\n"), ConfigError);
}

TEST_CASE("named profiles exist and unknown names are rejected") {
    CHECK(named_profile("sine").u0(0.0) == 0.0);
    CHECK(named_profile("linear").u0(2.0) == -2.0);
    CHECK(named_profile("bump").f0_integrable);
    CHECK_THROWS_AS(named_profile("nope"), ConfigError);
}

TEST_CASE("free-fan run writes the rarefaction velocity profile") {
    Scenario sc = parse_scenario_text(kFreeScenario);
    sc.out_dir = scratch_dir("free_run");
    const auto result = run_scenario(sc);
    REQUIRE(result.runs.size() == 1);
    CHECK(result.runs[0].errors == 0);
    CHECK(*result.runs[0].max_dev_u_vs_fan == 0.0);

    const auto rows = read_csv_rows(result.runs[0].csv_path);
    REQUIRE(rows.size() == 42); // header + 41 points
    CHECK(rows[0][0] == "t");
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const double t = std::stod(rows[r][0]);
        const double x = std::stod(rows[r][1]);
        const double u = std::stod(rows[r][3]);
        const double xi = x / t;
        const double expected = xi < 1.0 ? 1.0 : (xi > 2.0 ? 2.0 : xi);
        CHECK(std::abs(u - expected) < 1e-15);
        CHECK(rows[r][5] == "limit");
    }
    CHECK(std::filesystem::exists(result.manifest_path));
    CHECK(slurp(result.manifest_path).find("\"solver\": \"free\"") != std::string::npos);
}

TEST_CASE("per-point solver failures land in the error column") {
    Scenario sc;
    sc.name = "breakdown";
    sc.solver = Solver::characteristics;
    sc.profile_name = "linear"; // breaks down at t* = 1
    sc.grid = {{0.5, 2.0}, -1.0, 1.0, 5};
    sc.out_dir = scratch_dir("char_run");
    const auto result = run_scenario(sc);
    REQUIRE(result.runs.size() == 1);
    CHECK(result.runs[0].errors == 5); // every t = 2 point
    const auto rows = read_csv_rows(result.runs[0].csv_path);
    std::size_t with_error = 0;
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r].size() >= 7 && !rows[r][6].empty()) ++with_error;
    CHECK(with_error == 5);
}

TEST_CASE("closed form and quadrature sweeps agree through compare") {
    const std::string dir = scratch_dir("cmp");
    Scenario quad;
    quad.name = "cmp";
    quad.solver = Solver::quadrature;
    quad.riemann = RiemannData{1.0, 1.0, 0.0, -1.0, 0.0};
    quad.eps = 0.1;
    quad.sigma_default = 0.05;
    quad.grid = {{1.0}, -2.0, 1.0, 21};
    quad.out_dir = dir + "/q";
    const auto run_q = run_scenario(quad);

    Scenario cf = quad;
    cf.solver = Solver::closed_form;
    cf.out_dir = dir + "/c";
    const auto run_c = run_scenario(cf);

    // identical files: all-zero diff
    const auto self = compare_csv(run_q.runs[0].csv_path, run_q.runs[0].csv_path);
    CHECK(self.worst == 0.0);
    CHECK(self.within(0.0));

    const auto report = compare_csv(run_q.runs[0].csv_path, run_c.runs[0].csv_path);
    CHECK(report.within(1e-6));

    // by design the models differ on overlap data
    Scenario sticky = quad;
    sticky.solver = Solver::sticky;
    sticky.out_dir = dir + "/s";
    const auto run_s = run_scenario(sticky);
    const auto diff = compare_csv(run_q.runs[0].csv_path, run_s.runs[0].csv_path);
    CHECK(!diff.within(0.1));

    // grid mismatch is structural
    Scenario other = quad;
    other.grid.x_count = 11;
    other.out_dir = dir + "/g";
    const auto run_g = run_scenario(other);
    CHECK_THROWS_AS(compare_csv(run_q.runs[0].csv_path, run_g.runs[0].csv_path),
                    ConfigError);
}

TEST_CASE("sigma sweeps report shrinking fan deviation in the summary") {
    Scenario sc;
    sc.name = "sweep";
    sc.solver = Solver::quadrature;
    sc.riemann = RiemannData{1.0, 1.0, 0.0, -1.0, 0.0};
    sc.eps = 1e-4;
    sc.sweep.sigma = {0.1, 0.03, 0.01};
    sc.grid = {{1.0}, -2.5, 1.5, 41};
    sc.out_dir = scratch_dir("sweep");
    const auto result = run_scenario(sc);
    REQUIRE(result.runs.size() == 3);
    REQUIRE(result.runs[0].max_dev_u_vs_fan.has_value());
    CHECK(*result.runs[0].max_dev_u_vs_fan > *result.runs[1].max_dev_u_vs_fan);
    CHECK(*result.runs[1].max_dev_u_vs_fan > *result.runs[2].max_dev_u_vs_fan);
}

TEST_CASE("reruns and thread counts do not change the bytes") {
    Scenario sc;
    sc.name = "det";
    sc.solver = Solver::montecarlo;
    sc.riemann = RiemannData{1.0, 1.0, 0.0, -1.0, 0.0};
    sc.mc = {20000, 0.05};
    sc.sigma_default = 0.05;
    sc.grid = {{1.0}, -1.5, 1.0, 11};
    sc.seed = 99;

    sc.out_dir = scratch_dir("det_a");
    sc.threads = 1;
    const auto a = run_scenario(sc);
    sc.out_dir = scratch_dir("det_b");
    sc.threads = 3;
    const auto b = run_scenario(sc);
    CHECK(slurp(a.runs[0].csv_path) == slurp(b.runs[0].csv_path));
}

TEST_CASE("sticky solver delegates to the fan for u2 >= 0") {
    Scenario sc;
    sc.name = "delegate";
    sc.solver = Solver::sticky;
    sc.riemann = RiemannData{1.0, 1.0, 1.0, 1.0, 0.0};
    sc.grid = {{1.0}, 0.0, 3.0, 13};
    sc.out_dir = scratch_dir("delegate");
    const auto result = run_scenario(sc);
    CHECK(result.runs[0].errors == 0);
    CHECK(*result.runs[0].max_dev_u_vs_fan == 0.0);
}
