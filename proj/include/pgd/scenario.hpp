#pragma once

#include "pgd/model.hpp"
#include "pgd/quadrature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pgd::cli {

enum class Solver { quadrature, closed_form, free_fan, sticky, characteristics, montecarlo };

const char* to_string(Solver s);

struct GridSpec {
    std::vector<double> t_values;
    double x_min = -1.0;
    double x_max = 1.0;
    int x_count = 0;
};

/// Sweep lists; empty lists fall back to the scenario-level defaults.
struct SweepSpec {
    std::vector<double> sigma;
    std::vector<double> eps;
    std::vector<std::size_t> n;
};

struct McSpec {
    std::size_t n = 100000;
    double bandwidth = 0.02;
};

/// Parsed scenario file. Initial data is either Riemann data (plus optional
/// smoothing eps) or a named smooth profile.
struct Scenario {
    std::string name;
    Solver solver = Solver::free_fan;
    std::optional<RiemannData> riemann;
    std::optional<double> eps;
    std::string profile_name;
    GridSpec grid;
    SweepSpec sweep;
    McSpec mc;
    quadrature::QuadratureSpec quad;
    double sigma_default = 0.05;
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    int threads = 0; ///< 0 = hardware concurrency

    void validate() const;
};

/// Named smooth profiles available to scenarios and tests.
SampledProfile named_profile(const std::string& name);

Scenario parse_scenario_text(const std::string& text);
Scenario parse_scenario_file(const std::string& path);

struct RunSummary {
    double sigma = 0.0;
    double eps = 0.0;
    std::size_t n = 0;
    std::string csv_path;
    std::size_t rows = 0;
    std::size_t errors = 0;
    /// deviation from the limit wave fan at points clear of the loci;
    /// present only for Riemann data
    std::optional<double> max_dev_u_vs_fan;
    std::optional<double> max_dev_rho_vs_fan;
};

struct RunResult {
    std::vector<RunSummary> runs;
    std::string manifest_path;
};

/// Evaluates the selected solver over the grid for every sweep point,
/// writing one CSV per sweep point plus a JSON manifest. Deterministic for
/// a given scenario and seed, regardless of thread count. Per-point solver
/// failures land in the CSV `error` column and the run continues.
RunResult run_scenario(const Scenario& scenario);

struct ColumnDiff {
    std::string name;
    double max_abs = 0.0;
    double mean_abs = 0.0;
};

struct CompareReport {
    std::vector<ColumnDiff> columns;
    std::size_t rows = 0;
    double worst = 0.0;

    bool within(double tol) const { return worst <= tol; }
};

/// Per-column absolute differences of two run CSVs. Throws ConfigError if
/// the (t, x) grids or layouts do not match.
CompareReport compare_csv(const std::string& path_a, const std::string& path_b);

} // namespace pgd::cli
