// pgdlab — scenario runner and study harness for the kernel, closed-form,
// wave-fan, delta-shock, characteristics and Monte Carlo solvers.
//
// Subcommands:
//   run <scenario-file>     evaluate a scenario, write CSV + JSON manifest
//   compare <a> <b> --tol   per-column diff of two run CSVs
//   acceptance              run the full acceptance suite

#include "pgd/acceptance.hpp"
#include "pgd/errors.hpp"
#include "pgd/scenario.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

namespace {

int cmd_run(const std::string& scenario_path, const std::string& out_dir,
            std::uint64_t seed, bool seed_set, int threads) {
    pgd::cli::Scenario sc = pgd::cli::parse_scenario_file(scenario_path);
    if (!out_dir.empty()) sc.out_dir = out_dir;
    if (seed_set) sc.seed = seed;
    if (threads > 0) sc.threads = threads;
    const auto result = pgd::cli::run_scenario(sc);
    for (const auto& run : result.runs) {
        std::printf("wrote %s (%zu rows, %zu errors)", run.csv_path.c_str(),
                    run.rows, run.errors);
        if (run.max_dev_u_vs_fan)
            std::printf("  max|u-fan|=%.3e max|rho-fan|=%.3e",
                        *run.max_dev_u_vs_fan, *run.max_dev_rho_vs_fan);
        std::printf("\n");
    }
    std::printf("manifest: %s\n", result.manifest_path.c_str());
    return 0;
}

int cmd_compare(const std::string& a, const std::string& b, double tol) {
    const auto report = pgd::cli::compare_csv(a, b);
    std::printf("%zu rows compared\n", report.rows);
    for (const auto& col : report.columns)
        std::printf("  %-4s max|diff|=%.6e mean|diff|=%.6e\n", col.name.c_str(),
                    col.max_abs, col.mean_abs);
    if (report.within(tol)) {
        std::printf("OK: all columns within %.3e\n", tol);
        return 0;
    }
    std::printf("FAIL: worst diff %.6e exceeds %.3e\n", report.worst, tol);
    return 1;
}

int cmd_acceptance(const std::string& out_dir) {
    const auto results = pgd::acceptance::run_all(out_dir);
    for (const auto& r : results)
        std::printf("[%s] %2d %-55s %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str());
    const bool ok = pgd::acceptance::all_pass(results);
    std::printf("%s (%zu criteria)\n", ok ? "ALL PASS" : "FAILURES PRESENT",
                results.size());
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pressureless gas dynamics laboratory"};
    app.require_subcommand(1);

    std::string scenario_path, out_dir;
    std::uint64_t seed = 0;
    int threads = 0;
    double tol = 1e-12;
    std::string file_a, file_b;

    auto* run = app.add_subcommand("run", "evaluate a scenario file");
    run->add_option("scenario", scenario_path, "scenario file")->required();
    run->add_option("--out-dir", out_dir, "output directory")
        ->envname("PGDLAB_OUT_DIR");
    auto* seed_opt =
        run->add_option("--seed", seed, "RNG seed override")->envname("PGDLAB_SEED");
    run->add_option("--threads", threads, "worker threads (0 = hardware)")
        ->envname("PGDLAB_THREADS");

    auto* compare = app.add_subcommand("compare", "diff two run CSVs");
    compare->add_option("a", file_a, "first CSV")->required();
    compare->add_option("b", file_b, "second CSV")->required();
    compare->add_option("--tol", tol, "max allowed |difference|");

    auto* acceptance = app.add_subcommand("acceptance", "run the acceptance suite");
    acceptance->add_option("--out-dir", out_dir, "scratch directory")
        ->envname("PGDLAB_OUT_DIR");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(scenario_path, out_dir, seed, seed_opt->count() > 0,
                           threads);
        if (compare->parsed()) return cmd_compare(file_a, file_b, tol);
        if (acceptance->parsed())
            return cmd_acceptance(out_dir.empty() ? "acceptance_out" : out_dir);
    } catch (const pgd::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
