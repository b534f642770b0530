#include "pgd/acceptance.hpp"

#include "pgd/characteristics.hpp"
#include "pgd/closed_form.hpp"
#include "pgd/errors.hpp"
#include "pgd/exact_fields.hpp"
#include "pgd/hugoniot.hpp"
#include "pgd/montecarlo.hpp"
#include "pgd/riemann_free.hpp"
#include "pgd/riemann_sticky.hpp"
#include "pgd/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

namespace pgd::acceptance {

namespace {

using exact_fields::QuadratureSpec;

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

CriterionResult make_result(int id, const char* name) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    return r;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

CriterionResult rarefaction_reproduction() {
    CriterionResult r = make_result(1, "rarefaction reproduction (quadrature vs fan, u2>0)");
    const RiemannData data{1.0, 1.0, 1.0, 1.0, 0.0};
    const double sigma = 1e-3, eps = 1e-4, t = 1.0;
    const auto profile = make_smoothed_profile({data, eps});
    const auto fan = riemann_free::solve_free(data);
    QuadratureSpec spec;

    double worst_u = 0.0, worst_rho = 0.0;
    int checked = 0;
    try {
        for (double x : linspace(0.3, 2.7, 50)) {
            if (std::abs(x - 1.0) <= 10.0 * sigma || std::abs(x - 2.0) <= 10.0 * sigma)
                continue;
            ++checked;
            const double u = exact_fields::velocity_uhat(profile, sigma, t, x, spec);
            const double ref = riemann_free::eval_wavefan(fan, t, x).u;
            worst_u = std::max(worst_u, std::abs(u - ref));
            if (x > 1.0 + 10.0 * sigma && x < 2.0 - 10.0 * sigma) {
                const double rho = exact_fields::density_rho(profile, sigma, t, x, spec);
                worst_rho = std::max(worst_rho, rho);
            }
        }
    } catch (const std::exception& e) {
        r.detail = e.what();
        return r;
    }
    r.pass = checked == 50 && worst_u < 5e-2 && worst_rho < 5e-2;
    r.detail = "points=" + std::to_string(checked) + " max|u-fan|=" + fmt(worst_u) +
               " max rho in fan=" + fmt(worst_rho);
    return r;
}

CriterionResult overlap_reproduction() {
    CriterionResult r = make_result(2, "overlap reproduction (quadrature vs fan, u2<0)");
    const RiemannData data{1.0, 1.0, 0.0, -1.0, 0.0};
    const double sigma = 1e-3, eps = 1e-4, t = 1.0;
    const auto profile = make_smoothed_profile({data, eps});
    QuadratureSpec spec;

    double worst = 0.0;
    auto check = [&](double x, double rho_ref, double u_ref) {
        const double rho = exact_fields::density_rho(profile, sigma, t, x, spec);
        const double u = exact_fields::velocity_uhat(profile, sigma, t, x, spec);
        worst = std::max({worst, std::abs(rho - rho_ref), std::abs(u - u_ref)});
    };
    try {
        for (double x : linspace(-0.95, -0.05, 10)) check(x, 3.0, -2.0 / 3.0);
        for (double x : linspace(-2.0, -1.1, 5)) check(x, 1.0, 0.0);
        for (double x : linspace(0.1, 1.0, 5)) check(x, 2.0, -1.0);
    } catch (const std::exception& e) {
        r.detail = e.what();
        return r;
    }
    r.pass = worst < 5e-2;
    r.detail = "max deviation=" + fmt(worst);
    return r;
}

CriterionResult spurious_pressure_theorem() {
    CriterionResult r = make_result(3, "Hugoniot balance with spurious pressure (Theorem embodiment)");
    const auto fan = riemann_free::solve_free({1.0, 1.0, 0.0, -1.0, 0.0});
    const auto report = hugoniot::check_fan(fan);
    bool ok = report.rows.size() == 2;
    double worst_mass = 0.0, worst_with_p = 0.0, min_no_p = 1e300;
    for (const auto& row : report.rows) {
        worst_mass = std::max(worst_mass, row.mass_rel);
        worst_with_p = std::max(worst_with_p, row.momentum_with_p_rel);
        min_no_p = std::min(min_no_p, std::abs(row.raw.momentum_no_p));
    }
    ok = ok && worst_mass < 1e-12 && worst_with_p < 1e-12 && min_no_p >= 0.1;
    r.pass = ok && report.pass;
    r.detail = "mass_rel=" + fmt(worst_mass) + " with_p_rel=" + fmt(worst_with_p) +
               " min|no_p|=" + fmt(min_no_p);
    return r;
}

CriterionResult moment_flux_concentration() {
    CriterionResult r = make_result(4, "R-flux jump converges to the pressure jump 2/3");
    const RiemannData data{1.0, 1.0, 0.0, -1.0, 0.0};
    const double t = 1.0;
    const auto profile = make_riemann_profile(data);
    const double expected = 2.0 / 3.0;
    QuadratureSpec spec;

    std::string detail;
    bool ok = true;
    for (double locus : {-1.0, 0.0}) {
        std::vector<double> errs;
        for (double sigma : {0.03, 0.01, 0.003}) {
            const double hi = exact_fields::second_moment_R(profile, sigma, t,
                                                            locus + 0.1, spec);
            const double lo = exact_fields::second_moment_R(profile, sigma, t,
                                                            locus - 0.1, spec);
            errs.push_back(std::abs(std::abs(hi - lo) - expected));
        }
        // non-strict decrease: tiny quadrature noise may tie at the floor
        const bool monotone = errs[0] >= errs[1] - 1e-8 && errs[1] >= errs[2] - 1e-8;
        ok = ok && monotone && errs.back() < 5e-2;
        detail += "locus " + fmt(locus) + ": errs " + fmt(errs[0]) + "," +
                  fmt(errs[1]) + "," + fmt(errs[2]) + "; ";
    }
    r.pass = ok;
    r.detail = detail;
    return r;
}

CriterionResult sticky_shock() {
    CriterionResult r = make_result(5, "delta-shock speed, root admissibility, jump ODE");
    const auto sol = riemann_sticky::solve_sticky({1.0, 1.0, 0.0, -1.0, 0.0});
    const double expected = -2.0 + std::sqrt(2.0);
    bool ok = std::abs(sol.speed - expected) < 1e-12;

    const std::vector<double> grid{0.25, 0.5, 1.0, 2.0, 4.0};
    const double ode_res = riemann_sticky::verify_jump_ode(sol, grid);
    ok = ok && ode_res < 1e-12;

    std::mt19937_64 gen(20240811ULL);
    std::uniform_real_distribution<double> uf1(0.1, 3.0);
    std::uniform_real_distribution<double> uu(-2.0, 2.0);
    std::uniform_real_distribution<double> uneg(-2.0, -0.01);
    int bad = 0;
    for (int k = 0; k < 10000; ++k) {
        RiemannData d;
        d.f1 = uf1(gen);
        std::uniform_real_distribution<double> uf2(-0.9 * d.f1, 3.0);
        d.f2 = uf2(gen);
        d.u1 = uu(gen);
        d.u2 = uneg(gen);
        const auto j = riemann_sticky::jump_brackets(d);
        if (j.f == 0.0) continue;
        const double disc = j.uf * j.uf - j.f * j.u2f;
        if (disc < 0.0) { ++bad; continue; }
        const double sq = std::sqrt(disc);
        const int admissible =
            (riemann_sticky::check_lax(d, (j.uf + sq) / j.f) ? 1 : 0) +
            (riemann_sticky::check_lax(d, (j.uf - sq) / j.f) ? 1 : 0);
        if (admissible != 1) ++bad;
        const auto s = riemann_sticky::solve_sticky(d);
        if (riemann_sticky::verify_jump_ode(s, grid) > 1e-9 * (1.0 + std::abs(j.u2f)))
            ++bad;
    }
    ok = ok && bad == 0;
    r.pass = ok;
    r.detail = "speed err=" + fmt(std::abs(sol.speed - expected)) +
               " ode res=" + fmt(ode_res) + " bad draws=" + std::to_string(bad);
    return r;
}

CriterionResult burgers_specialization() {
    CriterionResult r = make_result(6, "Burgers shock speed (f2=0) and rarefaction");
    const auto sol = riemann_sticky::solve_sticky({1.0, 0.0, 1.0, -1.0, 0.0});
    bool ok = std::abs(sol.speed - 0.5) < 1e-12;

    const auto fan = riemann_free::solve_free({1.0, 0.0, 1.0, 1.0, 0.0});
    double worst = 0.0;
    for (double t : {0.5, 1.0, 2.0}) {
        for (double x : linspace(-1.0, 5.0, 41)) {
            const double xi = x / t;
            const double ref = xi < 1.0 ? 1.0 : (xi > 2.0 ? 2.0 : xi);
            worst = std::max(worst,
                             std::abs(riemann_free::eval_wavefan(fan, t, x).u - ref));
        }
    }
    ok = ok && worst == 0.0;
    r.pass = ok;
    r.detail = "speed err=" + fmt(std::abs(sol.speed - 0.5)) +
               " rarefaction dev=" + fmt(worst);
    return r;
}

CriterionResult proposition1_convergence() {
    CriterionResult r = make_result(7, "sigma->0 convergence to the classical solution (sin)");
    const auto profile = cli::named_profile("sine");
    const double t = 0.5, L = 50.0;
    QuadratureSpec spec;
    const auto xs = linspace(-2.0, 2.0, 10);

    std::vector<double> errs;
    try {
        for (double sigma : {0.3, 0.1, 0.03, 0.01}) {
            double worst = 0.0;
            for (double x : xs) {
                const double u =
                    exact_fields::velocity_uhat_bounded(profile, sigma, t, x, L, spec);
                const double ref = characteristics::classical_solution(profile, t, x);
                worst = std::max(worst, std::abs(u - ref));
            }
            errs.push_back(worst);
        }
    } catch (const std::exception& e) {
        r.detail = e.what();
        return r;
    }
    bool monotone = true;
    for (std::size_t i = 1; i < errs.size(); ++i)
        monotone = monotone && errs[i] <= errs[i - 1];
    r.pass = monotone && errs.back() < 1e-2;
    r.detail = "errors " + fmt(errs[0]) + " > " + fmt(errs[1]) + " > " +
               fmt(errs[2]) + " > " + fmt(errs[3]);
    return r;
}

CriterionResult proposition2_smoothing_independence() {
    CriterionResult r = make_result(8, "smoothing independence of the double limit");
    const RiemannData data{1.0, 1.0, 1.0, -1.0, 0.0};
    QuadratureSpec spec;

    // endpoint of the (sigma, eps) sweep toward the double limit
    const double sigma = 1e-3, eps = 1e-4;
    double worst = 0.0;
    try {
        const auto linear = make_smoothed_profile({data, eps});
        const auto tanh_pr = make_tanh_profile(data, eps);
        for (double x : linspace(-2.0, 2.5, 20)) {
            if (std::abs(x - 0.0) < 0.15 || std::abs(x - 1.0) < 0.15) continue;
            const double u_lin = exact_fields::velocity_uhat(linear, sigma, 1.0, x, spec);
            const double u_tanh = exact_fields::velocity_uhat(tanh_pr, sigma, 1.0, x, spec);
            const double rho_lin = exact_fields::density_rho(linear, sigma, 1.0, x, spec);
            const double rho_tanh = exact_fields::density_rho(tanh_pr, sigma, 1.0, x, spec);
            worst = std::max(
                {worst, std::abs(u_lin - u_tanh), std::abs(rho_lin - rho_tanh)});
        }
    } catch (const std::exception& e) {
        r.detail = e.what();
        return r;
    }
    r.pass = worst < 1e-3;
    r.detail = "max |linear - tanh| = " + fmt(worst);
    return r;
}

CriterionResult moment_system_consistency() {
    CriterionResult r = make_result(9, "moment-system residuals are second order in h");
    const SmoothedRiemannData data{{1.0, 1.0, 1.0, -1.0, 0.0}, 0.1};
    const auto profile = make_smoothed_profile(data);
    const double sigma = 0.5, t = 1.0;
    QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    spec.abs_tol = 1e-14;

    bool ok = true;
    std::string detail;
    for (double x : {-0.3, 0.1, 0.35, 0.75, 1.2}) {
        const auto coarse = exact_fields::moment_residuals(profile, sigma, t, x, spec, 0.02);
        const auto fine = exact_fields::moment_residuals(profile, sigma, t, x, spec, 0.01);
        const double rc = fine.first > 1e-13 ? coarse.first / fine.first : 4.0;
        const double rm = fine.second > 1e-13 ? coarse.second / fine.second : 4.0;
        ok = ok && rc >= 3.5 && rm >= 3.5;
        detail += fmt(rc) + "/" + fmt(rm) + " ";
    }
    r.pass = ok;
    r.detail = "ratios (cont/mom): " + detail;
    return r;
}

CriterionResult montecarlo_cross_validation() {
    CriterionResult r = make_result(10, "Monte Carlo vs quadrature within 3 bootstrap SE");
    const double sigma = 0.05, t = 1.0, h = 0.02;
    const std::size_t n = 1000000;
    const std::uint64_t seed = 424242;
    QuadratureSpec spec;

    struct Case {
        RiemannData data;
        std::vector<double> points;
    };
    const std::vector<Case> cases{
        {{1.0, 1.0, 1.0, 1.0, 0.0},
         {0.2, 0.35, 0.5, 0.65, 0.8, 2.2, 2.35, 2.5, 2.65, 2.8}},
        {{1.0, 1.0, 0.0, -1.0, 0.0},
         {-1.6, -1.3, -0.8, -0.6, -0.4, -0.2, 0.3, 0.6, 0.9, 1.2}}};

    bool ok = true;
    std::string detail;
    try {
        for (const Case& c : cases) {
            const auto profile = make_riemann_profile(c.data);
            const auto ens = montecarlo::simulate(profile, sigma, t, n, seed);
            int good_u = 0, good_rho = 0;
            for (double x : c.points) {
                const double u_mc = montecarlo::estimate_uhat(ens, x, h);
                const double u_se = montecarlo::estimate_uhat_se(ens, x, h);
                const double u_q = exact_fields::velocity_uhat(profile, sigma, t, x, spec);
                if (std::abs(u_mc - u_q) <= 3.0 * u_se + 1e-9) ++good_u;

                const double rho_mc = montecarlo::estimate_rho(ens, x, h);
                const double rho_se = montecarlo::estimate_rho_se(ens, x, h);
                const double rho_q = exact_fields::density_rho(profile, sigma, t, x, spec);
                if (std::abs(rho_mc - rho_q) <= 3.0 * rho_se + 1e-9) ++good_rho;
            }
            ok = ok && good_u >= 9 && good_rho >= 9;
            detail += "u " + std::to_string(good_u) + "/10, rho " +
                      std::to_string(good_rho) + "/10; ";
        }
    } catch (const std::exception& e) {
        r.detail = e.what();
        return r;
    }
    r.pass = ok;
    r.detail = detail;
    return r;
}

CriterionResult closed_form_equivalence() {
    CriterionResult r = make_result(11, "closed form matches quadrature to 1e-6");
    QuadratureSpec spec;
    spec.rel_tol = 1e-10;
    spec.abs_tol = 1e-13;

    std::mt19937_64 gen(7031ULL);
    std::uniform_real_distribution<double> uf1(0.5, 2.0);
    std::uniform_real_distribution<double> uu1(-1.0, 1.0);
    std::uniform_real_distribution<double> ueps(0.05, 0.2);
    std::uniform_real_distribution<double> usigma(0.05, 0.3);

    double worst = 0.0;
    try {
        for (int set = 0; set < 5; ++set) {
            RiemannData d;
            d.f1 = uf1(gen);
            std::uniform_real_distribution<double> uf2(-0.5 * d.f1, 2.0);
            d.f2 = uf2(gen);
            d.u1 = uu1(gen);
            // alternate the sign of the velocity jump across sets
            std::uniform_real_distribution<double> uu2(0.2, 1.5);
            d.u2 = (set % 2 == 0 ? -1.0 : 1.0) * uu2(gen);
            const SmoothedRiemannData sd{d, ueps(gen)};
            const double sigma = usigma(gen);
            const auto profile = make_smoothed_profile(sd);
            for (double t : linspace(0.2, 1.5, 20)) {
                for (double x : linspace(-4.0, 4.0, 20)) {
                    const double rho_cf = closed_form::rho_eps(sd, sigma, t, x, spec);
                    const double rho_q =
                        exact_fields::density_rho(profile, sigma, t, x, spec);
                    const double u_cf = closed_form::uhat_eps(sd, sigma, t, x, spec);
                    const double u_q =
                        exact_fields::velocity_uhat(profile, sigma, t, x, spec);
                    worst = std::max(
                        {worst, std::abs(rho_cf - rho_q), std::abs(u_cf - u_q)});
                }
            }
        }
    } catch (const std::exception& e) {
        r.detail = e.what();
        return r;
    }
    r.pass = worst < 1e-6;
    r.detail = "max |closed_form - quadrature| = " + fmt(worst);
    return r;
}

CriterionResult determinism(const std::string& scratch_dir) {
    CriterionResult r = make_result(12, "identical seeds give byte-identical CSV output");
    namespace fs = std::filesystem;

    cli::Scenario sc;
    sc.name = "determinism";
    sc.solver = cli::Solver::quadrature;
    sc.riemann = RiemannData{1.0, 1.0, 0.0, -1.0, 0.0};
    sc.eps = 0.1;
    sc.sigma_default = 0.05;
    sc.grid = {{0.5, 1.0}, -2.0, 1.0, 21};
    sc.seed = 7;

    auto read_all = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    try {
        sc.out_dir = (fs::path(scratch_dir) / "det_a").string();
        const auto run_a = cli::run_scenario(sc);
        sc.out_dir = (fs::path(scratch_dir) / "det_b").string();
        const auto run_b = cli::run_scenario(sc);
        bool same = run_a.runs.size() == run_b.runs.size();
        for (std::size_t i = 0; same && i < run_a.runs.size(); ++i)
            same = read_all(run_a.runs[i].csv_path) == read_all(run_b.runs[i].csv_path);
        r.pass = same;
        r.detail = same ? "CSV bytes identical across reruns" : "CSV bytes differ";
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    return r;
}

} // namespace

std::vector<CriterionResult> run_all(const std::string& scratch_dir) {
    std::vector<CriterionResult> results;
    results.push_back(rarefaction_reproduction());
    results.push_back(overlap_reproduction());
    results.push_back(spurious_pressure_theorem());
    results.push_back(moment_flux_concentration());
    results.push_back(sticky_shock());
    results.push_back(burgers_specialization());
    results.push_back(proposition1_convergence());
    results.push_back(proposition2_smoothing_independence());
    results.push_back(moment_system_consistency());
    results.push_back(montecarlo_cross_validation());
    results.push_back(closed_form_equivalence());
    results.push_back(determinism(scratch_dir));
    return results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace pgd::acceptance
