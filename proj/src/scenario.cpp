#include "pgd/scenario.hpp"

#include "pgd/characteristics.hpp"
#include "pgd/closed_form.hpp"
#include "pgd/errors.hpp"
#include "pgd/exact_fields.hpp"
#include "pgd/format.hpp"
#include "pgd/montecarlo.hpp"
#include "pgd/riemann_free.hpp"
#include "pgd/riemann_sticky.hpp"
#include "pgd/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

namespace pgd::cli {

const char* to_string(Solver s) {
    switch (s) {
    case Solver::quadrature: return "quadrature";
    case Solver::closed_form: return "closed_form";
    case Solver::free_fan: return "free";
    case Solver::sticky: return "sticky";
    case Solver::characteristics: return "characteristics";
    case Solver::montecarlo: return "montecarlo";
    }
    return "unknown";
}

void Scenario::validate() const {
    if (name.empty()) throw ConfigError("scenario name is required", 0, "name");
    if (grid.t_values.empty())
        throw ConfigError("grid needs at least one t value", 0, "t");
    for (double t : grid.t_values)
        if (!(t > 0.0)) throw ConfigError("grid t values must be > 0", 0, "t");
    if (grid.x_count < 2)
        throw ConfigError("grid x_count must be >= 2", 0, "x_count");
    if (!(grid.x_min < grid.x_max))
        throw ConfigError("grid needs x_min < x_max", 0, "x_min");
    if (!riemann.has_value() && profile_name.empty())
        throw ConfigError("scenario needs [data] with f1..u2 or profile=<name>", 0,
                          "data");
    if (riemann.has_value()) riemann->validate();
    for (double s : sweep.sigma)
        if (!(s > 0.0)) throw ConfigError("sweep sigma values must be > 0", 0, "sigma");
    for (double e : sweep.eps)
        if (!(e > 0.0)) throw ConfigError("sweep eps values must be > 0", 0, "eps");
    for (std::size_t n : sweep.n)
        if (n < 1) throw ConfigError("sweep n values must be >= 1", 0, "n");
    if (eps.has_value() && !(*eps > 0.0))
        throw ConfigError("data eps must be > 0", 0, "eps");
    if (!(sigma_default > 0.0))
        throw ConfigError("quadrature sigma must be > 0", 0, "sigma");
    quad.validate();
}

SampledProfile named_profile(const std::string& name) {
    if (name == "sine")
        return make_profile([](double s) { return std::sin(s); },
                            [](double) { return 1.0; }, -60.0, 60.0,
                            /*f0_integrable=*/false);
    if (name == "linear")
        return make_profile([](double s) { return -s; },
                            [](double) { return 1.0; }, -100.0, 100.0,
                            /*f0_integrable=*/false);
    if (name == "bump")
        return make_profile(
            [](double s) { return 0.8 * std::exp(-0.5 * s * s); },
            [](double s) { return std::exp(-s * s / 32.0); }, -40.0, 40.0,
            /*f0_integrable=*/true);
    throw ConfigError("unknown profile '" + name + "'", 0, "profile");
}

// ---------------------------------------------------------------------------
// scenario-file parsing

namespace {

std::string trim(std::string_view sv) {
    const auto b = sv.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = sv.find_last_not_of(" \t\r");
    return std::string(sv.substr(b, e - b + 1));
}

double parse_number(const std::string& text, int line, const std::string& key) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ConfigError("value of '" + key + "' is not a number: '" + text + "'",
                          line, key);
    return v;
}

std::vector<double> parse_list(const std::string& text, int line,
                               const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_number(trim(item), line, key));
    if (out.empty())
        throw ConfigError("empty list for '" + key + "'", line, key);
    return out;
}

Solver parse_solver(const std::string& text, int line) {
    if (text == "quadrature") return Solver::quadrature;
    if (text == "closed_form") return Solver::closed_form;
    if (text == "free") return Solver::free_fan;
    if (text == "sticky") return Solver::sticky;
    if (text == "characteristics") return Solver::characteristics;
    if (text == "montecarlo") return Solver::montecarlo;
    throw ConfigError("unknown solver '" + text + "'", line, "solver");
}

} // namespace

Scenario parse_scenario_text(const std::string& text) {
    Scenario sc;
    std::map<std::string, double> data_kv;
    bool have_x_min = false, have_x_max = false;

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError("malformed section header '" + s + "'", line);
            section = trim(s.substr(1, s.size() - 2));
            static const char* known[] = {"scenario", "data",       "grid",
                                          "sweep",    "mc",         "quadrature",
                                          "output"};
            if (std::find(std::begin(known), std::end(known), section) ==
                std::end(known))
                throw ConfigError("unknown section '" + section + "'", line);
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value', got '" + s + "'", line);
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("expected 'key = value', got '" + s + "'", line, key);

        if (section == "scenario") {
            if (key == "name") sc.name = value;
            else if (key == "solver") sc.solver = parse_solver(value, line);
            else if (key == "seed")
                sc.seed = static_cast<std::uint64_t>(parse_number(value, line, key));
            else if (key == "threads")
                sc.threads = static_cast<int>(parse_number(value, line, key));
            else throw ConfigError("unknown key '" + key + "' in [scenario]", line, key);
        } else if (section == "data") {
            if (key == "profile") sc.profile_name = value;
            else if (key == "eps") sc.eps = parse_number(value, line, key);
            else if (key == "f1" || key == "f2" || key == "u1" || key == "u2" ||
                     key == "x0")
                data_kv[key] = parse_number(value, line, key);
            else throw ConfigError("unknown key '" + key + "' in [data]", line, key);
        } else if (section == "grid") {
            if (key == "t") sc.grid.t_values = parse_list(value, line, key);
            else if (key == "x_min") { sc.grid.x_min = parse_number(value, line, key); have_x_min = true; }
            else if (key == "x_max") { sc.grid.x_max = parse_number(value, line, key); have_x_max = true; }
            else if (key == "x_count")
                sc.grid.x_count = static_cast<int>(parse_number(value, line, key));
            else throw ConfigError("unknown key '" + key + "' in [grid]", line, key);
        } else if (section == "sweep") {
            if (key == "sigma") sc.sweep.sigma = parse_list(value, line, key);
            else if (key == "eps") sc.sweep.eps = parse_list(value, line, key);
            else if (key == "n") {
                for (double v : parse_list(value, line, key))
                    sc.sweep.n.push_back(static_cast<std::size_t>(v));
            } else throw ConfigError("unknown key '" + key + "' in [sweep]", line, key);
        } else if (section == "mc") {
            if (key == "n") sc.mc.n = static_cast<std::size_t>(parse_number(value, line, key));
            else if (key == "bandwidth") sc.mc.bandwidth = parse_number(value, line, key);
            else throw ConfigError("unknown key '" + key + "' in [mc]", line, key);
        } else if (section == "quadrature") {
            if (key == "sigma") sc.sigma_default = parse_number(value, line, key);
            else if (key == "rel_tol") sc.quad.rel_tol = parse_number(value, line, key);
            else if (key == "abs_tol") sc.quad.abs_tol = parse_number(value, line, key);
            else if (key == "truncation_radius")
                sc.quad.truncation_radius = parse_number(value, line, key);
            else if (key == "max_subdivisions")
                sc.quad.max_subdivisions = static_cast<int>(parse_number(value, line, key));
            else throw ConfigError("unknown key '" + key + "' in [quadrature]", line, key);
        } else if (section == "output") {
            if (key == "dir") sc.out_dir = value;
            else throw ConfigError("unknown key '" + key + "' in [output]", line, key);
        } else {
            throw ConfigError("key '" + key + "' outside any section", line, key);
        }
    }

    if (!data_kv.empty()) {
        for (const char* req : {"f1", "f2", "u1", "u2"})
            if (!data_kv.contains(req))
                throw ConfigError(std::string("[data] is missing '") + req + "'", 0, req);
        sc.riemann = riemann_from_kv(data_kv);
    }
    if (!have_x_min || !have_x_max)
        throw ConfigError("grid needs x_min and x_max", 0, "x_min");
    sc.validate();
    return sc;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str());
}

// ---------------------------------------------------------------------------
// running

namespace {

struct Row {
    double t = 0.0;
    double x = 0.0;
    FieldSample sample;
    std::string error;
};

struct SweepPoint {
    double sigma = 0.0;
    double eps = 0.0;
    std::size_t n = 0;
};

// evaluation contexts are built once per sweep point, then shared read-only
// by the worker threads
struct Evaluator {
    std::function<FieldSample(double t, double x)> eval;
};

std::string sanitize(std::string msg) {
    std::replace(msg.begin(), msg.end(), ',', ';');
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    return msg;
}

SampledProfile scenario_profile(const Scenario& sc, double eps) {
    if (!sc.profile_name.empty()) return named_profile(sc.profile_name);
    if (eps > 0.0)
        return make_smoothed_profile({*sc.riemann, eps});
    return make_riemann_profile(*sc.riemann);
}

Evaluator make_evaluator(const Scenario& sc, const SweepPoint& pt,
                         const std::vector<double>& t_values) {
    switch (sc.solver) {
    case Solver::quadrature: {
        auto profile = std::make_shared<SampledProfile>(scenario_profile(sc, pt.eps));
        const double sigma = pt.sigma;
        const auto quad = sc.quad;
        return {[profile, sigma, quad](double t, double x) {
            return exact_fields::field_sample(*profile, sigma, t, x, quad);
        }};
    }
    case Solver::closed_form: {
        if (!sc.riemann)
            throw ConfigError("closed_form solver needs Riemann [data]", 0, "data");
        const SmoothedRiemannData data{*sc.riemann, pt.eps};
        const double sigma = pt.sigma;
        const auto quad = sc.quad;
        return {[data, sigma, quad](double t, double x) {
            FieldSample s;
            s.t = t;
            s.x = x;
            s.provenance = Provenance::closed_form;
            s.rho = closed_form::rho_eps(data, sigma, t, x, quad);
            s.u = closed_form::uhat_eps(data, sigma, t, x, quad);
            s.p = 0.0;
            return s;
        }};
    }
    case Solver::free_fan: {
        if (!sc.riemann)
            throw ConfigError("free solver needs Riemann [data]", 0, "data");
        const auto fan = riemann_free::solve_free(*sc.riemann);
        return {[fan](double t, double x) { return riemann_free::eval_wavefan(fan, t, x); }};
    }
    case Solver::sticky: {
        if (!sc.riemann)
            throw ConfigError("sticky solver needs Riemann [data]", 0, "data");
        const RiemannData data = *sc.riemann;
        if (data.u2 < 0.0) {
            const auto sol = riemann_sticky::solve_sticky(data);
            return {[sol, data](double t, double x) {
                FieldSample s;
                s.t = t;
                s.x = x;
                s.provenance = Provenance::limit;
                const double xs = data.x0 + sol.speed * t;
                if (x < xs) { s.rho = data.f1; s.u = data.u1; }
                else if (x > xs) { s.rho = data.f1 + data.f2; s.u = data.u1 + data.u2; }
                else { s.rho = data.f1 + 0.5 * data.f2; s.u = data.u1 + 0.5 * data.u2; }
                s.p = 0.0;
                return s;
            }};
        }
        // sticking never triggers for u2 >= 0: identical to the free solution
        const auto fan = riemann_free::solve_free(data);
        return {[fan](double t, double x) { return riemann_free::eval_wavefan(fan, t, x); }};
    }
    case Solver::characteristics: {
        auto profile = std::make_shared<SampledProfile>(scenario_profile(sc, pt.eps));
        return {[profile](double t, double x) {
            FieldSample s;
            s.t = t;
            s.x = x;
            s.provenance = Provenance::limit;
            const auto solve = characteristics::solve_implicit_s0(*profile, t, x);
            s.u = profile->u0(solve.s0);
            s.rho = profile->f0(solve.s0) / solve.jacobian;
            s.p = 0.0;
            return s;
        }};
    }
    case Solver::montecarlo: {
        auto profile = scenario_profile(sc, pt.eps);
        // one ensemble per t value, built up front and shared
        const double bandwidth = sc.mc.bandwidth;
        auto table = std::make_shared<std::map<double, std::shared_ptr<const montecarlo::ParticleEnsemble>>>();
        for (double t : t_values)
            (*table)[t] = std::make_shared<const montecarlo::ParticleEnsemble>(
                montecarlo::simulate(profile, pt.sigma, t, pt.n, sc.seed));
        return {[table, bandwidth](double t, double x) {
            const auto& ens = *table->at(t);
            FieldSample s;
            s.t = t;
            s.x = x;
            s.provenance = Provenance::monte_carlo;
            s.rho = montecarlo::estimate_rho(ens, x, bandwidth);
            s.u = montecarlo::estimate_uhat(ens, x, bandwidth);
            s.p = 0.0;
            return s;
        }};
    }
    }
    throw ConfigError("unsupported solver");
}

std::string point_suffix(const Scenario& sc, const SweepPoint& pt) {
    std::string s;
    switch (sc.solver) {
    case Solver::quadrature:
        s += "__sigma=" + format::shortest(pt.sigma);
        if (pt.eps > 0.0) s += "__eps=" + format::shortest(pt.eps);
        break;
    case Solver::closed_form:
        s += "__sigma=" + format::shortest(pt.sigma);
        s += "__eps=" + format::shortest(pt.eps);
        break;
    case Solver::montecarlo:
        s += "__sigma=" + format::shortest(pt.sigma);
        s += "__n=" + std::to_string(pt.n);
        break;
    default:
        break;
    }
    return s;
}

} // namespace

RunResult run_scenario(const Scenario& scenario) {
    scenario.validate();
    namespace fs = std::filesystem;
    fs::create_directories(scenario.out_dir);

    // sweep points: cross product of the lists that apply to the solver,
    // with scenario defaults for absent lists
    std::vector<double> sigmas = scenario.sweep.sigma;
    if (sigmas.empty()) sigmas = {scenario.sigma_default};
    std::vector<double> epses = scenario.sweep.eps;
    if (epses.empty()) epses = {scenario.eps.value_or(0.0)};
    std::vector<std::size_t> ns = scenario.sweep.n;
    if (ns.empty()) ns = {scenario.mc.n};

    const bool uses_sigma = scenario.solver == Solver::quadrature ||
                            scenario.solver == Solver::closed_form ||
                            scenario.solver == Solver::montecarlo;
    const bool uses_eps = scenario.solver == Solver::quadrature ||
                          scenario.solver == Solver::closed_form;
    const bool uses_n = scenario.solver == Solver::montecarlo;
    if (!uses_sigma) sigmas = {scenario.sigma_default};
    if (!uses_eps) epses = {scenario.eps.value_or(0.0)};
    if (!uses_n) ns = {scenario.mc.n};
    if (scenario.solver == Solver::closed_form) {
        for (double& e : epses)
            if (e == 0.0)
                throw ConfigError("closed_form needs eps in [data] or [sweep]", 0, "eps");
    }

    std::vector<SweepPoint> points;
    for (double sg : sigmas)
        for (double ep : epses)
            for (std::size_t n : ns) points.push_back({sg, ep, n});
    if (!uses_sigma && !uses_eps && !uses_n) points = {points.front()};

    // limit fan reference for the summary deviation stats; the locus
    // clearance is fixed across the sweep so per-run maxima are comparable
    std::optional<riemann_free::WaveFan> fan;
    if (scenario.riemann) fan = riemann_free::solve_free(*scenario.riemann);
    double fan_guard = 1e-12;
    if (uses_sigma)
        fan_guard = 10.0 * *std::min_element(sigmas.begin(), sigmas.end());

    RunResult result;
    nlohmann::json manifest;
    manifest["name"] = scenario.name;
    manifest["solver"] = to_string(scenario.solver);
    manifest["seed"] = scenario.seed;
    manifest["version"] = "pgdlab 0.1.0";
    nlohmann::json inputs;
    if (scenario.riemann) inputs["data"] = *scenario.riemann;
    if (scenario.eps) inputs["eps"] = *scenario.eps;
    if (!scenario.profile_name.empty()) inputs["profile"] = scenario.profile_name;
    inputs["grid"] = {{"t", scenario.grid.t_values},
                      {"x_min", scenario.grid.x_min},
                      {"x_max", scenario.grid.x_max},
                      {"x_count", scenario.grid.x_count}};
    inputs["quadrature"] = {{"sigma", scenario.sigma_default},
                            {"rel_tol", scenario.quad.rel_tol},
                            {"abs_tol", scenario.quad.abs_tol},
                            {"truncation_radius", scenario.quad.truncation_radius},
                            {"max_subdivisions", scenario.quad.max_subdivisions}};
    manifest["inputs"] = inputs;
    manifest["runs"] = nlohmann::json::array();

    for (const SweepPoint& pt : points) {
        const Evaluator ev = make_evaluator(scenario, pt, scenario.grid.t_values);

        const std::size_t nt = scenario.grid.t_values.size();
        const std::size_t nx = static_cast<std::size_t>(scenario.grid.x_count);
        std::vector<Row> rows(nt * nx);

        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const std::size_t idx = next.fetch_add(1);
                if (idx >= rows.size()) break;
                const std::size_t it = idx / nx;
                const std::size_t ix = idx % nx;
                Row& row = rows[idx];
                row.t = scenario.grid.t_values[it];
                row.x = scenario.grid.x_min +
                        (scenario.grid.x_max - scenario.grid.x_min) *
                            static_cast<double>(ix) / static_cast<double>(nx - 1);
                try {
                    row.sample = ev.eval(row.t, row.x);
                } catch (const std::exception& e) {
                    row.sample = FieldSample{row.t, row.x, 0.0, 0.0, 0.0,
                                             Provenance::limit};
                    row.error = sanitize(e.what());
                }
            }
        };
        unsigned hw = std::thread::hardware_concurrency();
        if (hw == 0) hw = 1;
        const unsigned n_threads =
            scenario.threads > 0 ? static_cast<unsigned>(scenario.threads) : hw;
        std::vector<std::thread> pool;
        for (unsigned k = 1; k < n_threads; ++k) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();

        const std::string csv_name =
            scenario.name + "__" + to_string(scenario.solver) +
            point_suffix(scenario, pt) + ".csv";
        const std::string csv_path = (fs::path(scenario.out_dir) / csv_name).string();
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) throw ConfigError("cannot write '" + csv_path + "'");
        out << "t,x,rho,u,p,provenance,error\n";
        RunSummary summary;
        summary.sigma = pt.sigma;
        summary.eps = pt.eps;
        summary.n = pt.n;
        summary.csv_path = csv_path;
        summary.rows = rows.size();
        double dev_u = 0.0, dev_rho = 0.0;
        bool any_ref = false;
        for (const Row& row : rows) {
            out << format::shortest(row.t) << ',' << format::shortest(row.x) << ','
                << format::shortest(row.sample.rho) << ','
                << format::shortest(row.sample.u) << ','
                << format::shortest(row.sample.p) << ','
                << pgd::to_string(row.sample.provenance) << ',' << row.error << '\n';
            if (!row.error.empty()) {
                ++summary.errors;
                continue;
            }
            if (fan) {
                // compare against the limit fan away from its loci
                const double xi = (row.x - fan->data.x0) / row.t;
                bool clear = true;
                for (double l : fan->loci)
                    clear = clear && std::abs(xi - l) * row.t > fan_guard;
                if (!clear) continue;
                const FieldSample ref = riemann_free::eval_wavefan(*fan, row.t, row.x);
                dev_u = std::max(dev_u, std::abs(row.sample.u - ref.u));
                dev_rho = std::max(dev_rho, std::abs(row.sample.rho - ref.rho));
                any_ref = true;
            }
        }
        if (any_ref) {
            summary.max_dev_u_vs_fan = dev_u;
            summary.max_dev_rho_vs_fan = dev_rho;
        }
        result.runs.push_back(summary);

        nlohmann::json jrun;
        jrun["csv"] = csv_name;
        if (uses_sigma) jrun["sigma"] = pt.sigma;
        if (uses_eps && pt.eps > 0.0) jrun["eps"] = pt.eps;
        if (uses_n) jrun["n"] = pt.n;
        jrun["rows"] = summary.rows;
        jrun["errors"] = summary.errors;
        if (summary.max_dev_u_vs_fan) {
            jrun["max_dev_u_vs_fan"] = *summary.max_dev_u_vs_fan;
            jrun["max_dev_rho_vs_fan"] = *summary.max_dev_rho_vs_fan;
        }
        manifest["runs"].push_back(jrun);
    }

    const std::string manifest_path =
        (fs::path(scenario.out_dir) / (scenario.name + "__manifest.json")).string();
    std::ofstream mo(manifest_path, std::ios::binary);
    mo << manifest.dump(2) << '\n';
    result.manifest_path = manifest_path;
    return result;
}

// ---------------------------------------------------------------------------
// compare

namespace {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (line.size() && line.back() == ',') cells.push_back("");
        if (first) {
            table.header = cells;
            first = false;
        } else if (!cells.empty()) {
            cells.resize(table.header.size());
            table.rows.push_back(cells);
        }
    }
    if (table.header.empty()) throw ConfigError("'" + path + "' is empty");
    return table;
}

double cell_number(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ConfigError("non-numeric cell '" + s + "'");
    return v;
}

} // namespace

CompareReport compare_csv(const std::string& path_a, const std::string& path_b) {
    const CsvTable a = read_csv(path_a);
    const CsvTable b = read_csv(path_b);
    if (a.header != b.header)
        throw ConfigError("column layouts differ between '" + path_a + "' and '" +
                          path_b + "'");
    if (a.rows.size() != b.rows.size())
        throw ConfigError("row counts differ: " + std::to_string(a.rows.size()) +
                          " vs " + std::to_string(b.rows.size()));

    std::size_t t_col = a.header.size(), x_col = a.header.size();
    std::vector<std::size_t> numeric_cols;
    for (std::size_t c = 0; c < a.header.size(); ++c) {
        if (a.header[c] == "t") t_col = c;
        if (a.header[c] == "x") x_col = c;
        if (a.header[c] == "t" || a.header[c] == "x" || a.header[c] == "rho" ||
            a.header[c] == "u" || a.header[c] == "p")
            numeric_cols.push_back(c);
    }
    if (t_col == a.header.size() || x_col == a.header.size())
        throw ConfigError("CSV is missing t/x columns");

    for (std::size_t r = 0; r < a.rows.size(); ++r) {
        if (cell_number(a.rows[r][t_col]) != cell_number(b.rows[r][t_col]) ||
            cell_number(a.rows[r][x_col]) != cell_number(b.rows[r][x_col]))
            throw ConfigError("grids differ at row " + std::to_string(r + 1));
    }

    CompareReport report;
    report.rows = a.rows.size();
    for (std::size_t c : numeric_cols) {
        ColumnDiff diff;
        diff.name = a.header[c];
        double sum = 0.0;
        for (std::size_t r = 0; r < a.rows.size(); ++r) {
            const double d =
                std::abs(cell_number(a.rows[r][c]) - cell_number(b.rows[r][c]));
            diff.max_abs = std::max(diff.max_abs, d);
            sum += d;
        }
        diff.mean_abs = a.rows.empty() ? 0.0 : sum / static_cast<double>(a.rows.size());
        report.worst = std::max(report.worst, diff.max_abs);
        report.columns.push_back(diff);
    }
    return report;
}

} // namespace pgd::cli
