#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "opuc/io.hpp"
#include "opuc/pruefer.hpp"
#include "opuc/suites.hpp"
#include "opuc/sumrule.hpp"
#include "opuc/verblunsky.hpp"

// Command line front end.  Exit codes: 0 success, 1 property violation,
// 2 invalid configuration or I/O failure, 3 inconclusive classification.

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInconclusive = 3;

struct SequenceChoice {
    std::string kind = "test";
    int m = 1;
    double beta = 0.3;
    double c = 0.6;
    std::size_t N = 10000;
};

opuc::VerblunskySequence build_sequence(const SequenceChoice& sc) {
    if (sc.kind == "test") return opuc::test_sequence(sc.m, sc.N);
    return opuc::power_sequence(sc.beta, sc.c, sc.N);
}

std::string describe_sequence(const SequenceChoice& sc) {
    std::ostringstream out;
    out << "seq=" << sc.kind;
    if (sc.kind == "test") {
        out << " m=" << sc.m;
    } else {
        out << " beta=" << opuc::format_double(sc.beta) << " c=" << opuc::format_double(sc.c);
    }
    out << " N=" << sc.N;
    return out.str();
}

// Content is assembled in memory first, so a failed run leaves no
// partial file behind.
void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) {
        out.close();
        std::remove(path.c_str());
        throw std::runtime_error("failed to write " + path);
    }
}

int default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int run_density(const SequenceChoice& sc, double eta_min, std::size_t grid_points, int jobs,
                const std::string& out_path) {
    const opuc::VerblunskySequence seq = build_sequence(sc);
    std::ostringstream body;
    opuc::write_log_density_csv(seq, eta_min, grid_points, 1e-3, jobs, body);
    std::ostringstream head;
    head << "# tool=opuc version=" << kVersion << "\n";
    head << "# command=density " << describe_sequence(sc) << " eta_min="
         << opuc::format_double(eta_min) << " grid_points=" << grid_points << "\n";
    write_file(out_path, head.str() + body.str());
    std::cout << "density table written to " << out_path << "\n";
    return kExitOk;
}

int run_sumrule_scan(int m, const std::vector<double>& betas, const std::vector<std::size_t>& Ns,
                     double c, const opuc::QuadratureSpec& grid, const std::string& out_path) {
    const std::vector<opuc::EquivalenceRow> rows =
        opuc::equivalence_experiment(m, betas, Ns, c, grid);
    std::ostringstream body;
    opuc::write_equivalence_csv(rows, body);
    std::ostringstream head;
    head << "# tool=opuc version=" << kVersion << "\n";
    head << "# command=sumrule-scan m=" << m << " c=" << opuc::format_double(c) << " betas=";
    for (std::size_t i = 0; i < betas.size(); ++i) {
        head << (i ? "," : "") << opuc::format_double(betas[i]);
    }
    head << " N_list=";
    for (std::size_t i = 0; i < Ns.size(); ++i) head << (i ? "," : "") << Ns[i];
    head << "\n";
    head << "# grid theta_min=" << opuc::format_double(grid.theta_min)
         << " refine_levels=" << grid.refine_levels << " bulk_points=" << grid.bulk_points
         << " tail_points=" << grid.tail_points
         << " cauchy_tol=" << opuc::format_double(grid.cauchy_tol) << "\n";
    write_file(out_path, head.str() + body.str());

    bool inconclusive = false;
    for (const auto& row : rows) {
        std::cout << "m=" << row.m << " beta=" << opuc::format_double(row.beta) << " N=" << row.N
                  << " Z=" << opuc::format_double(row.Z) << " " << row.classification << "\n";
        if (row.classification == "INCONCLUSIVE") inconclusive = true;
    }
    std::cout << "scan written to " << out_path << "\n";
    return inconclusive ? kExitInconclusive : kExitOk;
}

int run_exponent_fit(const SequenceChoice& sc, double theta_lo, std::size_t grid_points,
                     const std::string& out_path) {
    const opuc::VerblunskySequence seq = build_sequence(sc);
    // One decade, log spaced, as the fit precondition requires.
    const double theta_hi = 10.0 * theta_lo;
    std::vector<double> grid(grid_points);
    const double lr = std::log(theta_hi / theta_lo);
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double s = grid_points == 1
                             ? 0.0
                             : static_cast<double>(i) / static_cast<double>(grid_points - 1);
        grid[i] = theta_lo * std::exp(lr * s);
    }
    const opuc::ExponentFit fit = opuc::exponent_fit(seq, grid);
    if (fit.excluded > 0) {
        std::cerr << "warning: " << fit.excluded << " grid points below 1e-12 were excluded\n";
    }

    const opuc::PrueferEvaluator eval(seq);
    std::ostringstream body;
    body << "theta,log_w\n";
    for (double t : grid) {
        body << opuc::format_double(t) << ',' << opuc::format_double(-2.0 * eval.log_r(t)) << '\n';
    }
    std::ostringstream head;
    head << "# tool=opuc version=" << kVersion << "\n";
    head << "# command=exponent-fit " << describe_sequence(sc)
         << " theta_lo=" << opuc::format_double(theta_lo)
         << " theta_hi=" << opuc::format_double(theta_hi) << " grid_points=" << grid_points << "\n";
    head << "# fit slope=" << opuc::format_double(fit.slope)
         << " intercept=" << opuc::format_double(fit.intercept)
         << " residual=" << opuc::format_double(fit.residual) << " excluded=" << fit.excluded
         << "\n";
    write_file(out_path, head.str() + body.str());

    std::cout << "slope=" << opuc::format_double(fit.slope)
              << " intercept=" << opuc::format_double(fit.intercept)
              << " residual=" << opuc::format_double(fit.residual) << " excluded=" << fit.excluded
              << "\n";
    std::cout << "fit table written to " << out_path << "\n";
    return kExitOk;
}

int run_verify(std::uint64_t seed, std::size_t trials, const std::string& replay_prefix) {
    if (trials == 0) {
        std::cerr << "config error: --trials must be at least 1\n";
        return kExitConfig;
    }
    // The sequence and series suites are two orders heavier per trial.
    const std::size_t heavy_trials = std::max<std::size_t>(1, trials / 100);
    std::vector<opuc::SuiteReport> reports;
    reports.push_back(opuc::run_disk_product_suite(seed, trials));
    reports.push_back(opuc::run_disk_power_mean_suite(seed, trials));
    reports.push_back(opuc::run_product_comparison_suite(seed, heavy_trials, 10000));
    reports.push_back(opuc::run_series_transform_suite(seed, heavy_trials));

    bool failed = false;
    for (const auto& rep : reports) {
        std::cout << "suite " << rep.name << ": " << rep.trials << " trials, " << rep.violations
                  << " violations\n";
        if (rep.violations > 0) {
            failed = true;
            const std::string path = replay_prefix + "_" + rep.name + ".csv";
            write_file(path, rep.replay_csv);
            std::cout << "replay input written to " << path << "\n";
        }
    }
    std::cout << (failed ? "FAIL\n" : "all suites passed\n");
    return failed ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unit-circle coefficient sequences: densities, sum-rule integrals, and property suites"};
    app.set_version_flag("--version", std::string("opuc ") + kVersion);
    app.require_subcommand(1);

    SequenceChoice sc;
    const double default_theta_min = std::numbers::pi * 0x1p-14;

    auto add_sequence_flags = [&sc](CLI::App* cmd) {
        cmd->add_option("--seq", sc.kind, "sequence family")
            ->check(CLI::IsMember({"test", "power"}))
            ->capture_default_str();
        cmd->add_option("--m", sc.m, "order of the test sequence")->capture_default_str();
        cmd->add_option("--beta", sc.beta, "power-sequence exponent")->capture_default_str();
        cmd->add_option("--c", sc.c, "power-sequence amplitude")->capture_default_str();
        cmd->add_option("--N", sc.N, "sequence length")->capture_default_str();
    };

    // density
    auto* density = app.add_subcommand("density", "log-density table over an angle grid");
    add_sequence_flags(density);
    double eta_min = 0.1;
    std::size_t density_points = 200;
    int density_jobs = default_jobs();
    std::string density_out = "density.csv";
    density->add_option("--theta-min", eta_min, "grid margin around the closed gap at 0")
        ->capture_default_str();
    density->add_option("--grid-points", density_points, "angle grid size")->capture_default_str();
    density->add_option("--jobs", density_jobs, "worker threads")->capture_default_str();
    density->add_option("--out", density_out, "output CSV path")->capture_default_str();

    // sumrule-scan
    auto* scan = app.add_subcommand("sumrule-scan", "entropy integrals across truncation lengths");
    int scan_m = 1;
    std::vector<double> scan_betas{0.2, 0.3};
    std::vector<std::size_t> scan_Ns{1000, 10000, 100000};
    double scan_c = 0.6;
    opuc::QuadratureSpec scan_grid;
    scan_grid.theta_min = default_theta_min;
    scan_grid.bulk_points = 4096;
    std::string scan_out = "sumrule_scan.csv";
    scan->add_option("--m", scan_m, "integral order")->capture_default_str();
    scan->add_option("--beta", scan_betas, "power-sequence exponents")
        ->delimiter(',')
        ->capture_default_str();
    scan->add_option("--N", scan_Ns, "truncation lengths, strictly increasing")
        ->delimiter(',')
        ->capture_default_str();
    scan->add_option("--c", scan_c, "power-sequence amplitude")->capture_default_str();
    scan->add_option("--theta-min", scan_grid.theta_min, "finest quadrature cutoff")
        ->capture_default_str();
    scan->add_option("--grid-points", scan_grid.bulk_points, "bulk quadrature points")
        ->capture_default_str();
    scan->add_option("--refine-levels", scan_grid.refine_levels, "cutoff refinement levels")
        ->capture_default_str();
    scan->add_option("--jobs", scan_grid.jobs, "worker threads")->capture_default_str();
    scan->add_option("--out", scan_out, "output CSV path")->capture_default_str();

    // exponent-fit
    auto* fitcmd = app.add_subcommand("exponent-fit", "growth exponent of |log w| toward 0");
    add_sequence_flags(fitcmd);
    double fit_theta_lo = 1e-2;
    std::size_t fit_points = 33;
    std::string fit_out = "exponent_fit.csv";
    fitcmd->add_option("--theta-min", fit_theta_lo, "low end of the one-decade fit window")
        ->capture_default_str();
    fitcmd->add_option("--grid-points", fit_points, "log-spaced grid size")->capture_default_str();
    fitcmd->add_option("--out", fit_out, "output CSV path")->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "randomized property suites");
    std::uint64_t seed = 1;
    std::size_t trials = 100000;
    std::string replay_prefix = "replay";
    verify->add_option("--seed", seed, "random seed")->capture_default_str();
    verify->add_option("--trials", trials, "draws per disk suite; heavier suites use trials/100")
        ->capture_default_str();
    verify->add_option("--out", replay_prefix, "replay file prefix")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*density) return run_density(sc, eta_min, density_points, density_jobs, density_out);
        if (*scan) return run_sumrule_scan(scan_m, scan_betas, scan_Ns, scan_c, scan_grid, scan_out);
        if (*fitcmd) return run_exponent_fit(sc, fit_theta_lo, fit_points, fit_out);
        if (*verify) return run_verify(seed, trials, replay_prefix);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
