// Acceptance gate: every release-blocking property in one binary, one
// verdict line per criterion, exit code equal to the number of failures.
// An optional integer argument restricts the run to that criterion.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <sys/wait.h>

#include "opuc/inequalities.hpp"
#include "opuc/parallel.hpp"
#include "opuc/pruefer.hpp"
#include "opuc/suites.hpp"
#include "opuc/sumrule.hpp"
#include "opuc/szego.hpp"
#include "opuc/verblunsky.hpp"

using opuc::Cplx;
using opuc::PrueferEvaluator;
using opuc::VerblunskySequence;

namespace {

struct Outcome {
    bool pass = false;
    std::string stat;
};

std::string fmt(const char* pattern, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, pattern);
    std::vsnprintf(buf, sizeof buf, pattern, ap);
    va_end(ap);
    return buf;
}

int worker_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw > 16 ? 16 : hw);
}

// 1. The recursion output really is an orthonormal family: against the
// degree-N truncated weight, the Gram matrix of phi_0..phi_N computed by
// a full-period trapezoid rule is the identity to 1e-8.
Outcome orthonormality() {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    constexpr int M = 1 << 20;
    constexpr int chunks = 64;
    const int jobs = worker_count();
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t N = 1 + static_cast<std::size_t>(U(rng) * 8.0) % 8;
        std::vector<Cplx> a(N);
        for (auto& v : a) v = std::polar(0.9 * std::sqrt(U(rng)), 2.0 * std::numbers::pi * U(rng));
        const VerblunskySequence seq(a);
        std::vector<opuc::PolynomialPair> ps;
        ps.reserve(N + 1);
        ps.push_back(opuc::initial_pair());
        for (std::size_t n = 0; n < N; ++n) ps.push_back(opuc::szego_step(ps.back(), a[n]));

        const std::size_t P = N + 1;
        const std::size_t pairs = P * (P + 1) / 2;
        std::vector<std::vector<Cplx>> partial(chunks, std::vector<Cplx>(pairs, Cplx{0.0, 0.0}));
        opuc::parallel_for(chunks, jobs, [&](std::size_t c) {
            std::vector<Cplx>& G = partial[c];
            std::vector<Cplx> pw(P), val(P);
            const int lo = static_cast<int>(c) * (M / chunks);
            const int hi = lo + M / chunks;
            for (int p = lo; p < hi; ++p) {
                const double theta = 2.0 * std::numbers::pi * p / M;
                const Cplx z = std::polar(1.0, theta);
                pw[0] = Cplx{1.0, 0.0};
                for (std::size_t j = 1; j < P; ++j) pw[j] = pw[j - 1] * z;
                for (std::size_t k = 0; k < P; ++k) {
                    Cplx acc{0.0, 0.0};
                    for (std::size_t j = 0; j < ps[k].phi.size(); ++j) acc += ps[k].phi[j] * pw[j];
                    val[k] = acc;
                }
                const double w = 1.0 / std::norm(val[P - 1]);
                std::size_t idx = 0;
                for (std::size_t i = 0; i < P; ++i) {
                    for (std::size_t j = i; j < P; ++j) {
                        G[idx++] += val[i] * std::conj(val[j]) * w;
                    }
                }
            }
        });
        std::size_t idx = 0;
        for (std::size_t i = 0; i < P; ++i) {
            for (std::size_t j = i; j < P; ++j) {
                Cplx g{0.0, 0.0};
                for (int c = 0; c < chunks; ++c) g += partial[static_cast<std::size_t>(c)][idx];
                g /= static_cast<double>(M);
                worst = std::max(worst, std::abs(g - (i == j ? Cplx{1.0, 0.0} : Cplx{0.0, 0.0})));
                ++idx;
            }
        }
    }
    return {worst <= 1e-8, fmt("max|G-I|=%.2e over 20 draws", worst)};
}

// 2. Log-domain radius equals the polynomial modulus on the circle to
// 1e-9 relative error at degrees up to 500.
Outcome radius_consistency() {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Cplx> a(500);
        for (auto& v : a) v = std::polar(0.15 * std::sqrt(U(rng)), 2.0 * std::numbers::pi * U(rng));
        const VerblunskySequence seq(a);
        opuc::PolynomialPair pair = opuc::initial_pair();
        std::size_t built = 0;
        for (std::size_t n : {250ul, 500ul}) {
            while (built < n) pair = opuc::szego_step(pair, a[built++]);
            for (int i = 0; i < 100; ++i) {
                const double eta = 0.03 + (2.0 * std::numbers::pi - 0.06) * i / 99.0;
                const double r_poly = std::abs(opuc::evaluate_pair(pair, eta).first);
                const double r_log = std::exp(opuc::log_r_partial(seq, eta, n));
                worst = std::max(worst, std::abs(r_log - r_poly) / r_poly);
            }
        }
    }
    return {worst <= 1e-9, fmt("max rel err=%.2e at degrees 250/500", worst)};
}

// 3. Order-zero integral equals the coefficient-side sum to 1e-6 on
// random decaying sequences.
Outcome order_zero_identity() {
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    opuc::QuadratureSpec g;
    g.bulk_points = 1 << 16;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t N = 1 + static_cast<std::size_t>(U(rng) * 49.0);
        std::vector<Cplx> a(N);
        for (std::size_t n = 0; n < N; ++n) {
            a[n] = std::polar(0.8 * std::sqrt(U(rng)) / static_cast<double>(n + 2),
                              2.0 * std::numbers::pi * U(rng));
        }
        const VerblunskySequence seq(a);
        const PrueferEvaluator ev(seq);
        const opuc::ZEstimate est =
            opuc::z_integral([&](double t) { return -2.0 * ev.log_r(t); }, 0, g);
        if (est.divergent || est.inconclusive) {
            return {false, "quadrature failed to converge on a finite truncation"};
        }
        worst = std::max(worst, std::abs(est.value - opuc::szego_identity_m0(seq)));
    }
    return {worst <= 1e-6, fmt("max identity gap=%.2e over 20 draws", worst)};
}

// 4. The positive part of the order-m integral never exceeds 2^m.
Outcome positive_part_bound() {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    opuc::QuadratureSpec g;
    g.bulk_points = 1 << 16;
    int violations = 0;
    double closest = 1e300;
    for (int m = 0; m <= 3; ++m) {
        const double bound = std::pow(2.0, m);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t N = 1 + static_cast<std::size_t>(U(rng) * 29.0);
            std::vector<Cplx> a(N);
            for (auto& v : a) {
                v = std::polar(0.8 * std::sqrt(U(rng)), 2.0 * std::numbers::pi * U(rng));
            }
            const PrueferEvaluator ev((VerblunskySequence(a)));
            const opuc::ZEstimate est =
                opuc::z_integral([&](double t) { return -2.0 * ev.log_r(t); }, m, g);
            if (!(est.positive_part <= bound)) ++violations;
            closest = std::min(closest, bound - est.positive_part);
        }
    }
    return {violations == 0, fmt("%d violations, smallest margin=%.3f", violations, closest)};
}

// 5. Product and power-mean estimates on the closed disk, including
// pinned near-boundary and clustered draws.
Outcome disk_estimates() {
    const opuc::SuiteReport prod = opuc::run_disk_product_suite(505, 100000);
    const opuc::SuiteReport mean = opuc::run_disk_power_mean_suite(505, 100000);
    const std::size_t bad = prod.violations + mean.violations;
    return {bad == 0, fmt("%zu violations in %zu trials", bad, prod.trials + mean.trials)};
}

// 6. All shifted-product bounds on random modulated sequences at
// support 1e4.
Outcome shifted_product_bounds() {
    const opuc::SuiteReport rep = opuc::run_product_comparison_suite(606, 1000, 10000);
    return {rep.violations == 0, fmt("%zu violations in %zu trials", rep.violations, rep.trials)};
}

// 7. Summation by parts: closed form vs direct sum and its bound, with
// resonant inputs rejected.
Outcome series_transform() {
    const opuc::SuiteReport rep = opuc::run_series_transform_suite(707, 1000);
    return {rep.violations == 0, fmt("%zu violations in %zu trials", rep.violations, rep.trials)};
}

// 8. Near the closed gap the order-1 test sequence blows up no faster
// than theta^-2: fitted exponent at most 2.3 and a uniform theta^-2
// envelope calibrated at the largest angle.
Outcome growth_exponent() {
    const VerblunskySequence seq = opuc::test_sequence(1, 100000);
    std::vector<double> grid(33);
    for (int i = 0; i < 33; ++i) grid[i] = 1e-2 * std::exp(std::log(10.0) * i / 32.0);
    const opuc::ExponentFit fit = opuc::exponent_fit(seq, grid);
    const PrueferEvaluator ev(seq);
    const double tmax = grid.back();
    const double C = std::abs(-2.0 * ev.log_r(tmax)) * tmax * tmax * 10.0;
    bool enveloped = true;
    for (double t : grid) {
        if (std::abs(-2.0 * ev.log_r(t)) * t * t > C) enveloped = false;
    }
    const bool pass = fit.slope <= 2.3 && enveloped;
    return {pass, fmt("slope=%.4f (cap 2.3), envelope %s", fit.slope, enveloped ? "held" : "broken")};
}

// 9. Desk-scale trend split at order 1: the square-divergent exponent
// keeps draining (DIVERGING) while the summable one settles (BOUNDED).
Outcome trend_split() {
    opuc::QuadratureSpec g;
    g.bulk_points = 4096;
    const std::vector<opuc::EquivalenceRow> rows =
        opuc::equivalence_experiment(1, {0.2, 0.3}, {1000, 10000, 100000}, 0.6, g);
    bool ok = rows.size() == 6;
    for (std::size_t i = 0; ok && i < 3; ++i) ok = rows[i].classification == "DIVERGING";
    for (std::size_t i = 3; ok && i < 6; ++i) ok = rows[i].classification == "BOUNDED";
    std::string got;
    for (std::size_t i = 0; i < rows.size(); i += 3) {
        got += (i ? " / " : "") + fmt("beta=%.1f %s", rows[i].beta, rows[i].classification.c_str());
    }
    return {ok, got};
}

// 10. Identical scan configurations produce byte-identical artifacts.
Outcome scan_determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::current_path() / "acceptance_scratch";
    fs::create_directories(dir);
    const auto run = [&](const std::string& out) {
        const std::string cmd = "cd \"" + dir.string() + "\" && \"" + OPUC_CLI_PATH +
                                "\" sumrule-scan --m 1 --beta 0.3 --N 1000,2000 "
                                "--grid-points 1024 --out " +
                                out + " > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
    };
    const auto slurp = [&](const std::string& name) {
        std::ifstream in(dir / name, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    if (!run("r1.csv") || !run("r2.csv")) return {false, "scan invocation failed"};
    const std::string a = slurp("r1.csv");
    const std::string b = slurp("r2.csv");
    if (a.empty()) return {false, "scan produced no output"};
    return {a == b, fmt("%zu bytes, %s", a.size(), a == b ? "identical" : "DIFFER")};
}

}  // namespace

int main(int argc, char** argv) {
    struct Entry {
        int id;
        const char* name;
        double budget;  // seconds; <= 0 means no limit
        Outcome (*fn)();
    };
    const std::vector<Entry> entries = {
        {1, "orthonormality", 5.0, orthonormality},
        {2, "radius consistency", 10.0, radius_consistency},
        {3, "order-zero identity", 30.0, order_zero_identity},
        {4, "positive-part bound", 0.0, positive_part_bound},
        {5, "disk estimates", 10.0, disk_estimates},
        {6, "shifted-product bounds", 60.0, shifted_product_bounds},
        {7, "series transform", 10.0, series_transform},
        {8, "growth exponent", 60.0, growth_exponent},
        {9, "trend split", 120.0, trend_split},
        {10, "scan determinism", 0.0, scan_determinism},
    };
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;

    int failures = 0;
    int ran = 0;
    for (const Entry& e : entries) {
        if (only != 0 && e.id != only) continue;
        ++ran;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = e.fn();
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = e.budget <= 0.0 || secs <= e.budget;
        const bool pass = out.pass && in_time;
        std::string timing = fmt("%.2fs", secs);
        if (e.budget > 0.0) timing += fmt(" (limit %.0fs)", e.budget);
        if (!in_time) timing += " OVER TIME";
        std::printf("%s %2d %-22s %s  [%s]\n", pass ? "PASS" : "FAIL", e.id, e.name,
                    out.stat.c_str(), timing.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    std::printf("%d/%d criteria passed\n", ran - failures, ran);
    return failures;
}
