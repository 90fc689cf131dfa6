#include "opuc/sumrule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "opuc/io.hpp"
#include "opuc/parallel.hpp"
#include "opuc/pruefer.hpp"

namespace opuc {

double TrigPolyCoeffs::at(int k) const {
    const int a = k < 0 ? -k : k;
    return a <= m ? b[static_cast<std::size_t>(a)] : 0.0;
}

TrigPolyCoeffs weight_poly_coeffs(int m) {
    if (m < 0) throw std::invalid_argument("weight_poly_coeffs requires m >= 0");
    // Row 2m of Pascal's triangle in extended precision, then
    // b_k = (-1)^k binom(2m, m+k) / 2^m.
    const int rows = 2 * m;
    std::vector<long double> row(static_cast<std::size_t>(rows) + 1, 0.0L);
    row[0] = 1.0L;
    for (int r = 1; r <= rows; ++r) {
        for (int j = r; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    }
    const long double scale = std::pow(2.0L, static_cast<long double>(m));
    TrigPolyCoeffs out;
    out.m = m;
    out.b.resize(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        const long double v = row[static_cast<std::size_t>(m + k)] / scale;
        out.b[static_cast<std::size_t>(k)] = static_cast<double>(k % 2 == 0 ? v : -v);
    }
    return out;
}

namespace {

struct QuadratureAccum {
    double pos = 0.0;
    double neg = 0.0;
    double total() const { return pos - neg; }
};

// Composite midpoint rule on [lo, hi] accumulated in index order; the
// parallel path only fills the per-abscissa value buffer, so the result
// is independent of the job count.
QuadratureAccum midpoint_panel(const std::function<double(double)>& log_w, int m, double lo,
                               double hi, int points, int jobs, std::vector<double>& buffer) {
    const double h = (hi - lo) / static_cast<double>(points);
    buffer.resize(static_cast<std::size_t>(points));
    parallel_for(static_cast<std::size_t>(points), jobs, [&](std::size_t i) {
        const double theta = lo + (static_cast<double>(i) + 0.5) * h;
        const double weight = std::pow(1.0 - std::cos(theta), m);
        buffer[i] = weight * log_w(theta);
    });
    QuadratureAccum acc;
    const double scale = h / (2.0 * std::numbers::pi);
    for (int i = 0; i < points; ++i) {
        const double v = buffer[static_cast<std::size_t>(i)] * scale;
        if (v >= 0.0) {
            acc.pos += v;
        } else {
            acc.neg -= v;
        }
    }
    return acc;
}

// Richardson table in the cutoff ratio 4; the excluded-interval error
// expands in odd powers t, t^3, ..., so elimination factors are 4^{2j-1}.
double richardson(const std::vector<double>& T) {
    std::vector<double> r = T;
    const std::size_t L = r.size();
    for (std::size_t j = 1; j < L; ++j) {
        const double factor = std::pow(4.0, 2.0 * static_cast<double>(j) - 1.0);
        for (std::size_t i = L; i-- > j;) {
            r[i] = (factor * r[i] - r[i - 1]) / (factor - 1.0);
        }
    }
    return r[L - 1];
}

}  // namespace

ZEstimate z_integral(const std::function<double(double)>& log_w_sampler, int m,
                     const QuadratureSpec& grid) {
    if (m < 0) throw std::invalid_argument("z_integral requires m >= 0");
    QuadratureSpec spec = grid;
    if (spec.theta_min <= 0.0) spec.theta_min = std::numbers::pi * 0x1p-14;
    if (spec.refine_levels < 1 || spec.refine_levels > 12) {
        throw std::invalid_argument("z_integral requires 1 <= refine_levels <= 12");
    }
    if (spec.bulk_points < 2 || spec.tail_points < 1) {
        throw std::invalid_argument("z_integral requires bulk_points >= 2 and tail_points >= 1");
    }
    const int levels = spec.refine_levels;
    std::vector<double> cut(static_cast<std::size_t>(levels));
    for (int l = 0; l < levels; ++l) {
        cut[static_cast<std::size_t>(l)] = spec.theta_min * std::pow(4.0, levels - 1 - l);
    }
    if (!(cut[0] < std::numbers::pi / 2.0)) {
        throw std::invalid_argument("z_integral requires theta_min * 4^(levels-1) < pi/2");
    }

    std::vector<double> buffer;
    // Level 0 covers the bulk; each finer level appends a band on each
    // side, so partial sums are cumulative by construction.
    const QuadratureAccum bulk = midpoint_panel(log_w_sampler, m, cut[0],
                                                2.0 * std::numbers::pi - cut[0],
                                                spec.bulk_points, spec.jobs, buffer);
    std::vector<QuadratureAccum> partial(static_cast<std::size_t>(levels));
    partial[0] = bulk;
    for (int l = 1; l < levels; ++l) {
        const double fine = cut[static_cast<std::size_t>(l)];
        const double coarse = cut[static_cast<std::size_t>(l - 1)];
        const QuadratureAccum left = midpoint_panel(log_w_sampler, m, fine, coarse,
                                                    spec.tail_points, spec.jobs, buffer);
        const QuadratureAccum right =
            midpoint_panel(log_w_sampler, m, 2.0 * std::numbers::pi - coarse,
                           2.0 * std::numbers::pi - fine, spec.tail_points, spec.jobs, buffer);
        partial[static_cast<std::size_t>(l)].pos =
            partial[static_cast<std::size_t>(l - 1)].pos + left.pos + right.pos;
        partial[static_cast<std::size_t>(l)].neg =
            partial[static_cast<std::size_t>(l - 1)].neg + left.neg + right.neg;
    }

    ZEstimate est;
    est.m = m;
    est.grid = spec;
    est.refinements.resize(static_cast<std::size_t>(levels));
    std::vector<double> pos(static_cast<std::size_t>(levels)), neg(static_cast<std::size_t>(levels));
    for (int l = 0; l < levels; ++l) {
        pos[static_cast<std::size_t>(l)] = partial[static_cast<std::size_t>(l)].pos;
        neg[static_cast<std::size_t>(l)] = partial[static_cast<std::size_t>(l)].neg;
        est.refinements[static_cast<std::size_t>(l)] = partial[static_cast<std::size_t>(l)].total();
    }

    bool cauchy = true;
    bool monotone_down = true;
    for (int l = 1; l < levels; ++l) {
        const double diff =
            est.refinements[static_cast<std::size_t>(l)] - est.refinements[static_cast<std::size_t>(l - 1)];
        if (std::abs(diff) > spec.cauchy_tol) cauchy = false;
        if (!(diff < 0.0)) monotone_down = false;
    }
    if (cauchy || levels == 1) {
        est.positive_part = richardson(pos);
        est.negative_part = richardson(neg);
        est.value = est.positive_part - est.negative_part;
    } else if (monotone_down) {
        // Mass keeps escaping toward the excluded set: report divergence.
        est.divergent = true;
        est.positive_part = pos.back();
        est.negative_part = neg.back();
        est.value = -std::numeric_limits<double>::infinity();
    } else {
        // Oscillating refinements: no extrapolation, surface the finest raw sum.
        est.inconclusive = true;
        est.positive_part = pos.back();
        est.negative_part = neg.back();
        est.value = est.refinements.back();
    }
    return est;
}

double szego_identity_m0(const VerblunskySequence& seq) {
    double s = 0.0;
    for (std::size_t n = 0; n < seq.size(); ++n) s += std::log1p(-std::norm(seq[n]));
    return s;
}

SumRuleApproximant make_approximant(int m, std::vector<double> d) {
    if (m < 0) throw std::invalid_argument("make_approximant requires m >= 0");
    if (d.size() > static_cast<std::size_t>(m)) {
        throw std::invalid_argument("make_approximant: d has more than m entries");
    }
    SumRuleApproximant a;
    a.m = m;
    a.b0 = weight_poly_coeffs(m).b[0];
    d.resize(static_cast<std::size_t>(m), 0.0);
    a.d = std::move(d);
    return a;
}

double f_series_eval(const SumRuleApproximant& approx, Cplx alpha) {
    const double x = std::norm(alpha);
    if (!(x < 1.0)) throw std::invalid_argument("f_series_eval requires |alpha| < 1");
    double poly = 0.0;
    for (std::size_t k = approx.d.size(); k-- > 0;) poly = (poly + approx.d[k]) * x;
    return approx.b0 * 0.5 * std::log1p(-x) + poly;
}

double series_coefficient(const SumRuleApproximant& approx, int k) {
    if (k < 1) throw std::invalid_argument("series_coefficient requires k >= 1");
    const double tail = -approx.b0 / (2.0 * static_cast<double>(k));
    if (k <= approx.m) return approx.d[static_cast<std::size_t>(k - 1)] + tail;
    return tail;
}

ExponentFit exponent_fit(const VerblunskySequence& seq, const std::vector<double>& theta_grid) {
    if (theta_grid.empty()) throw std::invalid_argument("exponent_fit requires a nonempty grid");
    double lo = theta_grid[0], hi = theta_grid[0];
    for (double t : theta_grid) {
        if (!(t > 0.0 && t <= std::numbers::pi / 4.0)) {
            throw std::invalid_argument("exponent_fit grid must lie in (0, pi/4]");
        }
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    if (!(hi / lo >= 10.0)) {
        throw std::invalid_argument("exponent_fit grid must span at least one decade");
    }
    const PrueferEvaluator eval(seq);
    std::vector<double> xs, ys;
    xs.reserve(theta_grid.size());
    ys.reserve(theta_grid.size());
    ExponentFit fit;
    for (double t : theta_grid) {
        const double lw = -2.0 * eval.log_r(t);
        if (std::abs(lw) < 1e-12) {
            ++fit.excluded;  // flat point carries no exponent information
            continue;
        }
        xs.push_back(std::log(1.0 / t));
        ys.push_back(std::log(std::abs(lw)));
    }
    if (xs.size() < 2) {
        throw std::domain_error("exponent_fit: fewer than two usable grid points, weight is flat near 0");
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double det = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / n;
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        rss += r * r;
    }
    fit.residual = std::sqrt(rss / n);
    return fit;
}

std::vector<EquivalenceRow> equivalence_experiment(int m, const std::vector<double>& beta_list,
                                                   const std::vector<std::size_t>& N_list,
                                                   double c, const QuadratureSpec& grid) {
    if (m < 0) throw std::invalid_argument("equivalence_experiment requires m >= 0");
    if (beta_list.empty() || N_list.empty()) {
        throw std::invalid_argument("equivalence_experiment requires nonempty beta_list and N_list");
    }
    for (std::size_t i = 0; i < N_list.size(); ++i) {
        if (N_list[i] < 1 || (i > 0 && N_list[i] <= N_list[i - 1])) {
            throw std::invalid_argument("equivalence_experiment requires strictly increasing N_list");
        }
    }
    const double p = 2.0 * static_cast<double>(m) + 2.0;
    std::vector<EquivalenceRow> rows;
    rows.reserve(beta_list.size() * N_list.size());
    for (double beta : beta_list) {
        std::vector<double> Z(N_list.size());
        const std::size_t base = rows.size();
        for (std::size_t i = 0; i < N_list.size(); ++i) {
            const VerblunskySequence seq = power_sequence(beta, c, N_list[i]);
            const PrueferEvaluator eval(seq);
            const ZEstimate est = z_integral(
                [&eval](double theta) { return -2.0 * eval.log_r(theta); }, m, grid);
            Z[i] = est.value;
            EquivalenceRow row;
            row.m = m;
            row.beta = beta;
            row.N = N_list[i];
            row.Z = est.value;
            row.lp_partial_norm = lp_norm(seq, p);
            rows.push_back(std::move(row));
        }
        bool monotone_down = true;
        for (std::size_t i = 1; i < Z.size(); ++i) {
            if (!(Z[i] < Z[i - 1])) monotone_down = false;
        }
        const bool big_drop = Z.front() - Z.back() >= 1.0;
        double tv = 0.0;
        for (std::size_t i = (Z.size() - 1) / 2; i + 1 < Z.size(); ++i) tv += std::abs(Z[i + 1] - Z[i]);
        std::string cls;
        if (monotone_down && big_drop) {
            cls = "DIVERGING";
        } else if (tv <= 0.1) {
            cls = "BOUNDED";
        } else {
            cls = "INCONCLUSIVE";
        }
        for (std::size_t i = 0; i < N_list.size(); ++i) rows[base + i].classification = cls;
    }
    return rows;
}

void write_equivalence_csv(const std::vector<EquivalenceRow>& rows, std::ostream& out) {
    out << "m,beta,N,Z,lp_partial_norm,classification\n";
    for (const auto& r : rows) {
        out << r.m << ',' << format_double(r.beta) << ',' << r.N << ',' << format_double(r.Z)
            << ',' << format_double(r.lp_partial_norm) << ',' << r.classification << '\n';
    }
}

}  // namespace opuc
