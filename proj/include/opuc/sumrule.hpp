#ifndef OPUC_SUMRULE_HPP
#define OPUC_SUMRULE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "opuc/verblunsky.hpp"

// Higher-order entropy integrals and their finite-N experiments.
//
// The object of interest is
//
//     Z_m(w) = (1/2 pi) int_0^{2 pi} (1 - cos theta)^m log w(theta) d theta,
//
// whose finiteness is equivalent to a coefficient-side condition on the
// generating sequence.  (1 - cos theta)^m expands into the cosine
// polynomial sum_k b_k e^{i k theta} with
//
//     b_k = (-1)^k binom(2m, m+k) / 2^m,   |k| <= m,
//
// so b_{-k} = b_k, b_0 = binom(2m, m) / 2^m > 0, and sum_k b_k = 0 for
// m >= 1; the positive part of Z_m is bounded by 2^m since log w <= w
// pointwise and the truncated measures are normalized.
//
// The integrand has integrable -log singularities where w vanishes on
// the boundary, so the quadrature excludes a shrinking neighborhood of
// theta = 0 (where the test sequences concentrate their singularity),
// evaluates bulk and tail panels by composite midpoint rules, and uses a
// Richardson table in the cutoff to remove the leading excluded-interval
// error terms t, t^3, ...  Non-Cauchy refinement sequences are reported
// as divergent (monotone) or inconclusive (oscillating) instead of being
// extrapolated.

namespace opuc {

struct TrigPolyCoeffs {
    int m = 0;
    std::vector<double> b;  // b[k] for k = 0..m
    double at(int k) const;  // symmetric lookup, zero beyond |k| > m
};

// Cosine-polynomial coefficients of (1 - cos theta)^m.  Requires m >= 0.
TrigPolyCoeffs weight_poly_coeffs(int m);

struct QuadratureSpec {
    double theta_min = 0.0;  // finest cutoff; 0 selects pi * 2^-14
    int refine_levels = 3;   // cutoffs theta_min * 4^{levels-1-l}, l = 0..levels-1
    int bulk_points = 1 << 16;
    int tail_points = 256;   // per side, per refinement band
    double cauchy_tol = 0.05;  // divergence classifier, not an accuracy knob
    int jobs = 1;            // parallel evaluation only; output is identical for any value
};

struct ZEstimate {
    double value = 0.0;          // extrapolated integral, or the flagged fallback below
    double positive_part = 0.0;  // integral of max(integrand, 0), same extrapolation
    double negative_part = 0.0;  // integral of max(-integrand, 0); value = pos - neg exactly
    bool divergent = false;      // refinements monotone and non-Cauchy; value = -infinity
    bool inconclusive = false;   // refinements oscillating and non-Cauchy; value = finest raw sum
    std::vector<double> refinements;  // cumulative sums T_l per cutoff level, coarse to fine
    QuadratureSpec grid;
    int m = 0;
};

// Z_m for a caller-supplied sampler of log w.  The sampler is evaluated
// only at angles in (0, 2 pi); total abscissa count is bulk_points plus
// 2 * tail_points * (refine_levels - 1).
ZEstimate z_integral(const std::function<double(double)>& log_w_sampler, int m,
                     const QuadratureSpec& grid = {});

// Coefficient side of the order-zero identity: sum_n log(1 - |a_n|^2)
// over the support, which equals Z_0 of the truncated measure.
double szego_identity_m0(const VerblunskySequence& seq);

// Single-coefficient integrand model f(a) = b_0 log sqrt(1 - |a|^2)
//                                           + sum_{k=1}^m d_k |a|^{2k}.
// Its Taylor coefficients in |a|^2 are c_k = d_k - b_0 / (2k) for k <= m
// and c_k = -b_0 / (2k) beyond, so c_{m+1} = -b_0 / (2(m+1)) < 0: past
// the polynomial correction the series always turns negative, which is
// what pins the l^{2m+2} coefficient condition.
struct SumRuleApproximant {
    int m = 0;
    double b0 = 0.0;
    std::vector<double> d;  // d[k-1] = d_k, k = 1..m
};

// d may be shorter than m; missing entries default to 0.
SumRuleApproximant make_approximant(int m, std::vector<double> d = {});
double f_series_eval(const SumRuleApproximant& approx, Cplx alpha);
// c_k above; requires k >= 1.
double series_coefficient(const SumRuleApproximant& approx, int k);

struct ExponentFit {
    double slope = 0.0;      // of log |log w| against log (1/theta)
    double intercept = 0.0;
    double residual = 0.0;   // root mean square over the fitted points
    int excluded = 0;        // grid points dropped for |log w| < 1e-12
};

// Least-squares growth exponent of |log w| toward theta = 0 for the
// truncated measure of seq.  The grid must lie in (0, pi/4] and span at
// least one decade.  Throws std::domain_error when every point is
// excluded (identically tiny log w, e.g. the free sequence).
ExponentFit exponent_fit(const VerblunskySequence& seq, const std::vector<double>& theta_grid);

struct EquivalenceRow {
    int m = 0;
    double beta = 0.0;
    std::size_t N = 0;
    double Z = 0.0;               // z_integral value for the truncation
    double lp_partial_norm = 0.0; // l^{2m+2} norm of the first N coefficients
    std::string classification;   // shared across the rows of one beta
};

// Z_m(N) across N_list for the power sequences c (n+2)^{-beta}; each
// beta's trend is classified as
//   DIVERGING    when Z is strictly decreasing and drops by >= 1 overall,
//   BOUNDED      when the total variation over the upper half of N_list
//                (indices >= (len-1)/2) is <= 0.1,
//   INCONCLUSIVE otherwise.
// Rows are emitted in (beta, N) order.
std::vector<EquivalenceRow> equivalence_experiment(int m, const std::vector<double>& beta_list,
                                                   const std::vector<std::size_t>& N_list,
                                                   double c = 0.6, const QuadratureSpec& grid = {});

// CSV with header "m,beta,N,Z,lp_partial_norm,classification".
void write_equivalence_csv(const std::vector<EquivalenceRow>& rows, std::ostream& out);

}  // namespace opuc

#endif
