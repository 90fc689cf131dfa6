#ifndef OPUC_PRUEFER_HPP
#define OPUC_PRUEFER_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "opuc/verblunsky.hpp"

// Log-domain phase/amplitude dynamics for the recursion in szego.hpp.
//
// Writing phi_n(e^{i eta}) = r_n exp(i (n eta + theta_n)) with r_n > 0
// and a continuously unwrapped phase theta_n, one recursion step becomes
//
//     u_n     = log(1 - conj(a_n) e^{-i ((n+1) eta + 2 theta_n)})
//               - (1/2) log(1 - |a_n|^2),
//     log r_{n+1}   = log r_n + Re u_n,
//     theta_{n+1}   = theta_n + Im u_n,
//
// with the principal branch of log, valid since the argument has
// positive real part for |a_n| < 1.  The truncated-measure weight obeys
// log w(eta) = -2 log r_N once the recursion has passed the support, so
// the weight is available without ever forming polynomial coefficients.
// Cost is O(1) per step at any degree; degree 10^5 and beyond is fine.

namespace opuc {

struct PrueferState {
    double log_r = 0.0;
    double theta = 0.0;   // unwrapped relative phase
    std::size_t n = 0;    // steps taken
    double eta = 0.0;     // circle angle, fixed along a trajectory
};

// One step of the dynamics.  Throws std::invalid_argument if |alpha| >= 1.
PrueferState pruefer_step(const PrueferState& state, Cplx alpha);

// log r_n after n_steps from the zero initial state at angle eta.
// Steps beyond the stored support are free (alpha = 0 leaves the state
// unchanged), so n_steps may exceed seq.size().
double log_r_partial(const VerblunskySequence& seq, double eta, std::size_t n_steps);

struct LogDensityResult {
    double log_w = 0.0;       // -2 log r_N at the full support
    double fluctuation = 0.0; // max - min of log_r over the final 10% of steps
    bool converged = false;   // fluctuation <= tol
};

// Weight logarithm with a tail-fluctuation convergence report.  The
// fluctuation window is the last ceil(N/10) steps (at least one).
// Throws std::invalid_argument unless 0 < eta < 2 pi.
LogDensityResult log_density_limit(const VerblunskySequence& seq, double eta, double tol);

// Reusable engine for one sequence, many angles.  Precomputes conj(a_n)
// and (1/2) log(1 - |a_n|^2); each evaluation tracks the needed phases
// as unit complex numbers (renormalized periodically) instead of calling
// transcendentals per step.  Agrees with pruefer_step composition to
// roundoff and runs at a few tens of nanoseconds per step.
class PrueferEvaluator {
  public:
    explicit PrueferEvaluator(const VerblunskySequence& seq);

    std::size_t support() const { return conj_alpha_.size(); }
    // log r over the full support at angle eta.
    double log_r(double eta) const;
    // log r sampled after each checkpoint step count; checkpoints must be
    // nondecreasing and at most support().
    std::vector<double> log_r_checkpoints(double eta, const std::vector<std::size_t>& checkpoints) const;
    // Same contract as log_density_limit.
    LogDensityResult log_density(double eta, double tol) const;

  private:
    std::vector<Cplx> conj_alpha_;
    std::vector<double> half_log_rho2_;
};

// Partial sums of the phase-modulated coefficient products
//
//     S_N = sum_{n=0}^{N-1} a_n^I conj(a_n)^J e^{i (I-J) ((n+1) eta + 2 theta_n)},
//
// where theta_n is the unwrapped phase before step n at angle eta.
// Requires I - 1 >= J >= 0.  These are the boundary sums whose control
// turns truncated-measure estimates into sum rules.
Cplx oscillatory_sum(const VerblunskySequence& seq, int I, int J, double eta, std::size_t n_terms);

// Summation by parts for phase-modulated series.  For weights Gamma_n of
// finite support L+1, frequency k, phase offset phi, and prefactor f,
// the series
//
//     S = sum_n f Gamma_n e^{i k ((n+1) eta + 2 theta_n)}
//         - sum_n g Gamma_n e^{i k ((n+1) eta + 2 theta_n)} (e^{2 i k (theta_{n+1} - theta_n)} - 1),
//     g = f / (e^{-i (k eta - phi)} - 1),
//
// telescopes to the closed form
//
//     S = g (e^{i phi} Gamma_0 e^{2 i k theta_0}
//            + sum_{n=0}^{L} (e^{i phi} Gamma_{n+1} - Gamma_n) e^{i k ((n+1) eta + 2 theta_{n+1})}),
//
// with Gamma_{L+1} = 0, giving the bound |S| <= 2 |g| sum |e^{i phi} Gamma_{n+1} - Gamma_n|.
// Without a phase track (theta = 0 throughout) the correction sum
// vanishes and S reduces to f sum Gamma_n e^{i k (n+1) eta}.
struct AbelInput {
    int k = 0;           // frequency multiplier; (k, phi) = (0, 0) is rejected
    double phi = 0.0;    // phase offset per index
    double eta = 0.0;    // circle angle
    Cplx f{1.0, 0.0};    // series prefactor
    std::vector<Cplx> gamma;  // Gamma_0, ..., Gamma_L
};

struct AbelResult {
    Cplx sum{0.0, 0.0};  // closed form above
    double bound = 0.0;  // 2 |g| sum_n |e^{i phi} Gamma_{n+1} - Gamma_n|
};

// Phase-free variant (theta = 0).  Throws std::invalid_argument when
// (k, phi) = (0, 0) and std::domain_error when the denominator
// e^{-i (k eta - phi)} - 1 has modulus below 1e-12; the error message
// names the resonant frequency k eta - phi.
AbelResult abel_transform(const AbelInput& input);

// Phase-tracked variant; theta_track holds theta_0, ..., theta_{L+1}
// (one more entry than gamma).  Throws std::invalid_argument on a short
// track, plus the errors above.
AbelResult abel_transform(const AbelInput& input, const std::vector<double>& theta_track);

// Direct summation of the defining series for cross-checking the closed
// form; same error conditions.  Empty theta_track means theta = 0.
Cplx abel_direct_sum(const AbelInput& input, const std::vector<double>& theta_track);

// Unwrapped phases theta_0, ..., theta_{n_steps} at angle eta, for
// feeding abel_transform with a genuine trajectory.
std::vector<double> pruefer_phase_track(const VerblunskySequence& seq, double eta, std::size_t n_steps);

// CSV with header "eta,log_w,fluctuation" over a uniform eta grid on
// [eta_min, 2 pi - eta_min].
void write_log_density_csv(const VerblunskySequence& seq, double eta_min, std::size_t grid_points,
                           double tol, int jobs, std::ostream& out);

}  // namespace opuc

#endif
