#include "opuc/pruefer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "opuc/io.hpp"
#include "opuc/parallel.hpp"

namespace opuc {

namespace {

// Argument of the principal log in one step: 1 - conj(a_n) e^{-i phase}
// with phase = (n+1) eta + 2 theta_n.  Re >= 1 - |a_n| > 0, so the
// principal branch never jumps.
Cplx step_log_argument(Cplx alpha, double phase) {
    return 1.0 - std::conj(alpha) * std::polar(1.0, -phase);
}

double half_log_rho2(Cplx alpha) { return 0.5 * std::log1p(-std::norm(alpha)); }

}  // namespace

PrueferState pruefer_step(const PrueferState& state, Cplx alpha) {
    if (!(std::abs(alpha) < 1.0)) {
        throw std::invalid_argument("pruefer_step requires |alpha| < 1");
    }
    const double phase = (static_cast<double>(state.n) + 1.0) * state.eta + 2.0 * state.theta;
    const Cplx u = std::log(step_log_argument(alpha, phase)) - half_log_rho2(alpha);
    PrueferState next = state;
    next.log_r += u.real();
    next.theta += u.imag();
    next.n += 1;
    return next;
}

double log_r_partial(const VerblunskySequence& seq, double eta, std::size_t n_steps) {
    PrueferState s;
    s.eta = eta;
    // Steps past the support have alpha = 0 and change nothing.
    const std::size_t active = std::min(n_steps, seq.size());
    for (std::size_t n = 0; n < active; ++n) s = pruefer_step(s, seq[n]);
    return s.log_r;
}

PrueferEvaluator::PrueferEvaluator(const VerblunskySequence& seq) {
    const std::size_t N = seq.size();
    conj_alpha_.resize(N);
    half_log_rho2_.resize(N);
    for (std::size_t n = 0; n < N; ++n) {
        conj_alpha_[n] = std::conj(seq[n]);
        half_log_rho2_[n] = half_log_rho2(seq[n]);
    }
}

// The hot loop tracks w = e^{-i (n+1) eta} and u = e^{-2 i theta_n} as
// unit complex numbers.  With v = 1 - conj(a_n) w u,
//
//     Re(step log) = (1/2) log |v|^2,   theta_{n+1} = theta_n + arg v,
//
// so u picks up conj(v)^2 / |v|^2 and w one factor of e^{-i eta}.
// Periodic renormalization of u caps the modulus drift near 1e-13.
double PrueferEvaluator::log_r(double eta) const {
    const Cplx rot = std::polar(1.0, -eta);
    Cplx w = rot;
    Cplx u{1.0, 0.0};
    double lr = 0.0;
    const std::size_t N = conj_alpha_.size();
    for (std::size_t n = 0; n < N; ++n) {
        const Cplx v = 1.0 - conj_alpha_[n] * (w * u);
        const double m2 = std::norm(v);
        lr += 0.5 * std::log(m2) - half_log_rho2_[n];
        const Cplx cv = std::conj(v);
        u *= (cv * cv) / m2;
        w *= rot;
        if ((n & 1023u) == 1023u) u /= std::abs(u);
    }
    return lr;
}

std::vector<double> PrueferEvaluator::log_r_checkpoints(
    double eta, const std::vector<std::size_t>& checkpoints) const {
    const std::size_t N = conj_alpha_.size();
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] > N || (i > 0 && checkpoints[i] < checkpoints[i - 1])) {
            throw std::invalid_argument("log_r_checkpoints requires nondecreasing counts within the support");
        }
    }
    std::vector<double> out(checkpoints.size());
    const Cplx rot = std::polar(1.0, -eta);
    Cplx w = rot;
    Cplx u{1.0, 0.0};
    double lr = 0.0;
    std::size_t ci = 0;
    for (std::size_t n = 0; n <= N; ++n) {
        while (ci < checkpoints.size() && checkpoints[ci] == n) out[ci++] = lr;
        if (n == N) break;
        const Cplx v = 1.0 - conj_alpha_[n] * (w * u);
        const double m2 = std::norm(v);
        lr += 0.5 * std::log(m2) - half_log_rho2_[n];
        const Cplx cv = std::conj(v);
        u *= (cv * cv) / m2;
        w *= rot;
        if ((n & 1023u) == 1023u) u /= std::abs(u);
    }
    return out;
}

LogDensityResult PrueferEvaluator::log_density(double eta, double tol) const {
    const std::size_t N = conj_alpha_.size();
    LogDensityResult res;
    if (N == 0) {
        res.converged = true;
        return res;
    }
    const std::size_t window = std::max<std::size_t>(1, (N + 9) / 10);
    const std::size_t wstart = N - window;  // window covers log r_{wstart+1..N}
    const Cplx rot = std::polar(1.0, -eta);
    Cplx w = rot;
    Cplx u{1.0, 0.0};
    double lr = 0.0;
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (std::size_t n = 0; n < N; ++n) {
        const Cplx v = 1.0 - conj_alpha_[n] * (w * u);
        const double m2 = std::norm(v);
        lr += 0.5 * std::log(m2) - half_log_rho2_[n];
        const Cplx cv = std::conj(v);
        u *= (cv * cv) / m2;
        w *= rot;
        if ((n & 1023u) == 1023u) u /= std::abs(u);
        if (n >= wstart) {
            if (first) {
                lo = hi = lr;
                first = false;
            } else {
                lo = std::min(lo, lr);
                hi = std::max(hi, lr);
            }
        }
    }
    res.log_w = -2.0 * lr;
    res.fluctuation = hi - lo;
    res.converged = res.fluctuation <= tol;
    return res;
}

LogDensityResult log_density_limit(const VerblunskySequence& seq, double eta, double tol) {
    if (!(eta > 0.0 && eta < 2.0 * std::numbers::pi)) {
        throw std::invalid_argument("log_density_limit requires 0 < eta < 2 pi");
    }
    return PrueferEvaluator(seq).log_density(eta, tol);
}

namespace {

Cplx int_pow(Cplx z, int p) {
    Cplx r{1.0, 0.0};
    for (int i = 0; i < p; ++i) r *= z;
    return r;
}

}  // namespace

Cplx oscillatory_sum(const VerblunskySequence& seq, int I, int J, double eta,
                     std::size_t n_terms) {
    if (!(J >= 0 && I >= J + 1)) {
        throw std::invalid_argument("oscillatory_sum requires I - 1 >= J >= 0");
    }
    const std::size_t N = std::min(n_terms, seq.size());  // zero extension adds nothing
    const Cplx rot = std::polar(1.0, -eta);
    Cplx w = rot;        // e^{-i (n+1) eta}
    Cplx u{1.0, 0.0};    // e^{-2 i theta_n}
    Cplx sum{0.0, 0.0};
    for (std::size_t n = 0; n < N; ++n) {
        const Cplx a = seq[n];
        const Cplx wu = w * u;
        // e^{i (I-J) ((n+1) eta + 2 theta_n)} = conj(w u)^{I-J}
        sum += int_pow(a, I) * int_pow(std::conj(a), J) * int_pow(std::conj(wu), I - J);
        const Cplx v = 1.0 - std::conj(a) * wu;
        const double m2 = std::norm(v);
        const Cplx cv = std::conj(v);
        u *= (cv * cv) / m2;
        w *= rot;
        if ((n & 1023u) == 1023u) u /= std::abs(u);
    }
    return sum;
}

std::vector<double> pruefer_phase_track(const VerblunskySequence& seq, double eta,
                                        std::size_t n_steps) {
    std::vector<double> track(n_steps + 1);
    PrueferState s;
    s.eta = eta;
    track[0] = 0.0;
    for (std::size_t n = 0; n < n_steps; ++n) {
        s = pruefer_step(s, seq.at(n));
        track[n + 1] = s.theta;
    }
    return track;
}

namespace {

// Shared validation: telescoping direction and resonance guard.
Cplx abel_g(const AbelInput& in) {
    if (in.k == 0 && in.phi == 0.0) {
        throw std::invalid_argument("abel_transform: (k, phi) = (0, 0) has no telescoping direction");
    }
    const double freq = static_cast<double>(in.k) * in.eta - in.phi;
    const Cplx denom = std::polar(1.0, -freq) - 1.0;
    if (std::abs(denom) < 1e-12) {
        throw std::domain_error("abel_transform: resonant frequency k*eta - phi = " +
                                format_double(freq) + ", denominator modulus below 1e-12");
    }
    return in.f / denom;
}

AbelResult abel_closed_form(const AbelInput& in, const std::vector<double>* theta) {
    const Cplx g = abel_g(in);
    AbelResult res;
    if (in.gamma.empty()) return res;
    const std::size_t L = in.gamma.size() - 1;
    if (theta && theta->size() < in.gamma.size() + 1) {
        throw std::invalid_argument("abel_transform: theta_track must hold gamma.size() + 1 phases");
    }
    const Cplx eiphi = std::polar(1.0, in.phi);
    const double k = static_cast<double>(in.k);
    const double theta0 = theta ? (*theta)[0] : 0.0;
    Cplx acc = eiphi * in.gamma[0] * std::polar(1.0, 2.0 * k * theta0);
    double bound_sum = std::abs(in.gamma[0]);  // |e^{i phi} Gamma_0| boundary term
    for (std::size_t n = 0; n <= L; ++n) {
        const Cplx gnext = n + 1 <= L ? in.gamma[n + 1] : Cplx{0.0, 0.0};
        const Cplx diff = eiphi * gnext - in.gamma[n];
        const double thn1 = theta ? (*theta)[n + 1] : 0.0;
        acc += diff * std::polar(1.0, k * ((static_cast<double>(n) + 1.0) * in.eta + 2.0 * thn1));
        bound_sum += std::abs(diff);
    }
    res.sum = g * acc;
    res.bound = 2.0 * std::abs(g) * bound_sum;
    return res;
}

}  // namespace

AbelResult abel_transform(const AbelInput& input) { return abel_closed_form(input, nullptr); }

AbelResult abel_transform(const AbelInput& input, const std::vector<double>& theta_track) {
    return abel_closed_form(input, &theta_track);
}

Cplx abel_direct_sum(const AbelInput& input, const std::vector<double>& theta_track) {
    const Cplx g = abel_g(input);
    if (input.gamma.empty()) return Cplx{0.0, 0.0};
    const bool tracked = !theta_track.empty();
    if (tracked && theta_track.size() < input.gamma.size() + 1) {
        throw std::invalid_argument("abel_direct_sum: theta_track must hold gamma.size() + 1 phases");
    }
    const double k = static_cast<double>(input.k);
    Cplx sum{0.0, 0.0};
    for (std::size_t n = 0; n < input.gamma.size(); ++n) {
        const double thn = tracked ? theta_track[n] : 0.0;
        const double thn1 = tracked ? theta_track[n + 1] : 0.0;
        const Cplx osc = std::polar(1.0, k * ((static_cast<double>(n) + 1.0) * input.eta + 2.0 * thn));
        const Cplx correction = std::polar(1.0, 2.0 * k * (thn1 - thn)) - 1.0;
        sum += input.f * input.gamma[n] * osc - g * input.gamma[n] * osc * correction;
    }
    return sum;
}

void write_log_density_csv(const VerblunskySequence& seq, double eta_min,
                           std::size_t grid_points, double tol, int jobs, std::ostream& out) {
    if (!(eta_min > 0.0 && eta_min < std::numbers::pi)) {
        throw std::invalid_argument("write_log_density_csv requires 0 < eta_min < pi");
    }
    if (grid_points < 2) {
        throw std::invalid_argument("write_log_density_csv requires at least 2 grid points");
    }
    const PrueferEvaluator eval(seq);
    const double lo = eta_min;
    const double hi = 2.0 * std::numbers::pi - eta_min;
    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    std::vector<LogDensityResult> rows(grid_points);
    std::vector<double> etas(grid_points);
    parallel_for(grid_points, jobs, [&](std::size_t i) {
        etas[i] = lo + step * static_cast<double>(i);
        rows[i] = eval.log_density(etas[i], tol);
    });
    out << "eta,log_w,fluctuation\n";
    for (std::size_t i = 0; i < grid_points; ++i) {
        out << format_double(etas[i]) << ',' << format_double(rows[i].log_w) << ','
            << format_double(rows[i].fluctuation) << '\n';
    }
}

}  // namespace opuc
