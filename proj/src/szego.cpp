#include "opuc/szego.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "opuc/io.hpp"

namespace opuc {

PolynomialPair initial_pair() {
    PolynomialPair p;
    p.phi = {Cplx{1.0, 0.0}};
    p.phi_star = {Cplx{1.0, 0.0}};
    return p;
}

PolynomialPair szego_step(const PolynomialPair& pair, Cplx alpha) {
    if (!(std::abs(alpha) < 1.0)) {
        throw std::invalid_argument("szego_step requires |alpha| < 1");
    }
    const double rho = std::exp(0.5 * std::log1p(-std::norm(alpha)));
    const std::size_t len = pair.phi.size();
    PolynomialPair next;
    next.phi.assign(len + 1, Cplx{0.0, 0.0});
    // z phi shifts coefficients up one power.
    for (std::size_t j = 0; j < len; ++j) next.phi[j + 1] = pair.phi[j];
    const Cplx ca = std::conj(alpha);
    for (std::size_t j = 0; j < len; ++j) next.phi[j] -= ca * pair.phi_star[j];
    for (auto& c : next.phi) c /= rho;
    // Reversed conjugate keeps the pair exactly consistent.
    next.phi_star.assign(len + 1, Cplx{0.0, 0.0});
    for (std::size_t j = 0; j <= len; ++j) next.phi_star[j] = std::conj(next.phi[len - j]);
    return next;
}

PolynomialPair run_szego_recursion(const VerblunskySequence& seq, std::size_t n_steps) {
    PolynomialPair p = initial_pair();
    for (std::size_t n = 0; n < n_steps; ++n) p = szego_step(p, seq.at(n));
    return p;
}

std::pair<Cplx, Cplx> evaluate_pair(const PolynomialPair& pair, double theta) {
    const Cplx z = std::polar(1.0, theta);
    Cplx v{0.0, 0.0}, vs{0.0, 0.0};
    for (std::size_t j = pair.phi.size(); j-- > 0;) {
        v = v * z + pair.phi[j];
        vs = vs * z + pair.phi_star[j];
    }
    return {v, vs};
}

double bernstein_szego_density(const VerblunskySequence& seq, double theta) {
    const PolynomialPair p = run_szego_recursion(seq, seq.size());
    const Cplx v = evaluate_pair(p, theta).first;
    return 1.0 / std::norm(v);
}

void write_density_csv(const VerblunskySequence& seq, std::size_t grid_points, std::ostream& out) {
    const PolynomialPair p = run_szego_recursion(seq, seq.size());
    const double h = 2.0 * std::numbers::pi / static_cast<double>(grid_points);
    out << "theta,w\n";
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double theta = (static_cast<double>(i) + 0.5) * h;
        const double w = 1.0 / std::norm(evaluate_pair(p, theta).first);
        out << format_double(theta) << ',' << format_double(w) << '\n';
    }
}

}  // namespace opuc
