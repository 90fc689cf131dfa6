#ifndef OPUC_SZEGO_HPP
#define OPUC_SZEGO_HPP

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "opuc/verblunsky.hpp"

// Orthonormal polynomial recursion on the unit circle.
//
// Given coefficients a_n on the open disk and rho_n = sqrt(1 - |a_n|^2),
// the pair (phi_n, phi_n*) evolves by
//
//     phi_{n+1}(z)  = (z phi_n(z) - conj(a_n) phi_n*(z)) / rho_n,
//     phi_n*(z)     = z^n conj(phi_n(1/conj(z))),
//
// starting from phi_0 = phi_0* = 1.  phi_n* is maintained explicitly as
// the conjugated coefficient reversal after every step rather than by a
// coupled recursion, which keeps the pair consistent to roundoff.
//
// The truncated measure with weight w_N = 1 / |phi_N|^2 on the circle
// (normalized arc length) makes phi_0, ..., phi_N orthonormal.
//
// Coefficients are stored in the monomial basis, ascending powers.  That
// basis is exponentially ill conditioned in the degree, so polynomial
// evaluation here is a small-N reference; keep N at most a couple of
// thousand and prefer the log-domain engine in pruefer.hpp for anything
// large.

namespace opuc {

struct PolynomialPair {
    std::vector<Cplx> phi;       // phi_n, monomial coefficients, degree n
    std::vector<Cplx> phi_star;  // phi_n*, same length
    std::size_t degree() const { return phi.empty() ? 0 : phi.size() - 1; }
};

// Degree-zero pair phi = phi* = 1.
PolynomialPair initial_pair();

// One recursion step.  Throws std::invalid_argument if |alpha| >= 1.
PolynomialPair szego_step(const PolynomialPair& pair, Cplx alpha);

// n_steps applications starting from the initial pair; steps past the
// stored support use alpha = 0.
PolynomialPair run_szego_recursion(const VerblunskySequence& seq, std::size_t n_steps);

// (phi(e^{i theta}), phi*(e^{i theta})) by Horner evaluation.
std::pair<Cplx, Cplx> evaluate_pair(const PolynomialPair& pair, double theta);

// w_N(theta) = 1 / |phi_N(e^{i theta})|^2 with N = seq.size().
double bernstein_szego_density(const VerblunskySequence& seq, double theta);

// CSV with header "theta,w": the density on a uniform grid of
// grid_points midpoints of [0, 2 pi).
void write_density_csv(const VerblunskySequence& seq, std::size_t grid_points, std::ostream& out);

}  // namespace opuc

#endif
