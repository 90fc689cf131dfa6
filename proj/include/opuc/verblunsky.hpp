#ifndef OPUC_VERBLUNSKY_HPP
#define OPUC_VERBLUNSKY_HPP

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

// Coefficient sequences on the open unit disk.
//
// A finitely supported sequence (a_0, ..., a_{N-1}) with every |a_n| < 1
// parametrizes a measure on the unit circle through the polynomial
// recursion in szego.hpp.  Indices at or beyond the stored support read
// as exact zeros, which corresponds to extending the measure by its
// Bernstein-Szego truncation.

namespace opuc {

using Cplx = std::complex<double>;

class VerblunskySequence {
  public:
    VerblunskySequence() = default;
    // Throws std::invalid_argument if any entry has modulus >= 1 (or NaN).
    explicit VerblunskySequence(std::vector<Cplx> coeffs);

    std::size_t size() const { return coeffs_.size(); }
    // Zero extension: n >= size() yields 0.
    Cplx at(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Cplx{0.0, 0.0}; }
    Cplx operator[](std::size_t n) const { return at(n); }
    // rho_n = sqrt(1 - |a_n|^2), the recursion normalizer.
    double rho(std::size_t n) const;
    const std::vector<Cplx>& coeffs() const { return coeffs_; }

  private:
    std::vector<Cplx> coeffs_;
};

// a_n = (n+2)^{-1/(2m)} for n = 0, ..., count-1.  Requires m >= 1, count >= 1.
// The sequence lies in l^p exactly for p > 2m, and its consecutive
// differences are absolutely summable.
VerblunskySequence test_sequence(int m, std::size_t count);

// a_n = c * (n+2)^{-beta}.  Requires beta > 0 and 0 < c < 1.
VerblunskySequence power_sequence(double beta, double c, std::size_t count);

// (sum_n |a_n|^p)^{1/p} over the stored support.  Requires p >= 1.
double lp_norm(const VerblunskySequence& seq, double p);

// (da)_n = a_{n+1} - a_n for n = 0, ..., N-1 with the zero extension,
// so the last entry is -a_{N-1}.  Differences can leave the unit disk,
// hence the plain vector return.
std::vector<Cplx> forward_difference(const VerblunskySequence& seq);

// CSV with header "n,re,im", one row per stored coefficient,
// values printed with 17 significant digits for exact round trips.
void write_sequence_csv(const VerblunskySequence& seq, std::ostream& out);
VerblunskySequence read_sequence_csv(std::istream& in);

}  // namespace opuc

#endif
