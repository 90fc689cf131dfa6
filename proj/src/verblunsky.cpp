#include "opuc/verblunsky.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "opuc/io.hpp"

namespace opuc {

VerblunskySequence::VerblunskySequence(std::vector<Cplx> coeffs) : coeffs_(std::move(coeffs)) {
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        // NaN moduli fail this comparison too.
        if (!(std::abs(coeffs_[n]) < 1.0)) {
            throw std::invalid_argument("coefficient " + std::to_string(n) +
                                        " is not inside the open unit disk");
        }
    }
}

double VerblunskySequence::rho(std::size_t n) const {
    // sqrt(1 - |a|^2) via log1p keeps accuracy for |a| near 1.
    const double a2 = std::norm(at(n));
    return std::exp(0.5 * std::log1p(-a2));
}

VerblunskySequence test_sequence(int m, std::size_t count) {
    if (m < 1) throw std::invalid_argument("test_sequence requires m >= 1");
    if (count < 1) throw std::invalid_argument("test_sequence requires count >= 1");
    std::vector<Cplx> a(count);
    const double expo = -1.0 / (2.0 * m);
    for (std::size_t n = 0; n < count; ++n) {
        a[n] = Cplx{std::pow(static_cast<double>(n) + 2.0, expo), 0.0};
    }
    return VerblunskySequence(std::move(a));
}

VerblunskySequence power_sequence(double beta, double c, std::size_t count) {
    if (!(beta > 0.0)) throw std::invalid_argument("power_sequence requires beta > 0");
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("power_sequence requires 0 < c < 1");
    std::vector<Cplx> a(count);
    for (std::size_t n = 0; n < count; ++n) {
        a[n] = Cplx{c * std::pow(static_cast<double>(n) + 2.0, -beta), 0.0};
    }
    return VerblunskySequence(std::move(a));
}

double lp_norm(const VerblunskySequence& seq, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm requires p >= 1");
    double s = 0.0;
    for (std::size_t n = 0; n < seq.size(); ++n) s += std::pow(std::abs(seq[n]), p);
    return std::pow(s, 1.0 / p);
}

std::vector<Cplx> forward_difference(const VerblunskySequence& seq) {
    const std::size_t N = seq.size();
    std::vector<Cplx> d(N);
    for (std::size_t n = 0; n < N; ++n) d[n] = seq.at(n + 1) - seq.at(n);
    return d;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

void write_sequence_csv(const VerblunskySequence& seq, std::ostream& out) {
    out << "n,re,im\n";
    for (std::size_t n = 0; n < seq.size(); ++n) {
        out << n << ',' << format_double(seq[n].real()) << ',' << format_double(seq[n].imag())
            << '\n';
    }
}

VerblunskySequence read_sequence_csv(std::istream& in) {
    std::string line;
    std::vector<Cplx> a;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;  // "n,re,im"
            continue;
        }
        std::istringstream row(line);
        std::string field;
        std::getline(row, field, ',');  // index, positional
        std::getline(row, field, ',');
        const double re = std::stod(field);
        std::getline(row, field, ',');
        const double im = std::stod(field);
        a.emplace_back(re, im);
    }
    return VerblunskySequence(std::move(a));
}

}  // namespace opuc
