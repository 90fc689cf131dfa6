#include "opuc/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace opuc {

namespace {

void require_disk(const std::vector<Cplx>& z, const char* who) {
    if (z.empty()) throw std::invalid_argument(std::string(who) + " requires nonempty input");
    for (const Cplx& v : z) {
        if (!(std::abs(v) <= 1.0)) {
            throw std::invalid_argument(std::string(who) + " requires |z| <= 1");
        }
    }
}

double int_pow(double x, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

}  // namespace

CheckResult check_telescope_product(const std::vector<Cplx>& z, const std::vector<Cplx>& zp,
                                    double slack) {
    require_disk(z, "check_telescope_product");
    require_disk(zp, "check_telescope_product");
    if (z.size() != zp.size()) {
        throw std::invalid_argument("check_telescope_product requires equal lengths");
    }
    Cplx p{1.0, 0.0}, pp{1.0, 0.0};
    double worst = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        p *= z[j];
        pp *= zp[j];
        worst = std::max(worst, std::abs(z[j] - zp[j]));
    }
    CheckResult res;
    res.lhs = std::abs(p - pp);
    res.rhs = static_cast<double>(z.size()) * worst;
    res.ok = res.lhs <= res.rhs + slack;
    return res;
}

CheckResult check_power_mean(const std::vector<Cplx>& z, double slack) {
    require_disk(z, "check_power_mean");
    const std::size_t k = z.size();
    Cplx mean{0.0, 0.0}, prod{1.0, 0.0};
    for (const Cplx& v : z) {
        Cplx vk{1.0, 0.0};
        for (std::size_t i = 0; i < k; ++i) vk *= v;
        mean += vk;
        prod *= v;
    }
    mean /= static_cast<double>(k);
    double spread = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            spread = std::max(spread, std::abs(z[i] - z[j]));
        }
    }
    CheckResult res;
    res.lhs = std::abs(mean - prod);
    res.rhs = static_cast<double>((k - 1) * (k - 1)) * spread * spread;
    res.ok = res.lhs <= res.rhs + slack;
    return res;
}

TupleSpec make_tuple_spec(int l, int k, std::vector<int> t) {
    if (k < 1 || k > l) throw std::invalid_argument("tuple spec requires 1 <= k <= l");
    if (t.size() != static_cast<std::size_t>(2 * k)) {
        throw std::invalid_argument("tuple spec requires exactly 2k shifts");
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0 || t[i] > l) throw std::invalid_argument("tuple shifts must lie in [0, l]");
        if (i > 0 && t[i] < t[i - 1]) throw std::invalid_argument("tuple shifts must be nondecreasing");
    }
    return TupleSpec{l, k, std::move(t)};
}

ProductComparisonResult check_product_comparison(const VerblunskySequence& seq,
                                                 const TupleSpec& tuple, std::size_t N,
                                                 double term_slack, double aggregate_slack) {
    make_tuple_spec(tuple.l, tuple.k, tuple.t);  // revalidate caller-built specs
    const int l = tuple.l;
    const int k = tuple.k;
    const std::size_t count = tuple.t.size();

    ProductComparisonResult out;
    // Worst-margin trackers: (lhs - rhs) maximized, sides stored alongside.
    auto track = [](CheckResult& c, double lhs, double rhs, bool& first) {
        if (first || lhs - rhs > c.lhs - c.rhs) {
            c.lhs = lhs;
            c.rhs = rhs;
            first = false;
        }
    };
    bool first_pair = true, first_prod = true, first_mean = true;

    const double k2 = static_cast<double>(k) * static_cast<double>(k);
    const double km1_sq = static_cast<double>((k - 1) * (k - 1));
    double aggregate_lhs = 0.0;

    std::vector<Cplx> vals(count);
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t i = 0; i < count; ++i) {
            vals[i] = seq.at(n + static_cast<std::size_t>(tuple.t[i]));
        }
        double wsum = 0.0, window = 0.0;
        for (int q = 0; q < l; ++q) {
            const double d = std::abs(seq.at(n + static_cast<std::size_t>(q) + 1) -
                                      seq.at(n + static_cast<std::size_t>(q)));
            wsum += d;
            window += d * d;
        }
        const double lwindow = static_cast<double>(l) * window;

        // Pairwise spread against the window sum, both links of the chain.
        double spread_sq = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = i + 1; j < count; ++j) {
                spread_sq = std::max(spread_sq, std::norm(vals[i] - vals[j]));
            }
        }
        track(out.pairwise_difference, spread_sq, wsum * wsum, first_pair);
        track(out.pairwise_difference, wsum * wsum, lwindow, first_pair);

        Cplx beta{1.0, 0.0}, betap{1.0, 0.0};
        double mean_odd = 0.0, mean_even = 0.0;
        for (int j = 0; j < k; ++j) {
            const Cplx zo = vals[static_cast<std::size_t>(2 * j)];      // odd positions t_1, t_3, ...
            const Cplx ze = vals[static_cast<std::size_t>(2 * j + 1)];  // even positions t_2, t_4, ...
            beta *= zo;
            betap *= ze;
            mean_odd += int_pow(std::norm(zo), k);
            mean_even += int_pow(std::norm(ze), k);
        }
        mean_odd /= static_cast<double>(k);
        mean_even /= static_cast<double>(k);

        track(out.product_difference, std::norm(beta - betap), k2 * lwindow, first_prod);

        // Each power mean pairs with the product over the same positions.
        const double mean_rhs = 4.0 * km1_sq * lwindow;
        track(out.product_power_mean, std::abs(mean_even - std::norm(betap)), mean_rhs, first_mean);
        track(out.product_power_mean, std::abs(mean_odd - std::norm(beta)), mean_rhs, first_mean);

        double all_mean = 0.0;
        for (std::size_t i = 0; i < count; ++i) all_mean += int_pow(std::norm(vals[i]), k);
        all_mean /= static_cast<double>(count);
        aggregate_lhs += std::abs((beta * std::conj(betap)).real() - all_mean);
    }

    out.pairwise_difference.ok =
        out.pairwise_difference.lhs <= out.pairwise_difference.rhs + term_slack;
    out.product_difference.ok =
        out.product_difference.lhs <= out.product_difference.rhs + term_slack;
    out.product_power_mean.ok =
        out.product_power_mean.lhs <= out.product_power_mean.rhs + term_slack;

    double diff_norm_sq = 0.0;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        diff_norm_sq += std::norm(seq.at(n + 1) - seq.at(n));
    }
    const double l2 = static_cast<double>(l) * static_cast<double>(l);
    out.aggregate.lhs = aggregate_lhs;
    out.aggregate.rhs = k == 1 ? 0.5 * l2 * diff_norm_sq : 4.5 * km1_sq * l2 * diff_norm_sq;
    out.aggregate.ok = out.aggregate.lhs <= out.aggregate.rhs + aggregate_slack;

    // Shift telescopes: sum_{n<N} (x_{n+t} - x_n) = sum_{N<=n<N+t} x_n - sum_{n<t} x_n
    // exactly, for x_n = |a_n|^{2k} on the zero-extended sequence.
    double worst_resid = 0.0;
    int prev = -1;
    for (std::size_t i = 0; i < count; ++i) {
        const int t = tuple.t[i];
        if (t == prev) continue;
        prev = t;
        double shifted = 0.0, base = 0.0, head = 0.0, tail = 0.0;
        for (std::size_t n = 0; n < N; ++n) {
            shifted += int_pow(std::norm(seq.at(n + static_cast<std::size_t>(t))), k);
            base += int_pow(std::norm(seq.at(n)), k);
        }
        for (int n = 0; n < t; ++n) {
            head += int_pow(std::norm(seq.at(static_cast<std::size_t>(n))), k);
            tail += int_pow(std::norm(seq.at(N + static_cast<std::size_t>(n))), k);
        }
        worst_resid = std::max(worst_resid, std::abs((shifted - base) - (tail - head)));
    }
    out.telescope_remainder.lhs = worst_resid;
    out.telescope_remainder.rhs = aggregate_slack;
    out.telescope_remainder.ok = worst_resid <= aggregate_slack;

    return out;
}

}  // namespace opuc
