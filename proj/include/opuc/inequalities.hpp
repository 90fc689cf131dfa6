#ifndef OPUC_INEQUALITIES_HPP
#define OPUC_INEQUALITIES_HPP

#include <cstddef>
#include <vector>

#include "opuc/verblunsky.hpp"

// Elementary product and power-mean estimates on the closed unit disk,
// and the aggregate comparison they yield for shifted coefficient
// products.  Every check returns the two sides it compared; randomized
// suites over these checks are the executable form of the estimates.

namespace opuc {

struct CheckResult {
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = false;  // lhs <= rhs + slack
};

// |z_1...z_k - z'_1...z'_k| <= k max_j |z_j - z'_j| for |z_j|, |z'_j| <= 1.
// Requires equal nonempty lengths.
CheckResult check_telescope_product(const std::vector<Cplx>& z, const std::vector<Cplx>& zp,
                                    double slack = 1e-12);

// |(1/k) sum_j z_j^k - prod_j z_j| <= (k-1)^2 max_{i,j} |z_i - z_j|^2
// for |z_j| <= 1.  Requires nonempty input.
CheckResult check_power_mean(const std::vector<Cplx>& z, double slack = 1e-12);

// Index pattern for comparing products along two interleaved shift sets:
// 0 <= t_1 <= ... <= t_{2k} <= l with the odd positions feeding beta_n
// and the even positions beta'_n below.
struct TupleSpec {
    int l = 0;
    int k = 0;
    std::vector<int> t;  // size 2k, nondecreasing, entries in [0, l]
};

// Validated constructor helper; throws std::invalid_argument on a
// malformed pattern (k < 1, k > l, wrong size, order, or range).
TupleSpec make_tuple_spec(int l, int k, std::vector<int> t);

// For beta_n  = prod_j a_{n+t_{2j-1}} (odd positions) and
//     beta'_n = prod_j a_{n+t_{2j}}  (even positions), n = 0..N-1:
//
//   pairwise_difference   per-n, per-pair: |a_{n+t_i} - a_{n+t_j}|^2
//                         <= l sum_{q=0}^{l-1} |(da)_{n+q}|^2
//                         (via the window sum (sum_q |(da)_{n+q}|)^2)
//   product_difference    per-n: |beta_n - beta'_n|^2
//                         <= k^2 l sum_{q=0}^{l-1} |(da)_{n+q}|^2
//   product_power_mean    per-n, both pairings: the product modulus
//                         |beta_n|^2 or |beta'_n|^2 against the mean
//                         (1/k) sum_j |a_{n+t_{2j}}|^{2k}, bounded by
//                         4 (k-1)^2 l sum_{q=0}^{l-1} |(da)_{n+q}|^2
//   aggregate             sum_n |Re(beta_n conj(beta'_n))
//                                - (1/2k) sum_{i=1}^{2k} |a_{n+t_i}|^{2k}|
//                         <= (9/2) (k-1)^2 l^2 ||da||_2^2 for k >= 2,
//                         <= (1/2) l^2 ||da||_2^2 for k = 1
//   telescope_remainder   exactness of the support telescope
//                         sum_n (|a_{n+t}|^{2k} - |a_n|^{2k})
//                         = -sum_{n=0}^{t-1} |a_n|^{2k} for each shift t,
//                         summed over the zero-extended support
//
// Per-term checks report the worst term (largest lhs - rhs); the
// telescope check reports the largest absolute remainder against the
// aggregate slack.  da is the forward difference of the zero-extended
// sequence.  N may exceed the support.
struct ProductComparisonResult {
    CheckResult pairwise_difference;
    CheckResult product_difference;
    CheckResult product_power_mean;
    CheckResult aggregate;
    CheckResult telescope_remainder;
    bool ok() const {
        return pairwise_difference.ok && product_difference.ok && product_power_mean.ok &&
               aggregate.ok && telescope_remainder.ok;
    }
};

ProductComparisonResult check_product_comparison(const VerblunskySequence& seq,
                                                 const TupleSpec& tuple, std::size_t N,
                                                 double term_slack = 1e-12,
                                                 double aggregate_slack = 1e-10);

}  // namespace opuc

#endif
