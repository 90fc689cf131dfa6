#ifndef OPUC_SUITES_HPP
#define OPUC_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Randomized property suites over the estimates in inequalities.hpp and
// the series transform in pruefer.hpp.  Draws are fully determined by
// the seed, so a rerun reproduces any violation; the first offending
// input is serialized for replay.

namespace opuc {

struct SuiteReport {
    std::string name;
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::string replay_csv;  // first offending input when violations > 0
};

// |prod z - prod z'| <= k max |z_j - z'_j| on random disk tuples,
// k <= 6, with every 10th draw pinned to modulus 1 - 1e-6.
SuiteReport run_disk_product_suite(std::uint64_t seed, std::size_t trials);

// |(1/k) sum z_j^k - prod z_j| <= (k-1)^2 max |z_i - z_j|^2, same draws.
SuiteReport run_disk_power_mean_suite(std::uint64_t seed, std::size_t trials);

// All five shifted-product checks on random phase-modulated power-decay
// sequences of length support, shifts l <= 4, summed over N = support.
SuiteReport run_product_comparison_suite(std::uint64_t seed, std::size_t trials,
                                         std::size_t support);

// Telescoped series against direct summation (1e-8) and against its
// bound, on random non-resonant inputs with and without phase tracks,
// plus deterministic rejection checks for resonant input.
SuiteReport run_series_transform_suite(std::uint64_t seed, std::size_t trials);

}  // namespace opuc

#endif
