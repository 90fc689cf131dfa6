#ifndef OPUC_PARALLEL_HPP
#define OPUC_PARALLEL_HPP

#include <cstddef>
#include <functional>

// Deterministic data-parallel helper: workers fill disjoint index ranges
// of preallocated buffers, and any reduction happens afterwards in index
// order, so results are bit-identical for every job count.

namespace opuc {

// Calls fn(i) for i = 0..count-1, split into contiguous chunks across
// at most `jobs` threads (jobs <= 1 runs inline).  fn must only touch
// state owned by index i.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace opuc

#endif
