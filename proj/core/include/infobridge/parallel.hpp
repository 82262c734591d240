#pragma once

#include <cstddef>
#include <functional>

namespace infobridge {

/// Runs fn over disjoint chunks [begin, end) of 0..n on a small thread pool.
/// Callers own determinism: outputs must be written to per-index slots and
/// reduced afterwards in index order.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t begin, std::size_t end)>& fn);

}  // namespace infobridge
