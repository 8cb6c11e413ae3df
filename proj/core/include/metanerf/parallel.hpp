#pragma once

#include <cstddef>
#include <functional>

namespace metanerf {

/// Caps worker threads for all parallel loops. 0 restores the hardware default.
void set_thread_limit(int n);
int thread_limit();

/// Runs body(i) for i in [0, count). Bodies must write to disjoint state;
/// execution order is unspecified. Any result that depends on a reduction
/// must be assembled from per-index partials in index order by the caller,
/// which is what keeps outputs independent of the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace metanerf
