#ifndef GRAPHEVO_PARALLEL_HPP
#define GRAPHEVO_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace graphevo {

/// Run fn(i) for i in [0, n). With threads == 1 (or tiny n) this is a plain
/// loop; otherwise indices are split into contiguous chunks across workers.
/// Callers guarantee fn touches no shared mutable state, so the schedule
/// cannot influence results. threads == 0 means hardware concurrency.
void parallel_for(int64_t n, int threads,
                  const std::function<void(int64_t)>& fn);

}  // namespace graphevo

#endif
