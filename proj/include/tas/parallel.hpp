#ifndef TAS_PARALLEL_HPP
#define TAS_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <optional>

namespace tas {

// Worker count for parallel enumeration: TAS_THREADS when set, else 1.
int configured_thread_count();

// Evaluates items 0..count-1 and returns the smallest index for which `eval`
// returns true, or nullopt. In parallel mode `eval` must be thread-safe; the
// result is still deterministic because every index below the winner is
// evaluated and the smallest hit wins.
std::optional<size_t> first_hit(size_t count, bool parallel,
                                const std::function<bool(size_t)>& eval);

}  // namespace tas

#endif  // TAS_PARALLEL_HPP
