#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace erasurelab {

/// Worker cap: ERASURELAB_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Smallest i in [0, count) with pred(i), or nullopt. The index range is split
/// into contiguous chunks across workers; the result does not depend on the
/// split. `pred` must be safe to call concurrently.
std::optional<std::size_t> find_first(std::size_t count, const std::function<bool(std::size_t)>& pred);

}  // namespace erasurelab
