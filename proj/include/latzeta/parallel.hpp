#pragma once

#include <cstddef>
#include <functional>

namespace latzeta {

/// Worker count: LATZETA_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
[[nodiscard]] std::size_t thread_budget();

/// Runs task(i) for i in [0, count) on up to thread_budget() threads. Tasks
/// must write only to their own output slot. The first exception thrown by
/// any task (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace latzeta
