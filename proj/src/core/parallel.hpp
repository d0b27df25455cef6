#pragma once
// Deterministic parallel map over an index range. Results are merged in
// index order, so output never depends on the worker count. SIGMA_LAB_THREADS
// caps the default worker count.

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace sigma {

// threads == 0 -> SIGMA_LAB_THREADS if set, else hardware concurrency.
std::size_t resolve_worker_count(std::size_t threads);

// Calls fn(i) for i in [0, count), distributing indices over workers.
// fn must be safe to call concurrently for distinct indices.
void parallel_for_index(std::size_t count, std::size_t threads,
                        const std::function<void(std::size_t)>& fn);

}  // namespace sigma
