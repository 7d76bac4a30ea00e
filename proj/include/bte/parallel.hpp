#pragma once

#include <cstddef>
#include <functional>

namespace bte {

// Thread count from BTE_THREADS, else hardware_concurrency (at least 1).
int default_thread_count();

// Calls body(i) for i in [0, count) on up to `threads` workers. Items are
// handed out in index order; the first exception thrown is rethrown after all
// workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, int threads = 0);

}  // namespace bte
