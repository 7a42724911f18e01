#pragma once

#include <cstddef>
#include <functional>

namespace epcont {

/// Worker count: hardware concurrency, capped by EPCONT_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index
/// is visited once; exceptions from the body are rethrown after all
/// workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace epcont
