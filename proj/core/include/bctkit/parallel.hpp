#pragma once

#include <cstddef>
#include <functional>

namespace bctkit {

// 0 means "use the available hardware parallelism".
unsigned resolve_threads(unsigned requested) noexcept;

// Runs body(i) for i in [0, count) on up to `threads` workers. Work items are
// handed out dynamically; callers write results by index so the outcome is
// independent of scheduling. The first exception thrown by a worker is
// rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace bctkit
