#pragma once

#include <cstddef>
#include <functional>

namespace surplus {

// Worker count: SURPLUS_LAB_THREADS if set and positive, else the hardware
// concurrency (at least 1).
std::size_t thread_budget();

// Runs body(i) for i in [0, count) on up to thread_budget() threads.  Indices
// are handed out dynamically; the first exception (lowest index) is rethrown
// after all workers stop.  Nested calls from inside a worker run serially.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace surplus
