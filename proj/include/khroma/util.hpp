// util.hpp
// --------
// Worker-pool helper. Jobs are independent and write to caller-indexed
// slots, so results are identical for every width.

#pragma once

#include <functional>

namespace khroma {

// Process-wide worker count for parallel_for; 1 means serial.
void set_parallel_width(int width);
int parallel_width();

// Runs fn(i) for i in [0, count) across the configured number of threads.
// Exceptions propagate to the caller (the first one thrown, by index).
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace khroma
