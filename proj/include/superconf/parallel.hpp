#pragma once

#include <cstddef>
#include <functional>

namespace superconf {

// Worker count: SUPERCONF_THREADS if set and positive, else the hardware concurrency.
unsigned thread_count();
void set_thread_count(unsigned n);  // 0 restores the environment/default behaviour

// Runs body(i) for i in [0, n). Each index must write only its own slot, so the
// result does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace superconf
