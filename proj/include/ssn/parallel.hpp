#pragma once

#include <cstddef>
#include <functional>

namespace ssn {

// Global worker cap (CLI --threads); 0 means hardware concurrency.
void set_max_threads(unsigned n);
unsigned max_threads();

// Runs f(i) for i in [begin, end) on up to max_threads() workers. Work items
// must be independent; any exception is rethrown on the caller thread.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& f);

} // namespace ssn
