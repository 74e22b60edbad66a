#pragma once

#include <cstddef>
#include <functional>

namespace hedetniemi {

/// Worker count for data-parallel sections. Defaults to the HEDET_THREADS
/// environment variable, else 1. Results never depend on this value.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Calls body(i) for i in [0, n), splitting the range into contiguous chunks
/// across thread_count() workers. body must only write to slots owned by i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hedetniemi
