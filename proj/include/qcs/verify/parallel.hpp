// Index-stable parallel loops. Results are written by index, so output
// never depends on the number of workers.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qcs::verify {

/// hardware_concurrency, capped by the QCS_THREADS environment variable.
int worker_count();

/// Runs body(i) for i in [0, n). The first exception by index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace qcs::verify
