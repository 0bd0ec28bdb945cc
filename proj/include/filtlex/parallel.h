#ifndef FILTLEX_PARALLEL_H
#define FILTLEX_PARALLEL_H

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace filtlex {

// Splits [0, count) into at most `workers` contiguous ranges and runs
// fn(begin, end) for each on its own thread. Results are returned in range
// order, so callers that merge them in order get worker-independent output.
// The first exception thrown by any range is rethrown.
template <typename Fn>
auto map_ranges(std::size_t count, std::size_t workers, Fn fn) -> std::vector<decltype(fn(std::size_t{}, std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}, std::size_t{}));
  workers = std::max<std::size_t>(1, std::min(workers, std::max<std::size_t>(count, 1)));
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = fn(0, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        try {
          results[w] = fn(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace filtlex

#endif
