#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace gf2bl::detail {

// Splits [0, count) into contiguous chunks, runs body(begin, end) on each in
// its own thread and returns the per-chunk results in chunk order.
template <class Body>
auto partitioned(std::uint64_t count, Body body)
    -> std::vector<decltype(body(std::uint64_t{}, std::uint64_t{}))> {
  using Result = decltype(body(std::uint64_t{}, std::uint64_t{}));
  const std::uint64_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(count / 4096, 1, std::min<std::uint64_t>(hw, 16));
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = body(0, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(count, w * chunk);
    const std::uint64_t end = std::min(count, begin + chunk);
    threads.emplace_back([&results, &errors, &body, w, begin, end] {
      try {
        results[w] = body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace gf2bl::detail
