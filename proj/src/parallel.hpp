#pragma once

#include <cstddef>
#include <future>
#include <thread>
#include <type_traits>
#include <vector>

namespace ehrmini::detail {

// results[k] = f(k) for k in [0, count). Runs concurrently when the machine
// has more than one hardware thread; order of results never depends on it.
template <class F>
auto generate(std::size_t count, F f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> results;
  results.reserve(count);
  if (count < 2 || std::thread::hardware_concurrency() < 2) {
    for (std::size_t k = 0; k < count; ++k) results.push_back(f(k));
    return results;
  }
  std::vector<std::future<R>> pending;
  pending.reserve(count);
  for (std::size_t k = 0; k < count; ++k) pending.push_back(std::async(std::launch::async, f, k));
  for (auto& p : pending) results.push_back(p.get());
  return results;
}

}  // namespace ehrmini::detail
