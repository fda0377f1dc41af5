#pragma once

// Deterministic fan-out: work items are produced concurrently, consumed
// strictly in index order on the calling thread. Any reduction done in the
// consumer is therefore independent of the thread count.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace qfl {

/// Worker count from an explicit request, falling back to QFL_THREADS, then 1.
unsigned resolve_threads(unsigned requested);

template <class Produce, class Consume>
void ordered_for_each(std::size_t count, unsigned threads, Produce&& produce, Consume&& consume) {
  using Item = std::invoke_result_t<Produce&, std::size_t>;
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) consume(produce(i));
    return;
  }
  // Batches of `threads` items; each batch is filled in parallel then drained in order.
  std::vector<std::optional<Item>> slots(threads);
  std::vector<std::exception_ptr> errors(threads);
  for (std::size_t base = 0; base < count; base += threads) {
    const std::size_t n = std::min<std::size_t>(threads, count - base);
    {
      std::vector<std::jthread> workers;
      workers.reserve(n);
      for (std::size_t k = 0; k < n; ++k) {
        workers.emplace_back([&, k] {
          try {
            slots[k].emplace(produce(base + k));
          } catch (...) {
            errors[k] = std::current_exception();
          }
        });
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (errors[k]) std::rethrow_exception(errors[k]);
      consume(std::move(*slots[k]));
      slots[k].reset();
    }
  }
}

}  // namespace qfl
