#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <utility>

namespace linfty {

/// Kernel execution mode. Parallel runs the coefficient loops under OpenMP;
/// results are bit-identical to Serial because every output coefficient is
/// an independent pure computation written to its own slot.
enum class Exec { Serial, Parallel };

Exec default_exec();
void set_default_exec(Exec mode);

/// body(i) for i in [0, n); exceptions are captured and rethrown after the
/// parallel region joins.
template <typename F>
void parallel_for(std::size_t n, Exec mode, F&& body) {
  if (mode == Exec::Serial || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first_error = nullptr;
  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      bool expected = false;
      if (failed.compare_exchange_strong(expected, true)) {
#pragma omp critical(linfty_parallel_for_error)
        first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace linfty
