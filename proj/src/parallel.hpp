#pragma once

#include <bkr/sign_determination.hpp>

#include <omp.h>

#include <exception>
#include <span>

namespace bkr::detail {

inline void rethrow_first(std::span<const std::exception_ptr> errors) {
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Runs fn inside a parallel region (one thread seeds tasks, the team executes
// them) when exec is Parallel and no region is active yet; otherwise calls
// fn directly. Tasks created below use if(parallel) clauses, so the serial
// path executes every task immediately on the calling thread.
template <typename Fn>
void with_team(Exec exec, Fn&& fn) {
  if (exec == Exec::Serial || omp_in_parallel()) {
    fn();
    return;
  }
  std::exception_ptr error;
#pragma omp parallel shared(error, fn)
#pragma omp single
  {
    try {
      fn();
    } catch (...) {
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace bkr::detail
