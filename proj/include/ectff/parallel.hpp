#pragma once

#include <cstddef>
#include <functional>

namespace ectff {

/// Worker-thread cap shared by all modules; defaults to ECTFF_THREADS or 1.
int thread_budget();
void set_thread_budget(int n);

/// Index-sharded parallel loop. Each index writes only its own output slot, so
/// results are bitwise-deterministic regardless of the budget.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ectff
