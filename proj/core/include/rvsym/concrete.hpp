#pragma once

// Plain concrete interpreter over the same semantics table as the concolic
// engine. make_symbolic is accepted and ignored.

#include <string>
#include <vector>

#include "rvsym/engine.hpp"

namespace rvsym {

struct ConcreteRunResult {
  RunStatus exit;
  uint64_t steps = 0;
  std::string output;
  std::vector<HypercallRecord> hypercalls;
  ConcreteState final_state;
};

/// Executes exactly one instruction. Returns false once the program has exited.
bool step_concrete(ConcreteState& state, SemanticsCache& cache, std::string* output = nullptr,
                   std::vector<HypercallRecord>* hypercalls = nullptr);

ConcreteRunResult run_concrete(ConcreteState state, const RunLimits& limits = {});

}  // namespace rvsym
