#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rvsym/elf_loader.hpp"
#include "rvsym/machine.hpp"
#include "rvsym/semantics.hpp"
#include "rvsym/solver.hpp"

namespace rvsym {

// Guest/engine ABI: ECALL with the request number in a7.
namespace hypercall {
inline constexpr uint32_t kExit = 1;          // exit(code = a0)
inline constexpr uint32_t kMakeSymbolic = 2;  // make_symbolic(addr = a0, len = a1)
inline constexpr uint32_t kPutchar = 3;       // putchar(a0 & 0xff)
}  // namespace hypercall

/// A RunIf whose condition carried a symbolic part.
struct BranchEvent {
  uint32_t pc = 0;
  TermHandle condition;  // 32-bit 0/1 term
  bool taken = false;
};

using Trace = std::vector<BranchEvent>;

struct RunStatus {
  enum class Kind { kExited, kStepLimit, kFault };
  Kind kind = Kind::kExited;
  int32_t exit_code = 0;
  FaultKind fault = FaultKind::kIllegalInstruction;
  uint32_t pc = 0;
  std::string message;

  static RunStatus exited(int32_t code) { return {Kind::kExited, code}; }
  static RunStatus step_limit() { return {Kind::kStepLimit}; }
  static RunStatus faulted(const MachineFault& f) { return {Kind::kFault, 0, f.kind(), f.pc(), f.what()}; }

  bool truncated() const { return kind == Kind::kStepLimit; }
  std::string to_string() const;
};

struct HypercallRecord {
  uint32_t number = 0;
  uint32_t a0 = 0;
  uint32_t a1 = 0;
  uint64_t at_step = 0;
};

struct RunLimits {
  uint64_t step_limit = 10'000'000;
};

/// Per-run bookkeeping shared by the ECALL handler and the run loop.
struct RunContext {
  const Model* overrides = nullptr;
  Trace trace;
  std::string output;
  std::vector<HypercallRecord> hypercalls;
  std::vector<VarId> symbolic_inputs;
  Model inputs;  // concrete byte chosen for every declared input
  unsigned make_symbolic_calls = 0;
};

struct RunResult {
  RunStatus exit;
  Trace trace;
  uint64_t steps = 0;
  std::vector<VarId> symbolic_inputs;
  Model inputs;
  std::string output;
  std::vector<HypercallRecord> hypercalls;
  ConcolicState final_state;
};

/// Input variable name for byte `offset` of the `call`-th make_symbolic request.
std::string input_name(unsigned call, uint32_t offset);

/// Evaluates on both parts: the concrete part from the leaves' concrete parts,
/// the symbolic part (if any leaf has one) by lowering.
ConcolicWord eval_concolic(const Expr<ConcolicWord>& e, Session& session);

/// Executes one instruction's sequence. state.pc must already hold the
/// default next PC; `instr_pc` is what ReadPC yields.
void exec_sequence(ConcolicState& state, Session& session, const SemanticsSequence& seq, uint32_t instr_pc,
                   RunContext& ctx);

/// Dispatches on a7. Returns false when the run should stop.
bool handle_ecall(ConcolicState& state, Session& session, RunContext& ctx);

/// Runs `snapshot` to completion. Bytes marked symbolic take their value from
/// `overrides` when present, otherwise keep the seed.
RunResult run(ConcolicState snapshot, Session& session, const Model& overrides, const RunLimits& limits);

/// Decoded semantics by instruction word.
class SemanticsCache {
 public:
  const SemanticsSequence& get(uint32_t word);

 private:
  std::unordered_map<uint32_t, std::shared_ptr<const SemanticsSequence>> cache_;
};

/// A loaded program plus the session its runs share.
class Engine {
 public:
  Engine(LoadedImage image, Session& session);

  RunResult run(const Model& overrides = {}, const RunLimits& limits = {});
  const LoadedImage& image() const { return image_; }
  Session& session() { return session_; }

 private:
  LoadedImage image_;
  ConcolicState snapshot_;
  Session& session_;
  SemanticsCache cache_;
};

RunResult run_with_cache(ConcolicState snapshot, Session& session, const Model& overrides, const RunLimits& limits,
                         SemanticsCache& cache);

}  // namespace rvsym
