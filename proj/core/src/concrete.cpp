#include "rvsym/concrete.hpp"

#include "rvsym/interpreter.hpp"

namespace rvsym {

namespace {

class ConcreteDomain {
 public:
  using Value = uint32_t;

  ConcreteDomain(ConcreteState& state, uint32_t instr_pc, std::string* output,
                 std::vector<HypercallRecord>* hypercalls)
      : state_(state), instr_pc_(instr_pc), output_(output), hypercalls_(hypercalls) {}

  Value eval(const SlotExpr& e, std::span<const Value> slots) {
    return static_cast<uint32_t>(evaluate(e, [&](Slot s) { return Bits{slots[s.index], 32}; }).value);
  }
  Value read_register(unsigned i) { return state_.regs.read(i); }
  void write_register(unsigned i, Value v) { state_.regs.write(i, v); }
  Value load(ByteSize size, bool sign, Value addr) { return state_.load_mem(size, sign, addr); }
  void store(ByteSize size, Value addr, Value v) { state_.store_mem(size, addr, v); }
  Value read_pc() { return instr_pc_; }
  void write_pc(Value target) { state_.pc = target; }
  bool run_if(Value condition) { return condition != 0; }
  void ecall() {
    const uint32_t number = state_.regs.read(17);
    const uint32_t a0 = state_.regs.read(10);
    const uint32_t a1 = state_.regs.read(11);
    if (hypercalls_) hypercalls_->push_back({number, a0, a1, state_.step_count});
    switch (number) {
      case hypercall::kExit:
        state_.exit_code = static_cast<int32_t>(a0);
        return;
      case hypercall::kMakeSymbolic:
        return;
      case hypercall::kPutchar:
        if (output_) output_->push_back(static_cast<char>(a0 & 0xFF));
        return;
      default:
        throw MachineFault(FaultKind::kUnknownHypercall, instr_pc_, number);
    }
  }
  void ebreak() { throw MachineFault(FaultKind::kBreakpoint, instr_pc_); }
  bool stopped() const { return state_.exit_code.has_value(); }

 private:
  ConcreteState& state_;
  uint32_t instr_pc_;
  std::string* output_;
  std::vector<HypercallRecord>* hypercalls_;
};

}  // namespace

bool step_concrete(ConcreteState& state, SemanticsCache& cache, std::string* output,
                   std::vector<HypercallRecord>* hypercalls) {
  if (state.exit_code) return false;
  const uint32_t instr_pc = state.pc;
  try {
    const uint32_t word = state.fetch_instruction();
    const SemanticsSequence* seq;
    try {
      seq = &cache.get(word);
    } catch (const IllegalInstruction&) {
      throw MachineFault(FaultKind::kIllegalInstruction, instr_pc, word);
    }
    state.pc = instr_pc + 4;
    ++state.step_count;
    ConcreteDomain domain(state, instr_pc, output, hypercalls);
    execute(domain, *seq);
  } catch (const MachineFault& f) {
    if (f.pc() == 0 && f.kind() == FaultKind::kUnmappedRead) throw MachineFault(f.kind(), instr_pc, f.detail());
    throw;
  }
  return !state.exit_code;
}

ConcreteRunResult run_concrete(ConcreteState state, const RunLimits& limits) {
  ConcreteRunResult r;
  SemanticsCache cache;
  try {
    for (;;) {
      if (state.exit_code) {
        r.exit = RunStatus::exited(*state.exit_code);
        break;
      }
      if (state.step_count >= limits.step_limit) {
        r.exit = RunStatus::step_limit();
        break;
      }
      step_concrete(state, cache, &r.output, &r.hypercalls);
    }
  } catch (const MachineFault& f) {
    r.exit = RunStatus::faulted(f);
  }
  r.steps = state.step_count;
  r.final_state = std::move(state);
  return r;
}

}  // namespace rvsym
