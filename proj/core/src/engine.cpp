#include "rvsym/engine.hpp"

#include <cstdio>

#include "rvsym/interpreter.hpp"

namespace rvsym {

std::string RunStatus::to_string() const {
  char buf[96];
  switch (kind) {
    case Kind::kExited:
      std::snprintf(buf, sizeof buf, "Exited(%d)", exit_code);
      break;
    case Kind::kStepLimit:
      return "StepLimit";
    case Kind::kFault:
      std::snprintf(buf, sizeof buf, "Fault(%s, pc=0x%08x)", rvsym::to_string(fault), pc);
      break;
  }
  return buf;
}

std::string input_name(unsigned call, uint32_t offset) {
  return "in_" + std::to_string(call) + "_" + std::to_string(offset);
}

namespace {

using TermExpr = Expr<TermHandle>;

template <class L, class LeafFn>
ConcolicWord eval_concolic_impl(const Expr<L>& e, LeafFn leaf, Session& session) {
  const Bits concrete = evaluate(e, [&](const L& l) { return Bits{leaf(l).concrete, 32}; });
  if (concrete.width != 32) throw MalformedExpression("concolic expression must be 32 bits wide");

  bool symbolic = false;
  for_each_leaf(e, [&](const L& l) { symbolic |= leaf(l).is_symbolic(); });
  if (!symbolic) return ConcolicWord(static_cast<uint32_t>(concrete.value));

  TermExpr lowered = map_leaves<TermHandle>(e, [&](const L& l) {
    const ConcolicWord& w = leaf(l);
    return w.symbolic ? TermExpr::make_leaf(*w.symbolic) : TermExpr::from_int(kWord, w.concrete);
  });
  return ConcolicWord(static_cast<uint32_t>(concrete.value), session.lower(lowered));
}

class ConcolicDomain {
 public:
  using Value = ConcolicWord;

  ConcolicDomain(ConcolicState& state, Session& session, uint32_t instr_pc, RunContext& ctx)
      : state_(state), session_(session), instr_pc_(instr_pc), ctx_(ctx) {}

  Value eval(const SlotExpr& e, std::span<const Value> slots) {
    return eval_concolic_impl(e, [&](Slot s) -> const ConcolicWord& { return slots[s.index]; }, session_);
  }
  Value read_register(unsigned i) { return state_.read_register(i); }
  void write_register(unsigned i, const Value& v) { state_.write_register(i, v); }
  Value load(ByteSize size, bool sign, const Value& addr) { return state_.load_mem(session_, size, sign, addr); }
  void store(ByteSize size, const Value& addr, const Value& v) { state_.store_mem(session_, size, addr, v); }
  Value read_pc() { return ConcolicWord(instr_pc_); }
  void write_pc(const Value& target) {
    if (target.is_symbolic()) {
      state_.events.push_back({ConcretizationEvent::Kind::kJumpTarget, instr_pc_, target.concrete});
    }
    state_.pc = target.concrete;
  }
  bool run_if(const Value& condition) {
    const bool taken = condition.concrete != 0;
    if (condition.symbolic) ctx_.trace.push_back(BranchEvent{instr_pc_, *condition.symbolic, taken});
    return taken;
  }
  void ecall() {
    if (!handle_ecall(state_, session_, ctx_)) stopped_ = true;
  }
  void ebreak() { throw MachineFault(FaultKind::kBreakpoint, instr_pc_); }
  bool stopped() const { return stopped_; }

 private:
  ConcolicState& state_;
  Session& session_;
  uint32_t instr_pc_;
  RunContext& ctx_;
  bool stopped_ = false;
};

}  // namespace

ConcolicWord eval_concolic(const Expr<ConcolicWord>& e, Session& session) {
  return eval_concolic_impl(e, [](const ConcolicWord& w) -> const ConcolicWord& { return w; }, session);
}

void exec_sequence(ConcolicState& state, Session& session, const SemanticsSequence& seq, uint32_t instr_pc,
                   RunContext& ctx) {
  ConcolicDomain domain(state, session, instr_pc, ctx);
  execute(domain, seq);
}

bool handle_ecall(ConcolicState& state, Session& session, RunContext& ctx) {
  const uint32_t number = state.read_register(17).concrete;
  const uint32_t a0 = state.read_register(10).concrete;
  const uint32_t a1 = state.read_register(11).concrete;
  ctx.hypercalls.push_back({number, a0, a1, state.step_count});

  switch (number) {
    case hypercall::kExit:
      state.exit_code = static_cast<int32_t>(a0);
      return false;
    case hypercall::kMakeSymbolic: {
      const unsigned call = ctx.make_symbolic_calls++;
      for (uint32_t i = 0; i < a1; ++i) {
        const VarId id{input_name(call, i)};
        TermHandle var = session.var(id);
        uint8_t value = state.mem.read_byte(a0 + i).concrete;
        if (ctx.overrides) {
          if (auto it = ctx.overrides->find(id.name); it != ctx.overrides->end()) value = it->second;
        }
        state.mem.write_byte(a0 + i, ConcolicByte{value, std::move(var)});
        ctx.symbolic_inputs.push_back(id);
        ctx.inputs[id.name] = value;
      }
      return true;
    }
    case hypercall::kPutchar:
      ctx.output.push_back(static_cast<char>(a0 & 0xFF));
      return true;
    default:
      throw MachineFault(FaultKind::kUnknownHypercall, state.pc - 4, number);
  }
}

const SemanticsSequence& SemanticsCache::get(uint32_t word) {
  auto it = cache_.find(word);
  if (it == cache_.end()) {
    auto seq = std::make_shared<const SemanticsSequence>(semantics_of(decode(word)));
    it = cache_.emplace(word, std::move(seq)).first;
  }
  return *it->second;
}

RunResult run_with_cache(ConcolicState state, Session& session, const Model& overrides, const RunLimits& limits,
                         SemanticsCache& cache) {
  RunContext ctx;
  ctx.overrides = &overrides;
  RunStatus status;
  uint32_t instr_pc = state.pc;
  try {
    for (;;) {
      if (state.exit_code) {
        status = RunStatus::exited(*state.exit_code);
        break;
      }
      if (state.step_count >= limits.step_limit) {
        status = RunStatus::step_limit();
        break;
      }
      instr_pc = state.pc;
      const uint32_t word = state.fetch_instruction();
      const SemanticsSequence* seq;
      try {
        seq = &cache.get(word);
      } catch (const IllegalInstruction&) {
        throw MachineFault(FaultKind::kIllegalInstruction, instr_pc, word);
      }
      state.pc = instr_pc + 4;
      ++state.step_count;
      exec_sequence(state, session, *seq, instr_pc, ctx);
    }
  } catch (const MachineFault& f) {
    // Memory-level faults do not know the PC.
    status = f.pc() == 0 && f.kind() == FaultKind::kUnmappedRead
                 ? RunStatus::faulted(MachineFault(f.kind(), instr_pc, f.detail()))
                 : RunStatus::faulted(f);
  }

  RunResult r;
  r.exit = std::move(status);
  r.trace = std::move(ctx.trace);
  r.steps = state.step_count;
  r.symbolic_inputs = std::move(ctx.symbolic_inputs);
  r.inputs = std::move(ctx.inputs);
  r.output = std::move(ctx.output);
  r.hypercalls = std::move(ctx.hypercalls);
  r.final_state = std::move(state);
  return r;
}

RunResult run(ConcolicState snapshot, Session& session, const Model& overrides, const RunLimits& limits) {
  SemanticsCache cache;
  return run_with_cache(std::move(snapshot), session, overrides, limits, cache);
}

Engine::Engine(LoadedImage image, Session& session)
    : image_(std::move(image)), snapshot_(image_.concolic_state()), session_(session) {}

RunResult Engine::run(const Model& overrides, const RunLimits& limits) {
  return run_with_cache(snapshot_, session_, overrides, limits, cache_);
}

}  // namespace rvsym
