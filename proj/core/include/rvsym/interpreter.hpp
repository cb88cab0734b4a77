#pragma once

#include <array>
#include <span>
#include <type_traits>

#include "rvsym/semantics.hpp"

namespace rvsym {

// A Domain gives meaning to the effect operations for one value type:
//
//   using Value = ...;
//   Value eval(const SlotExpr&, std::span<const Value> slots);
//   Value read_register(unsigned index);
//   void  write_register(unsigned index, const Value&);
//   Value load(ByteSize, bool sign_extend, const Value& addr);
//   void  store(ByteSize, const Value& addr, const Value& value);
//   Value read_pc();
//   void  write_pc(const Value&);
//   bool  run_if(const Value& condition);   // true: execute the body
//   void  ecall();
//   void  ebreak();
//   bool  stopped() const;                  // abandon the rest of the sequence
template <class Domain>
class SequenceInterpreter {
 public:
  using Value = typename Domain::Value;

  explicit SequenceInterpreter(Domain& d) : d_(d) {}

  void run(const SemanticsSequence& seq) {
    slots_.fill(Value{});
    run_ops(seq.ops);
  }

 private:
  void run_ops(std::span<const Operation> ops) {
    for (const auto& o : ops) {
      if (d_.stopped()) return;
      std::visit([this](const auto& op) { step(op); }, o.v);
    }
  }

  std::span<const Value> slots() const { return slots_; }

  void step(const op::ReadRegister& o) { slots_[o.dest.index] = d_.read_register(o.index); }
  void step(const op::WriteRegister& o) { d_.write_register(o.index, d_.eval(o.value, slots())); }
  void step(const op::LoadMem& o) {
    slots_[o.dest.index] = d_.load(o.size, o.sign_extend, d_.eval(o.addr, slots()));
  }
  void step(const op::StoreMem& o) {
    const Value addr = d_.eval(o.addr, slots());
    d_.store(o.size, addr, d_.eval(o.value, slots()));
  }
  void step(const op::ReadPC& o) { slots_[o.dest.index] = d_.read_pc(); }
  void step(const op::WritePC& o) { d_.write_pc(d_.eval(o.target, slots())); }
  void step(const op::RunIf& o) {
    if (d_.run_if(d_.eval(o.condition, slots()))) run_ops(o.body);
  }
  void step(const op::Ecall&) { d_.ecall(); }
  void step(const op::Ebreak&) { d_.ebreak(); }

  Domain& d_;
  std::array<Value, kMaxSlots> slots_{};
};

template <class Domain>
void execute(Domain& domain, const SemanticsSequence& seq) {
  SequenceInterpreter<Domain>(domain).run(seq);
}

}  // namespace rvsym
