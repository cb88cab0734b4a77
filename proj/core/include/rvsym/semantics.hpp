#pragma once

// Formal description of each RV32IM instruction as a finite sequence of
// effect operations over bit-vector expressions.
//
// The description does not know how values are represented. Expressions refer
// to earlier results through binding slots (SlotExpr leaves); an interpreter
// instantiates the slots with its own value type when it executes the
// sequence. The concrete and the concolic interpreter share this one table.

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "rvsym/bvexpr.hpp"
#include "rvsym/isa.hpp"

namespace rvsym {

/// Index of a value produced by an earlier operation of the same sequence.
struct Slot {
  uint8_t index = 0;
  friend bool operator==(Slot, Slot) = default;
};

using SlotExpr = Expr<Slot>;

struct Operation;

namespace op {

struct ReadRegister {
  uint8_t index;
  Slot dest;
};
struct WriteRegister {
  uint8_t index;
  SlotExpr value;
};
struct LoadMem {
  ByteSize size;
  bool sign_extend;
  SlotExpr addr;
  Slot dest;
};
struct StoreMem {
  ByteSize size;
  SlotExpr addr;
  SlotExpr value;
};
/// Binds the address of the executing instruction.
struct ReadPC {
  Slot dest;
};
struct WritePC {
  SlotExpr target;
};
/// Runs `body` iff `condition` evaluates to a non-zero value.
struct RunIf {
  SlotExpr condition;
  std::vector<Operation> body;
};
struct Ecall {};
struct Ebreak {};

}  // namespace op

struct Operation {
  std::variant<op::ReadRegister, op::WriteRegister, op::LoadMem, op::StoreMem, op::ReadPC, op::WritePC, op::RunIf,
               op::Ecall, op::Ebreak>
      v;
};

inline constexpr unsigned kMaxSlots = 8;

/// Complete effect sequence of one instruction.
struct SemanticsSequence {
  std::vector<Operation> ops;
  unsigned slot_count = 0;
};

SemanticsSequence semantics_of(const Instr& instr);

/// Maximum RunIf nesting depth of a sequence (0 when it has none).
unsigned nesting_depth(std::span<const Operation> ops);

/// Number of RunIf operations at any depth.
unsigned count_run_if(std::span<const Operation> ops);

}  // namespace rvsym
