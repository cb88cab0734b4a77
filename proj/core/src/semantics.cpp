#include "rvsym/semantics.hpp"

#include <algorithm>
#include <functional>

namespace rvsym {

namespace {

/// Appends operations to a sequence and hands out fresh binding slots.
class Builder {
 public:
  explicit Builder(SemanticsSequence& seq) : seq_(seq), out_(&seq.ops) {}

  SlotExpr read_register(uint8_t index) {
    const Slot s = fresh();
    emit(op::ReadRegister{index, s});
    return SlotExpr::make_leaf(s);
  }
  SlotExpr read_pc() {
    const Slot s = fresh();
    emit(op::ReadPC{s});
    return SlotExpr::make_leaf(s);
  }
  SlotExpr load(ByteSize size, bool sign, SlotExpr addr) {
    const Slot s = fresh();
    emit(op::LoadMem{size, sign, std::move(addr), s});
    return SlotExpr::make_leaf(s);
  }
  void write_register(uint8_t index, SlotExpr value) { emit(op::WriteRegister{index, std::move(value)}); }
  void store(ByteSize size, SlotExpr addr, SlotExpr value) {
    emit(op::StoreMem{size, std::move(addr), std::move(value)});
  }
  void write_pc(SlotExpr target) { emit(op::WritePC{std::move(target)}); }
  void ecall() { emit(op::Ecall{}); }
  void ebreak() { emit(op::Ebreak{}); }

  void run_if(SlotExpr condition, const std::function<void(Builder&)>& body) {
    op::RunIf r{std::move(condition), {}};
    std::vector<Operation>* saved = out_;
    out_ = &r.body;
    body(*this);
    out_ = saved;
    emit(std::move(r));
  }

 private:
  template <class T>
  void emit(T&& op) {
    out_->push_back(Operation{std::forward<T>(op)});
  }
  Slot fresh() {
    if (seq_.slot_count >= kMaxSlots) throw MalformedExpression("too many binding slots");
    return Slot{static_cast<uint8_t>(seq_.slot_count++)};
  }

  SemanticsSequence& seq_;
  std::vector<Operation>* out_;
};

SlotExpr imm32(int32_t v) { return SlotExpr::from_int(kWord, static_cast<uint32_t>(v)); }
SlotExpr imm32u(uint32_t v) { return SlotExpr::from_int(kWord, v); }
SlotExpr bin(ExprKind k, SlotExpr a, SlotExpr b) { return SlotExpr::binary(k, std::move(a), std::move(b)); }

void branch(Builder& b, const Instr& in, ExprKind comparison) {
  auto rs1 = b.read_register(in.rs1);
  auto rs2 = b.read_register(in.rs2);
  b.run_if(bin(comparison, rs1, rs2), [&](Builder& taken) {
    auto pc = taken.read_pc();
    taken.write_pc(add(pc, imm32(in.imm)));
  });
}

void load(Builder& b, const Instr& in, ByteSize size, bool sign) {
  auto rs1 = b.read_register(in.rs1);
  auto value = b.load(size, sign, add(rs1, imm32(in.imm)));
  b.write_register(in.rd, value);
}

void store(Builder& b, const Instr& in, ByteSize size) {
  auto rs1 = b.read_register(in.rs1);
  auto rs2 = b.read_register(in.rs2);
  b.store(size, add(rs1, imm32(in.imm)), rs2);
}

void alu_imm(Builder& b, const Instr& in, ExprKind k) {
  auto rs1 = b.read_register(in.rs1);
  b.write_register(in.rd, bin(k, rs1, imm32(in.imm)));
}

void alu_reg(Builder& b, const Instr& in, ExprKind k) {
  auto rs1 = b.read_register(in.rs1);
  auto rs2 = b.read_register(in.rs2);
  b.write_register(in.rd, bin(k, rs1, rs2));
}

// Register shifts use the low five bits of rs2.
void shift_reg(Builder& b, const Instr& in, ExprKind k) {
  auto rs1 = b.read_register(in.rs1);
  auto rs2 = b.read_register(in.rs2);
  b.write_register(in.rd, bin(k, rs1, bv_and(rs2, imm32u(31))));
}

}  // namespace

SemanticsSequence semantics_of(const Instr& in) {
  SemanticsSequence seq;
  Builder b(seq);
  using M = Mnemonic;
  switch (in.mnemonic) {
    case M::LUI:
      b.write_register(in.rd, imm32(in.imm));
      break;
    case M::AUIPC: {
      auto pc = b.read_pc();
      b.write_register(in.rd, add(pc, imm32(in.imm)));
      break;
    }
    case M::JAL: {
      auto pc = b.read_pc();
      b.write_register(in.rd, add(pc, imm32u(4)));
      b.write_pc(add(pc, imm32(in.imm)));
      break;
    }
    case M::JALR: {
      auto rs1 = b.read_register(in.rs1);
      auto pc = b.read_pc();
      b.write_register(in.rd, add(pc, imm32u(4)));
      b.write_pc(bv_and(add(rs1, imm32(in.imm)), imm32u(0xFFFFFFFEu)));
      break;
    }
    case M::BEQ: branch(b, in, ExprKind::kEq); break;
    case M::BNE: branch(b, in, ExprKind::kNeq); break;
    case M::BLT: branch(b, in, ExprKind::kSltS); break;
    case M::BGE: branch(b, in, ExprKind::kSgeS); break;
    case M::BLTU: branch(b, in, ExprKind::kSltU); break;
    case M::BGEU: branch(b, in, ExprKind::kSgeU); break;

    case M::LB: load(b, in, ByteSize::Byte, true); break;
    case M::LH: load(b, in, ByteSize::Half, true); break;
    case M::LW: load(b, in, ByteSize::Word, false); break;
    case M::LBU: load(b, in, ByteSize::Byte, false); break;
    case M::LHU: load(b, in, ByteSize::Half, false); break;
    case M::SB: store(b, in, ByteSize::Byte); break;
    case M::SH: store(b, in, ByteSize::Half); break;
    case M::SW: store(b, in, ByteSize::Word); break;

    case M::ADDI: alu_imm(b, in, ExprKind::kAdd); break;
    case M::SLTI: alu_imm(b, in, ExprKind::kSltS); break;
    case M::SLTIU: alu_imm(b, in, ExprKind::kSltU); break;
    case M::XORI: alu_imm(b, in, ExprKind::kXor); break;
    case M::ORI: alu_imm(b, in, ExprKind::kOr); break;
    case M::ANDI: alu_imm(b, in, ExprKind::kAnd); break;
    case M::SLLI: alu_imm(b, in, ExprKind::kSll); break;
    case M::SRLI: alu_imm(b, in, ExprKind::kSrl); break;
    case M::SRAI: alu_imm(b, in, ExprKind::kSra); break;

    case M::ADD: alu_reg(b, in, ExprKind::kAdd); break;
    case M::SUB: alu_reg(b, in, ExprKind::kSub); break;
    case M::SLL: shift_reg(b, in, ExprKind::kSll); break;
    case M::SLT: alu_reg(b, in, ExprKind::kSltS); break;
    case M::SLTU: alu_reg(b, in, ExprKind::kSltU); break;
    case M::XOR: alu_reg(b, in, ExprKind::kXor); break;
    case M::SRL: shift_reg(b, in, ExprKind::kSrl); break;
    case M::SRA: shift_reg(b, in, ExprKind::kSra); break;
    case M::OR: alu_reg(b, in, ExprKind::kOr); break;
    case M::AND: alu_reg(b, in, ExprKind::kAnd); break;

    case M::MUL: alu_reg(b, in, ExprKind::kMul); break;
    case M::MULH: alu_reg(b, in, ExprKind::kMulhSS); break;
    case M::MULHSU: alu_reg(b, in, ExprKind::kMulhSU); break;
    case M::MULHU: alu_reg(b, in, ExprKind::kMulhUU); break;
    case M::DIV: alu_reg(b, in, ExprKind::kDivS); break;
    case M::DIVU: alu_reg(b, in, ExprKind::kDivU); break;
    case M::REM: alu_reg(b, in, ExprKind::kRemS); break;
    case M::REMU: alu_reg(b, in, ExprKind::kRemU); break;

    case M::FENCE:
      break;
    case M::ECALL:
      b.ecall();
      break;
    case M::EBREAK:
      b.ebreak();
      break;
  }
  return seq;
}

unsigned nesting_depth(std::span<const Operation> ops) {
  unsigned depth = 0;
  for (const auto& o : ops) {
    if (const auto* r = std::get_if<op::RunIf>(&o.v)) depth = std::max(depth, 1 + nesting_depth(r->body));
  }
  return depth;
}

unsigned count_run_if(std::span<const Operation> ops) {
  unsigned n = 0;
  for (const auto& o : ops) {
    if (const auto* r = std::get_if<op::RunIf>(&o.v)) n += 1 + count_run_if(r->body);
  }
  return n;
}

}  // namespace rvsym
