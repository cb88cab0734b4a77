#pragma once

// RV32IM instruction decoding.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rvsym {

enum class Mnemonic : uint8_t {
  // RV32I
  LUI, AUIPC, JAL, JALR,
  BEQ, BNE, BLT, BGE, BLTU, BGEU,
  LB, LH, LW, LBU, LHU,
  SB, SH, SW,
  ADDI, SLTI, SLTIU, XORI, ORI, ANDI, SLLI, SRLI, SRAI,
  ADD, SUB, SLL, SLT, SLTU, XOR, SRL, SRA, OR, AND,
  FENCE, ECALL, EBREAK,
  // M extension
  MUL, MULH, MULHSU, MULHU, DIV, DIVU, REM, REMU,
};

inline constexpr int kMnemonicCount = static_cast<int>(Mnemonic::REMU) + 1;

/// Encoding format, which also determines which operand fields are meaningful.
enum class Format : uint8_t { R, I, IShift, S, B, U, J, None };

std::string_view to_string(Mnemonic m);
std::optional<Mnemonic> mnemonic_from_string(std::string_view name);
Format format_of(Mnemonic m);

enum class ByteSize : uint8_t { Byte = 1, Half = 2, Word = 4 };

constexpr unsigned byte_count(ByteSize s) { return static_cast<unsigned>(s); }

/// A decoded instruction. Fields not used by the instruction's format are 0.
/// `imm` is sign-extended; for LUI/AUIPC it holds the already-shifted value
/// (imm20 << 12), and for SLLI/SRLI/SRAI it holds the shift amount.
struct Instr {
  Mnemonic mnemonic = Mnemonic::FENCE;
  uint8_t rd = 0;
  uint8_t rs1 = 0;
  uint8_t rs2 = 0;
  int32_t imm = 0;

  friend bool operator==(const Instr&, const Instr&) = default;
};

class IllegalInstruction : public std::runtime_error {
 public:
  explicit IllegalInstruction(uint32_t word);
  uint32_t word() const { return word_; }

 private:
  uint32_t word_;
};

/// Decodes one 32-bit instruction word. Throws IllegalInstruction for
/// unknown opcodes, malformed funct fields and compressed encodings.
Instr decode(uint32_t word);

std::string disassemble(const Instr& instr);

}  // namespace rvsym
