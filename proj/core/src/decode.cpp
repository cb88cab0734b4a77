#include <array>
#include <cstdio>

#include "rvsym/isa.hpp"

namespace rvsym {

namespace {

constexpr std::array<std::string_view, kMnemonicCount> kNames = {
    "lui",  "auipc", "jal",   "jalr", "beq",  "bne",  "blt",    "bge",   "bltu", "bgeu", "lb",   "lh",
    "lw",   "lbu",   "lhu",   "sb",   "sh",   "sw",   "addi",   "slti",  "sltiu", "xori", "ori",  "andi",
    "slli", "srli",  "srai",  "add",  "sub",  "sll",  "slt",    "sltu",  "xor",  "srl",  "sra",  "or",
    "and",  "fence", "ecall", "ebreak", "mul", "mulh", "mulhsu", "mulhu", "div",  "divu", "rem",  "remu",
};

uint32_t bits(uint32_t word, unsigned hi, unsigned lo) { return (word >> lo) & ((1u << (hi - lo + 1)) - 1); }

int32_t sext(uint32_t value, unsigned width) {
  const uint32_t sign = 1u << (width - 1);
  return static_cast<int32_t>((value ^ sign) - sign);
}

int32_t imm_i(uint32_t w) { return sext(bits(w, 31, 20), 12); }
int32_t imm_s(uint32_t w) { return sext((bits(w, 31, 25) << 5) | bits(w, 11, 7), 12); }
int32_t imm_b(uint32_t w) {
  return sext((bits(w, 31, 31) << 12) | (bits(w, 7, 7) << 11) | (bits(w, 30, 25) << 5) | (bits(w, 11, 8) << 1), 13);
}
int32_t imm_u(uint32_t w) { return static_cast<int32_t>(w & 0xFFFFF000u); }
int32_t imm_j(uint32_t w) {
  return sext((bits(w, 31, 31) << 20) | (bits(w, 19, 12) << 12) | (bits(w, 20, 20) << 11) | (bits(w, 30, 21) << 1),
              21);
}

}  // namespace

std::string_view to_string(Mnemonic m) { return kNames.at(static_cast<size_t>(m)); }

std::optional<Mnemonic> mnemonic_from_string(std::string_view name) {
  for (size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Mnemonic>(i);
  }
  return std::nullopt;
}

Format format_of(Mnemonic m) {
  switch (m) {
    case Mnemonic::LUI:
    case Mnemonic::AUIPC:
      return Format::U;
    case Mnemonic::JAL:
      return Format::J;
    case Mnemonic::BEQ:
    case Mnemonic::BNE:
    case Mnemonic::BLT:
    case Mnemonic::BGE:
    case Mnemonic::BLTU:
    case Mnemonic::BGEU:
      return Format::B;
    case Mnemonic::SB:
    case Mnemonic::SH:
    case Mnemonic::SW:
      return Format::S;
    case Mnemonic::SLLI:
    case Mnemonic::SRLI:
    case Mnemonic::SRAI:
      return Format::IShift;
    case Mnemonic::JALR:
    case Mnemonic::LB:
    case Mnemonic::LH:
    case Mnemonic::LW:
    case Mnemonic::LBU:
    case Mnemonic::LHU:
    case Mnemonic::ADDI:
    case Mnemonic::SLTI:
    case Mnemonic::SLTIU:
    case Mnemonic::XORI:
    case Mnemonic::ORI:
    case Mnemonic::ANDI:
      return Format::I;
    case Mnemonic::FENCE:
    case Mnemonic::ECALL:
    case Mnemonic::EBREAK:
      return Format::None;
    default:
      return Format::R;
  }
}

IllegalInstruction::IllegalInstruction(uint32_t word)
    : std::runtime_error([word] {
        char buf[48];
        std::snprintf(buf, sizeof buf, "illegal instruction 0x%08x", word);
        return std::string(buf);
      }()),
      word_(word) {}

Instr decode(uint32_t w) {
  if ((w & 0x3) != 0x3) throw IllegalInstruction(w);  // compressed or invalid

  const uint32_t opcode = bits(w, 6, 0);
  const uint32_t funct3 = bits(w, 14, 12);
  const uint32_t funct7 = bits(w, 31, 25);
  const auto rd = static_cast<uint8_t>(bits(w, 11, 7));
  const auto rs1 = static_cast<uint8_t>(bits(w, 19, 15));
  const auto rs2 = static_cast<uint8_t>(bits(w, 24, 20));

  auto r_type = [&](Mnemonic m) { return Instr{m, rd, rs1, rs2, 0}; };
  auto i_type = [&](Mnemonic m) { return Instr{m, rd, rs1, 0, imm_i(w)}; };

  switch (opcode) {
    case 0x37:
      return {Mnemonic::LUI, rd, 0, 0, imm_u(w)};
    case 0x17:
      return {Mnemonic::AUIPC, rd, 0, 0, imm_u(w)};
    case 0x6F:
      return {Mnemonic::JAL, rd, 0, 0, imm_j(w)};
    case 0x67:
      if (funct3 != 0) break;
      return i_type(Mnemonic::JALR);
    case 0x63: {
      static constexpr std::array<std::optional<Mnemonic>, 8> kBranch = {
          Mnemonic::BEQ, Mnemonic::BNE, std::nullopt, std::nullopt,
          Mnemonic::BLT, Mnemonic::BGE, Mnemonic::BLTU, Mnemonic::BGEU};
      if (!kBranch[funct3]) break;
      return {*kBranch[funct3], 0, rs1, rs2, imm_b(w)};
    }
    case 0x03: {
      static constexpr std::array<std::optional<Mnemonic>, 8> kLoad = {
          Mnemonic::LB, Mnemonic::LH, Mnemonic::LW, std::nullopt, Mnemonic::LBU, Mnemonic::LHU, std::nullopt,
          std::nullopt};
      if (!kLoad[funct3]) break;
      return i_type(*kLoad[funct3]);
    }
    case 0x23: {
      static constexpr std::array<std::optional<Mnemonic>, 8> kStore = {
          Mnemonic::SB, Mnemonic::SH, Mnemonic::SW, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
          std::nullopt};
      if (!kStore[funct3]) break;
      return {*kStore[funct3], 0, rs1, rs2, imm_s(w)};
    }
    case 0x13:
      switch (funct3) {
        case 0: return i_type(Mnemonic::ADDI);
        case 2: return i_type(Mnemonic::SLTI);
        case 3: return i_type(Mnemonic::SLTIU);
        case 4: return i_type(Mnemonic::XORI);
        case 6: return i_type(Mnemonic::ORI);
        case 7: return i_type(Mnemonic::ANDI);
        case 1:
          if (funct7 != 0) break;
          return {Mnemonic::SLLI, rd, rs1, 0, static_cast<int32_t>(rs2)};
        case 5:
          if (funct7 == 0x00) return {Mnemonic::SRLI, rd, rs1, 0, static_cast<int32_t>(rs2)};
          if (funct7 == 0x20) return {Mnemonic::SRAI, rd, rs1, 0, static_cast<int32_t>(rs2)};
          break;
      }
      break;
    case 0x33:
      if (funct7 == 0x00) {
        static constexpr std::array<Mnemonic, 8> kBase = {Mnemonic::ADD, Mnemonic::SLL, Mnemonic::SLT,
                                                          Mnemonic::SLTU, Mnemonic::XOR, Mnemonic::SRL,
                                                          Mnemonic::OR,  Mnemonic::AND};
        return r_type(kBase[funct3]);
      }
      if (funct7 == 0x20) {
        if (funct3 == 0) return r_type(Mnemonic::SUB);
        if (funct3 == 5) return r_type(Mnemonic::SRA);
        break;
      }
      if (funct7 == 0x01) {
        static constexpr std::array<Mnemonic, 8> kMul = {Mnemonic::MUL, Mnemonic::MULH, Mnemonic::MULHSU,
                                                         Mnemonic::MULHU, Mnemonic::DIV, Mnemonic::DIVU,
                                                         Mnemonic::REM, Mnemonic::REMU};
        return r_type(kMul[funct3]);
      }
      break;
    case 0x0F:
      // FENCE; pred/succ/fm fields carry no meaning for a single hart.
      if (funct3 != 0) break;
      return {Mnemonic::FENCE, 0, 0, 0, 0};
    case 0x73:
      if (w == 0x00000073) return {Mnemonic::ECALL, 0, 0, 0, 0};
      if (w == 0x00100073) return {Mnemonic::EBREAK, 0, 0, 0, 0};
      break;
    default:
      break;
  }
  throw IllegalInstruction(w);
}

std::string disassemble(const Instr& in) {
  char buf[64];
  const auto name = std::string(to_string(in.mnemonic));
  switch (format_of(in.mnemonic)) {
    case Format::R:
      std::snprintf(buf, sizeof buf, "%s x%u, x%u, x%u", name.c_str(), in.rd, in.rs1, in.rs2);
      break;
    case Format::I:
    case Format::IShift:
      std::snprintf(buf, sizeof buf, "%s x%u, x%u, %d", name.c_str(), in.rd, in.rs1, in.imm);
      break;
    case Format::S:
    case Format::B:
      std::snprintf(buf, sizeof buf, "%s x%u, x%u, %d", name.c_str(), in.rs1, in.rs2, in.imm);
      break;
    case Format::U:
    case Format::J:
      std::snprintf(buf, sizeof buf, "%s x%u, %d", name.c_str(), in.rd, in.imm);
      break;
    case Format::None:
      return name;
  }
  return buf;
}

}  // namespace rvsym
