#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rvsym/isa.hpp"
#include "rvsym/solver.hpp"

namespace rvsym {

enum class FaultKind {
  kMisalignedPC,
  kIllegalInstruction,
  kUnmappedRead,
  kBreakpoint,
  kUnknownHypercall,
};

const char* to_string(FaultKind k);

/// Runtime error raised by the machine; ends a run with a Fault status.
class MachineFault : public std::runtime_error {
 public:
  MachineFault(FaultKind kind, uint32_t pc, uint32_t detail = 0);
  FaultKind kind() const { return kind_; }
  uint32_t pc() const { return pc_; }
  uint32_t detail() const { return detail_; }

 private:
  FaultKind kind_;
  uint32_t pc_;
  uint32_t detail_;
};

/// 32 registers of value type V; x0 reads as V{} and ignores writes.
template <class V>
class RegisterFile {
 public:
  V read(unsigned index) const { return index == 0 ? V{} : regs_.at(index); }
  void write(unsigned index, V value) {
    if (index != 0) regs_.at(index) = std::move(value);
  }

 private:
  std::array<V, 32> regs_{};
};

/// Sparse byte-addressed memory in 4 KiB pages. Copies share pages until one
/// side writes, so snapshots are cheap.
class PagedMemory {
 public:
  static constexpr unsigned kPageBits = 12;
  static constexpr uint32_t kPageSize = 1u << kPageBits;

  void set_strict(bool strict) { strict_ = strict; }
  bool strict() const { return strict_; }

  /// Unmapped bytes read as 0, or fault in strict mode.
  uint8_t read8(uint32_t addr) const;
  void write8(uint32_t addr, uint8_t value);
  uint32_t read(uint32_t addr, unsigned size) const;
  void write(uint32_t addr, uint32_t value, unsigned size);
  void write_bytes(uint32_t addr, std::span<const uint8_t> bytes);

  /// Ensures [addr, addr+len) is backed by (zeroed) pages.
  void map(uint32_t addr, uint32_t len);
  bool is_mapped(uint32_t addr) const;

  /// Byte-wise equality; unmapped bytes compare as 0.
  bool same_contents(const PagedMemory& other) const;
  size_t page_count() const { return pages_.size(); }

 private:
  using Page = std::array<uint8_t, kPageSize>;
  Page& writable_page(uint32_t addr);

  std::unordered_map<uint32_t, std::shared_ptr<Page>> pages_;
  bool strict_ = false;
};

struct ConcolicWord {
  uint32_t concrete = 0;
  std::optional<TermHandle> symbolic;

  ConcolicWord() = default;
  explicit ConcolicWord(uint32_t c) : concrete(c) {}
  ConcolicWord(uint32_t c, TermHandle s) : concrete(c), symbolic(std::move(s)) {}
  bool is_symbolic() const { return symbolic.has_value(); }
};

struct ConcolicByte {
  uint8_t concrete = 0;
  std::optional<TermHandle> symbolic;
};

/// Concrete bytes plus a sparse map of symbolic shadows (8-bit terms).
class ConcolicMemory {
 public:
  ConcolicMemory() = default;
  explicit ConcolicMemory(PagedMemory bytes) : bytes_(std::move(bytes)) {}

  ConcolicByte read_byte(uint32_t addr) const;
  void write_byte(uint32_t addr, ConcolicByte value);

  PagedMemory& concrete() { return bytes_; }
  const PagedMemory& concrete() const { return bytes_; }
  size_t symbolic_byte_count() const { return shadow_.size(); }
  bool has_symbolic(uint32_t addr) const { return shadow_.count(addr) != 0; }

 private:
  PagedMemory bytes_;
  std::unordered_map<uint32_t, TermHandle> shadow_;
};

/// A symbolic value was replaced by its concrete part.
struct ConcretizationEvent {
  enum class Kind { kLoadAddress, kStoreAddress, kJumpTarget };
  Kind kind;
  uint32_t pc;
  uint32_t value;
};

/// Register file, memory and PC of one concolic execution.
class ConcolicState {
 public:
  RegisterFile<ConcolicWord> regs;
  ConcolicMemory mem;
  uint32_t pc = 0;
  std::optional<int32_t> exit_code;
  uint64_t step_count = 0;
  std::vector<ConcretizationEvent> events;

  ConcolicWord read_register(unsigned index) const { return regs.read(index); }
  void write_register(unsigned index, ConcolicWord value) { regs.write(index, std::move(value)); }

  /// The address is concretized; symbolic bytes are composed little-endian.
  ConcolicWord load_mem(Session& session, ByteSize size, bool sign_extend, const ConcolicWord& addr);
  void store_mem(Session& session, ByteSize size, const ConcolicWord& addr, const ConcolicWord& value);

  /// Concrete little-endian word at pc; symbolic parts are ignored.
  uint32_t fetch_instruction() const;
};

/// Register file, memory and PC for plain concrete execution.
class ConcreteState {
 public:
  RegisterFile<uint32_t> regs;
  PagedMemory mem;
  uint32_t pc = 0;
  std::optional<int32_t> exit_code;
  uint64_t step_count = 0;

  uint32_t load_mem(ByteSize size, bool sign_extend, uint32_t addr) const;
  void store_mem(ByteSize size, uint32_t addr, uint32_t value);
  uint32_t fetch_instruction() const;
};

}  // namespace rvsym
