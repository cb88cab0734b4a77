#include "rvsym/machine.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace rvsym {

const char* to_string(FaultKind k) {
  switch (k) {
    case FaultKind::kMisalignedPC: return "MisalignedPC";
    case FaultKind::kIllegalInstruction: return "IllegalInstruction";
    case FaultKind::kUnmappedRead: return "UnmappedRead";
    case FaultKind::kBreakpoint: return "Breakpoint";
    case FaultKind::kUnknownHypercall: return "UnknownHypercall";
  }
  return "?";
}

MachineFault::MachineFault(FaultKind kind, uint32_t pc, uint32_t detail)
    : std::runtime_error([&] {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s at pc=0x%08x (0x%08x)", to_string(kind), pc, detail);
        return std::string(buf);
      }()),
      kind_(kind),
      pc_(pc),
      detail_(detail) {}

// ---------------------------------------------------------------------------
// PagedMemory

uint8_t PagedMemory::read8(uint32_t addr) const {
  auto it = pages_.find(addr >> kPageBits);
  if (it == pages_.end()) {
    if (strict_) throw MachineFault(FaultKind::kUnmappedRead, 0, addr);
    return 0;
  }
  return (*it->second)[addr & (kPageSize - 1)];
}

PagedMemory::Page& PagedMemory::writable_page(uint32_t addr) {
  auto& slot = pages_[addr >> kPageBits];
  if (!slot) {
    slot = std::make_shared<Page>();
    slot->fill(0);
  } else if (slot.use_count() > 1) {
    slot = std::make_shared<Page>(*slot);
  }
  return *slot;
}

void PagedMemory::write8(uint32_t addr, uint8_t value) { writable_page(addr)[addr & (kPageSize - 1)] = value; }

uint32_t PagedMemory::read(uint32_t addr, unsigned size) const {
  uint32_t v = 0;
  for (unsigned i = 0; i < size; ++i) v |= uint32_t{read8(addr + i)} << (8 * i);
  return v;
}

void PagedMemory::write(uint32_t addr, uint32_t value, unsigned size) {
  for (unsigned i = 0; i < size; ++i) write8(addr + i, static_cast<uint8_t>(value >> (8 * i)));
}

void PagedMemory::write_bytes(uint32_t addr, std::span<const uint8_t> bytes) {
  for (size_t i = 0; i < bytes.size(); ++i) write8(addr + static_cast<uint32_t>(i), bytes[i]);
}

void PagedMemory::map(uint32_t addr, uint32_t len) {
  if (len == 0) return;
  const uint64_t first = addr >> kPageBits;
  const uint64_t last = (uint64_t{addr} + len - 1) >> kPageBits;
  for (uint64_t p = first; p <= last; ++p) {
    auto& slot = pages_[static_cast<uint32_t>(p)];
    if (!slot) {
      slot = std::make_shared<Page>();
      slot->fill(0);
    }
  }
}

bool PagedMemory::is_mapped(uint32_t addr) const { return pages_.count(addr >> kPageBits) != 0; }

bool PagedMemory::same_contents(const PagedMemory& other) const {
  static const Page kZero = [] {
    Page p;
    p.fill(0);
    return p;
  }();
  std::set<uint32_t> keys;
  for (const auto& [k, _] : pages_) keys.insert(k);
  for (const auto& [k, _] : other.pages_) keys.insert(k);
  for (uint32_t k : keys) {
    auto a = pages_.find(k);
    auto b = other.pages_.find(k);
    const Page& pa = a == pages_.end() ? kZero : *a->second;
    const Page& pb = b == other.pages_.end() ? kZero : *b->second;
    if (pa != pb) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ConcolicMemory

ConcolicByte ConcolicMemory::read_byte(uint32_t addr) const {
  ConcolicByte b{bytes_.read8(addr), std::nullopt};
  if (auto it = shadow_.find(addr); it != shadow_.end()) b.symbolic = it->second;
  return b;
}

void ConcolicMemory::write_byte(uint32_t addr, ConcolicByte value) {
  bytes_.write8(addr, value.concrete);
  if (value.symbolic) {
    shadow_.insert_or_assign(addr, std::move(*value.symbolic));
  } else {
    shadow_.erase(addr);
  }
}

// ---------------------------------------------------------------------------
// ConcolicState

ConcolicWord ConcolicState::load_mem(Session& session, ByteSize size, bool sign_extend, const ConcolicWord& addr) {
  if (addr.is_symbolic()) events.push_back({ConcretizationEvent::Kind::kLoadAddress, pc, addr.concrete});
  const unsigned n = byte_count(size);
  const unsigned bits = 8 * n;

  std::array<ConcolicByte, 4> bytes;
  bool symbolic = false;
  uint32_t raw = 0;
  for (unsigned i = 0; i < n; ++i) {
    bytes[i] = mem.read_byte(addr.concrete + i);
    raw |= uint32_t{bytes[i].concrete} << (8 * i);
    symbolic |= bytes[i].symbolic.has_value();
  }
  const uint32_t concrete =
      sign_extend ? static_cast<uint32_t>(rvsym::sign_extend(raw, bits)) : raw;
  if (!symbolic) return ConcolicWord(concrete);

  // value = OR_i (zext(byte_i) << 8i) at the access width, then extended to 32.
  using E = Expr<TermHandle>;
  const Width access(bits);
  auto byte_expr = [&](unsigned i) {
    return bytes[i].symbolic ? E::make_leaf(*bytes[i].symbolic) : E::from_int(kByte, bytes[i].concrete);
  };
  E value = n == 1 ? byte_expr(0) : E::zext(bits - 8, byte_expr(0));
  for (unsigned i = 1; i < n; ++i) {
    E shifted = sll(E::zext(bits - 8, byte_expr(i)), E::from_int(access, 8 * i));
    value = bv_or(std::move(value), std::move(shifted));
  }
  if (bits < 32) value = sign_extend ? E::sext(32 - bits, value) : E::zext(32 - bits, value);
  return ConcolicWord(concrete, session.lower(value));
}

void ConcolicState::store_mem(Session& session, ByteSize size, const ConcolicWord& addr, const ConcolicWord& value) {
  if (addr.is_symbolic()) events.push_back({ConcretizationEvent::Kind::kStoreAddress, pc, addr.concrete});
  using E = Expr<TermHandle>;
  for (unsigned i = 0; i < byte_count(size); ++i) {
    ConcolicByte b{static_cast<uint8_t>(value.concrete >> (8 * i)), std::nullopt};
    if (value.symbolic) b.symbolic = session.lower(E::extract(8 * i, kByte, E::make_leaf(*value.symbolic)));
    mem.write_byte(addr.concrete + i, std::move(b));
  }
}

uint32_t ConcolicState::fetch_instruction() const {
  if (pc % 4 != 0) throw MachineFault(FaultKind::kMisalignedPC, pc, pc);
  return mem.concrete().read(pc, 4);
}

// ---------------------------------------------------------------------------
// ConcreteState

uint32_t ConcreteState::load_mem(ByteSize size, bool sign_extend, uint32_t addr) const {
  const unsigned n = byte_count(size);
  const uint32_t raw = mem.read(addr, n);
  return sign_extend ? static_cast<uint32_t>(rvsym::sign_extend(raw, 8 * n)) : raw;
}

void ConcreteState::store_mem(ByteSize size, uint32_t addr, uint32_t value) { mem.write(addr, value, byte_count(size)); }

uint32_t ConcreteState::fetch_instruction() const {
  if (pc % 4 != 0) throw MachineFault(FaultKind::kMisalignedPC, pc, pc);
  return mem.read(pc, 4);
}

}  // namespace rvsym
