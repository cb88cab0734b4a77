#include "rvsym/elf_loader.hpp"

#include <elf.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>

namespace rvsym {

namespace {

constexpr uint16_t kMachineRiscv = 243;

template <class T>
T read_struct(std::span<const uint8_t> image, uint64_t offset) {
  if (offset + sizeof(T) > image.size()) throw LoadError(LoadError::Kind::kBadImage, "truncated ELF image");
  T value;
  std::memcpy(&value, image.data() + offset, sizeof(T));
  return value;
}

}  // namespace

LoadedImage load_elf_image(std::span<const uint8_t> image, const LoadOptions& options) {
  using K = LoadError::Kind;
  if (image.size() < EI_NIDENT || std::memcmp(image.data(), ELFMAG, SELFMAG) != 0) {
    throw LoadError(K::kBadImage, "not an ELF file");
  }
  if (image[EI_CLASS] != ELFCLASS32) throw LoadError(K::kBadImage, "not an ELF32 image");
  if (image[EI_DATA] != ELFDATA2LSB) throw LoadError(K::kBadImage, "not little-endian");

  const auto eh = read_struct<Elf32_Ehdr>(image, 0);
  if (eh.e_machine != kMachineRiscv) throw LoadError(K::kBadImage, "not a RISC-V image");
  if (eh.e_type != ET_EXEC) throw LoadError(K::kBadImage, "not an executable (ET_EXEC)");
  if (eh.e_phentsize != sizeof(Elf32_Phdr)) throw LoadError(K::kBadImage, "unexpected program header size");

  LoadedImage out;
  out.entry = eh.e_entry;
  out.stack_top = options.stack_top;
  out.memory.set_strict(options.strict_memory);

  for (unsigned i = 0; i < eh.e_phnum; ++i) {
    const auto ph = read_struct<Elf32_Phdr>(image, uint64_t{eh.e_phoff} + uint64_t{i} * sizeof(Elf32_Phdr));
    if (ph.p_type != PT_LOAD || ph.p_memsz == 0) continue;
    if (ph.p_filesz > ph.p_memsz) throw LoadError(K::kBadImage, "segment file size exceeds memory size");
    if (uint64_t{ph.p_offset} + ph.p_filesz > image.size()) throw LoadError(K::kBadImage, "segment out of file");
    if (uint64_t{ph.p_vaddr} + ph.p_memsz > (uint64_t{1} << 32)) {
      throw LoadError(K::kBadImage, "segment exceeds address space");
    }
    for (const auto& s : out.segments) {
      const bool disjoint = ph.p_vaddr + uint64_t{ph.p_memsz} <= s.vaddr || s.vaddr + uint64_t{s.mem_size} <= ph.p_vaddr;
      if (!disjoint) throw LoadError(K::kOverlappingSegments, "overlapping PT_LOAD segments");
    }
    out.segments.push_back({ph.p_vaddr, ph.p_filesz, ph.p_memsz, (ph.p_flags & PF_W) != 0, (ph.p_flags & PF_X) != 0});
    out.memory.map(ph.p_vaddr, ph.p_memsz);
    out.memory.write_bytes(ph.p_vaddr, image.subspan(ph.p_offset, ph.p_filesz));
  }
  if (options.stack_size > 0) {
    const uint32_t size = std::min(options.stack_size, options.stack_top);
    out.memory.map(options.stack_top - size, size);
  }
  return out;
}

ConcolicState LoadedImage::concolic_state() const {
  ConcolicState s;
  s.mem = ConcolicMemory(memory);
  s.pc = entry;
  s.regs.write(2, ConcolicWord(stack_top));
  return s;
}

ConcreteState LoadedImage::concrete_state() const {
  ConcreteState s;
  s.mem = memory;
  s.pc = entry;
  s.regs.write(2, stack_top);
  return s;
}

uint32_t load_elf(std::span<const uint8_t> image, ConcolicState& state, const LoadOptions& options) {
  state = load_elf_image(image, options).concolic_state();
  return state.pc;
}

std::vector<uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace rvsym
