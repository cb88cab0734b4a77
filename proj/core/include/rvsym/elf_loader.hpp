#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "rvsym/machine.hpp"

namespace rvsym {

class LoadError : public std::runtime_error {
 public:
  enum class Kind { kBadImage, kOverlappingSegments };
  LoadError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct LoadOptions {
  uint32_t stack_top = 0x80000000u;
  uint32_t stack_size = 64 * 1024;  // mapped below stack_top
  bool strict_memory = false;
};

struct Segment {
  uint32_t vaddr = 0;
  uint32_t file_size = 0;
  uint32_t mem_size = 0;
  bool writable = false;
  bool executable = false;
};

/// Memory contents and entry state of an ELF32 RISC-V executable.
struct LoadedImage {
  PagedMemory memory;
  uint32_t entry = 0;
  uint32_t stack_top = 0;
  std::vector<Segment> segments;

  ConcolicState concolic_state() const;
  ConcreteState concrete_state() const;
};

LoadedImage load_elf_image(std::span<const uint8_t> image, const LoadOptions& options = {});

/// Loads into a fresh state: segments copied, x2 = stack top. Returns the entry point.
uint32_t load_elf(std::span<const uint8_t> image, ConcolicState& state, const LoadOptions& options = {});

std::vector<uint8_t> read_file(const std::filesystem::path& path);

}  // namespace rvsym
