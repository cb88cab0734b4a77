// Disassembles the executable segments of an RV32IM ELF with the engine's decoder.
#include <cstdio>
#include <iostream>

#include "rvsym/elf_loader.hpp"
#include "rvsym/isa.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: rvsym-dis IMAGE\n";
    return 2;
  }
  try {
    const auto image = rvsym::load_elf_image(rvsym::read_file(argv[1]));
    for (const auto& seg : image.segments) {
      if (!seg.executable) continue;
      for (uint32_t a = seg.vaddr; a + 4 <= seg.vaddr + seg.file_size; a += 4) {
        const uint32_t w = image.memory.read(a, 4);
        std::string text;
        try {
          text = rvsym::disassemble(rvsym::decode(w));
        } catch (const rvsym::IllegalInstruction&) {
          text = "<illegal>";
        }
        std::printf("%08x: %08x  %s\n", a, w, text.c_str());
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "rvsym-dis: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
