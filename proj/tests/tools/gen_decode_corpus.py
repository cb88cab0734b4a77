#!/usr/bin/env python3
"""Builds tests/data/decode_corpus.tsv.

Random RV32IM instructions are written as assembly, assembled with clang's
integrated assembler, and the resulting words are paired with the operands
that were asked for. The decoder test checks it recovers those operands.
"""
import argparse
import os
import random
import subprocess
import sys
import tempfile

from elftools.elf.elffile import ELFFile

R = ["add", "sub", "sll", "slt", "sltu", "xor", "srl", "sra", "or", "and",
     "mul", "mulh", "mulhsu", "mulhu", "div", "divu", "rem", "remu"]
I = ["addi", "slti", "sltiu", "xori", "ori", "andi"]
SHIFT = ["slli", "srli", "srai"]
LOAD = ["lb", "lh", "lw", "lbu", "lhu"]
STORE = ["sb", "sh", "sw"]
BRANCH = ["beq", "bne", "blt", "bge", "bltu", "bgeu"]


def gen(rng):
    """Returns (asm, mnemonic, rd, rs1, rs2, imm) with imm in decoder convention."""
    reg = lambda: rng.randrange(32)
    kind = rng.choices(["r", "i", "shift", "load", "store", "branch", "u", "jal", "jalr", "sys"],
                       weights=[18, 6, 3, 5, 3, 6, 2, 1, 1, 1])[0]
    if kind == "r":
        m, rd, a, b = rng.choice(R), reg(), reg(), reg()
        return f"{m} x{rd}, x{a}, x{b}", m, rd, a, b, 0
    if kind == "i":
        m, rd, a, imm = rng.choice(I), reg(), reg(), rng.randrange(-2048, 2048)
        return f"{m} x{rd}, x{a}, {imm}", m, rd, a, 0, imm
    if kind == "shift":
        m, rd, a, sh = rng.choice(SHIFT), reg(), reg(), rng.randrange(32)
        return f"{m} x{rd}, x{a}, {sh}", m, rd, a, 0, sh
    if kind == "load":
        m, rd, a, imm = rng.choice(LOAD), reg(), reg(), rng.randrange(-2048, 2048)
        return f"{m} x{rd}, {imm}(x{a})", m, rd, a, 0, imm
    if kind == "store":
        m, a, b, imm = rng.choice(STORE), reg(), reg(), rng.randrange(-2048, 2048)
        return f"{m} x{b}, {imm}(x{a})", m, 0, a, b, imm
    if kind == "branch":
        m, a, b = rng.choice(BRANCH), reg(), reg()
        off = rng.randrange(-2048, 2048) * 2
        return f"{m} x{a}, x{b}, {off}", m, 0, a, b, off
    if kind == "u":
        m, rd, imm20 = rng.choice(["lui", "auipc"]), reg(), rng.randrange(1 << 20)
        imm = imm20 << 12
        if imm >= 1 << 31:
            imm -= 1 << 32
        return f"{m} x{rd}, {imm20}", m, rd, 0, 0, imm
    if kind == "jal":
        rd, off = reg(), rng.randrange(-(1 << 19), 1 << 19) * 2
        return f"jal x{rd}, {off}", "jal", rd, 0, 0, off
    if kind == "jalr":
        rd, a, imm = reg(), reg(), rng.randrange(-2048, 2048)
        return f"jalr x{rd}, {imm}(x{a})", "jalr", rd, a, 0, imm
    m = rng.choice(["ecall", "ebreak", "fence"])
    return m, m, 0, 0, 0, 0


def assemble(lines, clang):
    with tempfile.TemporaryDirectory() as tmp:
        src = os.path.join(tmp, "corpus.s")
        obj = os.path.join(tmp, "corpus.o")
        with open(src, "w") as f:
            f.write("  .text\n  .option norelax\n")
            for line in lines:
                f.write(f"  {line}\n")
        subprocess.run([clang, "--target=riscv32-unknown-elf", "-march=rv32im", "-c", src, "-o", obj],
                       check=True)
        with open(obj, "rb") as f:
            elf = ELFFile(f)
            if elf.get_section_by_name(".rela.text"):
                sys.exit("unexpected relocations in corpus object")
            data = elf.get_section_by_name(".text").data()
    return [int.from_bytes(data[i:i + 4], "little") for i in range(0, len(data), 4)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=20240615)
    ap.add_argument("--clang", default="clang")
    ap.add_argument("-o", "--output", required=True)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    rows = [gen(rng) for _ in range(args.count)]
    words = assemble([r[0] for r in rows], args.clang)
    if len(words) != len(rows):
        sys.exit(f"assembled {len(words)} words for {len(rows)} instructions")
    with open(args.output, "w") as f:
        f.write("# word\tmnemonic\trd\trs1\trs2\timm\tasm\n")
        for w, (asm, m, rd, a, b, imm) in zip(words, rows):
            f.write(f"{w:08x}\t{m}\t{rd}\t{a}\t{b}\t{imm}\t{asm}\n")


if __name__ == "__main__":
    main()
