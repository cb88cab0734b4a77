#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "random_expr.hpp"
#include "rvsym/concrete.hpp"
#include "rvsym/engine.hpp"
#include "test_support.hpp"

namespace rvsym {
namespace {

using CE = Expr<ConcolicWord>;
using TE = Expr<TermHandle>;

TermHandle sym32(Session& s, const std::string& name) { return s.lower(TE::zext(24, TE::make_leaf(s.var({name})))); }

CE cw(uint32_t c) { return CE::make_leaf(ConcolicWord(c)); }
CE cw(uint32_t c, TermHandle t) { return CE::make_leaf(ConcolicWord(c, std::move(t))); }

TEST(EvalConcolic, Examples) {
  Session s;
  const ConcolicWord sum = eval_concolic(CE::binary(ExprKind::kAdd, cw(2), cw(3)), s);
  EXPECT_EQ(sum.concrete, 5u);
  EXPECT_FALSE(sum.is_symbolic());

  const TermHandle x = sym32(s, "x");
  const ConcolicWord eq = eval_concolic(CE::binary(ExprKind::kEq, cw(7, x), cw(7)), s);
  EXPECT_EQ(eq.concrete, 1u);
  ASSERT_TRUE(eq.is_symbolic());
  EXPECT_EQ(s.evaluate(*eq.symbolic, {{"x", 7}}), 1u);
  EXPECT_EQ(s.evaluate(*eq.symbolic, {{"x", 8}}), 0u);

  const TermHandle y = sym32(s, "y");
  const ConcolicWord lt = eval_concolic(CE::binary(ExprKind::kSltS, cw(0xFFFFFFFF), cw(0, y)), s);
  EXPECT_EQ(lt.concrete, 1u);
  ASSERT_TRUE(lt.is_symbolic());
  EXPECT_EQ(s.evaluate(*lt.symbolic, {{"y", 0}}), 1u);
  EXPECT_EQ(lt.symbolic->width(), kWord);

  EXPECT_THROW(eval_concolic(CE::extract(0, kByte, cw(1)), s), MalformedExpression);
}

// For random trees over mixed leaves: the concrete part equals concrete
// evaluation of the concrete parts, and the symbolic part, evaluated under
// the inputs that produced the concrete parts, gives the same value.
TEST(EvalConcolic, ProjectionProperty) {
  Session s;
  std::vector<TermHandle> words;
  for (unsigned i = 0; i < 4; ++i) {
    TE w = TE::from_int(kWord, 0);
    for (unsigned b = 0; b < 4; ++b) {
      const TermHandle v = s.declare_var({"p" + std::to_string(i) + "_" + std::to_string(b)});
      w = TE::binary(ExprKind::kOr, w, TE::binary(ExprKind::kSll, TE::zext(24, TE::make_leaf(v)), TE::from_int(kWord, 8 * b)));
    }
    words.push_back(s.lower(w));
  }
  auto rng = test::rng(21);
  Model model;
  std::array<uint32_t, 4> values{};
  for (int i = 0; i < 10'000; ++i) {
    for (unsigned w = 0; w < 4; ++w) {
      values[w] = static_cast<uint32_t>(test::random_value(rng, kWord));
      for (unsigned b = 0; b < 4; ++b) model["p" + std::to_string(w) + "_" + std::to_string(b)] = values[w] >> (8 * b) & 0xFF;
    }
    auto leaf = [&](std::mt19937_64& r) {
      if (r() % 2) return cw(static_cast<uint32_t>(test::random_value(r, kWord)));
      const unsigned w = r() % 4;
      return cw(values[w], words[w]);
    };
    const CE e = test::random_expr<ConcolicWord>(rng, kWord, 4, leaf);
    const ConcolicWord got = eval_concolic(e, s);
    const auto plain = map_leaves<uint32_t>(e, [](const ConcolicWord& w) { return Expr<uint32_t>::make_leaf(w.concrete); });
    ASSERT_EQ(got.concrete, eval_concrete(plain)) << "sample " << i;
    bool any_symbolic = false;
    for_each_leaf(e, [&](const ConcolicWord& w) { any_symbolic |= w.is_symbolic(); });
    ASSERT_EQ(got.is_symbolic(), any_symbolic);
    if (got.is_symbolic()) {
      ASSERT_EQ(s.evaluate(*got.symbolic, model), got.concrete) << "sample " << i;
    }
  }
}

TEST(ExecSequence, BeqExamples) {
  Session s;
  const auto seq = semantics_of(Instr{Mnemonic::BEQ, 0, 1, 2, 8});
  struct Case {
    uint32_t rs1;
    bool symbolic;
    uint32_t next_pc;
    size_t events;
  };
  for (const Case& c : {Case{5, false, 0x1008, 0}, Case{5, true, 0x1008, 1}, Case{4, true, 0x1004, 1}}) {
    ConcolicState st;
    st.write_register(1, c.symbolic ? ConcolicWord(c.rs1, sym32(s, "s")) : ConcolicWord(c.rs1));
    st.write_register(2, ConcolicWord(5));
    st.pc = 0x1004;
    RunContext ctx;
    exec_sequence(st, s, seq, 0x1000, ctx);
    EXPECT_EQ(st.pc, c.next_pc);
    ASSERT_EQ(ctx.trace.size(), c.events);
    if (c.events) {
      EXPECT_EQ(ctx.trace[0].taken, c.rs1 == 5);
      EXPECT_EQ(ctx.trace[0].pc, 0x1000u);
    }
  }
}

TEST(ExecSequence, SymbolicJumpTargetIsConcretized) {
  Session s;
  ConcolicState st;
  st.write_register(5, ConcolicWord(0x2000, sym32(s, "t")));
  st.pc = 0x1004;
  RunContext ctx;
  exec_sequence(st, s, semantics_of(Instr{Mnemonic::JALR, 1, 5, 0, 0}), 0x1000, ctx);
  EXPECT_EQ(st.pc, 0x2000u);
  EXPECT_EQ(st.read_register(1).concrete, 0x1004u);
  ASSERT_EQ(st.events.size(), 1u);
  EXPECT_EQ(st.events[0].kind, ConcretizationEvent::Kind::kJumpTarget);
}

std::vector<uint32_t> concat(std::vector<uint32_t> a, const std::vector<uint32_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// make_symbolic(0x20000, 1); t0 = *0x20000; if (t0 == 0) skip one addi; exit(0)
std::vector<uint32_t> branch_once() {
  return concat({test::enc::lui(10, 0x20), test::enc::addi(11, 0, 1), test::enc::addi(17, 0, 2), test::enc::ecall(),
                 test::enc::lbu(5, 10, 0), test::enc::beq(5, 0, 8), test::enc::addi(6, 0, 1)},
                test::exit_with(0));
}

RunResult run_words(Session& s, const std::vector<uint32_t>& words, const Model& overrides = {},
                    const RunLimits& limits = {}) {
  return run(load_elf_image(test::make_program(words)).concolic_state(), s, overrides, limits);
}

TEST(Run, Examples) {
  Session s;
  const RunResult r0 = run_words(s, test::exit_with(0));
  EXPECT_EQ(r0.exit.to_string(), "Exited(0)");
  EXPECT_TRUE(r0.trace.empty());

  const RunResult r1 = run_words(s, branch_once());
  EXPECT_EQ(r1.exit.to_string(), "Exited(0)");
  ASSERT_EQ(r1.trace.size(), 1u);
  EXPECT_TRUE(r1.trace[0].taken);  // seed byte is 0
  EXPECT_EQ(r1.steps, 9u);
  ASSERT_EQ(r1.symbolic_inputs.size(), 1u);
  EXPECT_EQ(r1.symbolic_inputs[0].name, "in_0_0");

  const RunResult r2 = run_words(s, branch_once(), {{"in_0_0", 9}});
  ASSERT_EQ(r2.trace.size(), 1u);
  EXPECT_FALSE(r2.trace[0].taken);
  EXPECT_EQ(r2.steps, 10u);
  EXPECT_EQ(r2.inputs.at("in_0_0"), 9);
  EXPECT_EQ(r2.final_state.read_register(6).concrete, 1u);

  std::vector<uint32_t> words;
  for (int i = 0; i < 8; ++i) words.push_back(test::enc::addi(5, 5, 1));
  words.push_back(test::enc::addi(10, 0, 0));
  words.push_back(test::enc::addi(17, 0, 1));
  words.push_back(test::enc::ecall());
  const RunResult r3 = run_words(s, words);
  EXPECT_EQ(r3.steps, 11u);
  EXPECT_EQ(r3.final_state.read_register(5).concrete, 8u);
}

TEST(Run, StepLimitAndFaults) {
  Session s;
  const RunResult loop = run_words(s, {test::enc::beq(0, 0, 0)}, {}, RunLimits{1000});
  EXPECT_EQ(loop.exit.kind, RunStatus::Kind::kStepLimit);
  EXPECT_TRUE(loop.exit.truncated());
  EXPECT_EQ(loop.steps, 1000u);

  const RunResult illegal = run_words(s, {test::enc::addi(5, 0, 1), 0xFFFFFFFF});
  EXPECT_EQ(illegal.exit.kind, RunStatus::Kind::kFault);
  EXPECT_EQ(illegal.exit.fault, FaultKind::kIllegalInstruction);
  EXPECT_EQ(illegal.exit.pc, 0x10004u);

  const RunResult brk = run_words(s, {0x00100073});
  EXPECT_EQ(brk.exit.fault, FaultKind::kBreakpoint);

  // jump to 0x10002
  const RunResult misaligned = run_words(s, {test::enc::lui(5, 0x10), test::enc::addi(5, 5, 2), 0x00028067});
  EXPECT_EQ(misaligned.exit.fault, FaultKind::kMisalignedPC);
  EXPECT_EQ(misaligned.exit.pc, 0x10002u);

  const RunResult unknown = run_words(s, {test::enc::addi(17, 0, 99), test::enc::ecall()});
  EXPECT_EQ(unknown.exit.fault, FaultKind::kUnknownHypercall);
  EXPECT_EQ(unknown.exit.pc, 0x10004u);
  EXPECT_NE(unknown.exit.to_string().find("Fault("), std::string::npos);
}

TEST(Ecall, Examples) {
  Session s;
  ConcolicState st;
  for (uint8_t i = 0; i < 4; ++i) st.mem.write_byte(0x1000 + i, ConcolicByte{static_cast<uint8_t>(10 + i)});
  st.write_register(17, ConcolicWord(2));
  st.write_register(10, ConcolicWord(0x1000));
  st.write_register(11, ConcolicWord(4));
  RunContext ctx;
  EXPECT_TRUE(handle_ecall(st, s, ctx));
  EXPECT_EQ(s.variables().size(), 4u);
  for (uint8_t i = 0; i < 4; ++i) {
    const ConcolicByte b = st.mem.read_byte(0x1000 + i);
    EXPECT_EQ(b.concrete, 10 + i);
    EXPECT_TRUE(b.symbolic.has_value());
  }
  EXPECT_FALSE(st.mem.has_symbolic(0x1004));
  EXPECT_EQ(ctx.inputs.at("in_0_3"), 13);

  // a second call gets the next call-site number
  st.write_register(11, ConcolicWord(1));
  handle_ecall(st, s, ctx);
  EXPECT_EQ(ctx.symbolic_inputs.back().name, "in_1_0");

  st.write_register(17, ConcolicWord(3));
  st.write_register(10, ConcolicWord(0x141));
  EXPECT_TRUE(handle_ecall(st, s, ctx));
  EXPECT_EQ(ctx.output, "A");

  st.write_register(17, ConcolicWord(1));
  st.write_register(10, ConcolicWord(3));
  EXPECT_FALSE(handle_ecall(st, s, ctx));
  EXPECT_EQ(st.exit_code, 3);

  st.write_register(17, ConcolicWord(99));
  EXPECT_THROW(handle_ecall(st, s, ctx), MachineFault);
}

void expect_same_registers(const ConcolicState& a, const ConcreteState& b, const std::string& where) {
  ASSERT_EQ(a.pc, b.pc) << where;
  for (unsigned r = 0; r < 32; ++r) {
    ASSERT_EQ(a.read_register(r).concrete, b.regs.read(r)) << where << " x" << r;
    ASSERT_FALSE(a.read_register(r).is_symbolic()) << where;
  }
}

// Runs the concolic interpreter and the plain concrete interpreter side by
// side on a program without symbolic inputs.
void lockstep(const LoadedImage& image, const std::string& name, uint64_t max_steps = 2'000'000) {
  Session s;
  ConcolicState a = image.concolic_state();
  ConcreteState b = image.concrete_state();
  SemanticsCache ca, cb;
  RunContext ctx;
  std::string out_b;
  for (uint64_t step = 0; step < max_steps && !a.exit_code; ++step) {
    std::optional<FaultKind> fa, fb;
    try {
      const uint32_t pc = a.pc;
      const auto& seq = ca.get(a.fetch_instruction());
      a.pc = pc + 4;
      ++a.step_count;
      exec_sequence(a, s, seq, pc, ctx);
    } catch (const MachineFault& f) {
      fa = f.kind();
    } catch (const IllegalInstruction&) {
      fa = FaultKind::kIllegalInstruction;
    }
    try {
      step_concrete(b, cb, &out_b);
    } catch (const MachineFault& f) {
      fb = f.kind();
    }
    ASSERT_EQ(fa, fb) << name << " step " << step;
    if (fa) return;
    expect_same_registers(a, b, name + " step " + std::to_string(step));
    ASSERT_EQ(a.step_count, b.step_count);
    if (step % 512 == 0) {
      ASSERT_TRUE(a.mem.concrete().same_contents(b.mem)) << name << " step " << step;
    }
  }
  EXPECT_EQ(a.exit_code, b.exit_code) << name;
  EXPECT_TRUE(a.mem.concrete().same_contents(b.mem)) << name;
  EXPECT_EQ(ctx.output, out_b) << name;
  EXPECT_TRUE(ctx.trace.empty()) << name;
  EXPECT_EQ(a.mem.symbolic_byte_count(), 0u);
}

TEST(ConcreteShadow, GuestPrograms) {
  for (const char* name : {"alu", "bits", "branches", "bsearch", "collatz", "compare_set", "crc32", "fib_rec",
                           "funcptr", "gcd", "hello", "loadstore", "matmul", "muldiv", "mulh", "shifts", "sieve",
                           "sort_concrete", "stack_locals", "strings", "structs", "switch"}) {
    lockstep(test::load_guest(name), name);
  }
}

// Straight-line programs of register-only instructions drawn from the
// assembler corpus, with registers seeded from random values.
TEST(ConcreteShadow, CorpusInstructionSequences) {
  std::ifstream in(test::data_file("decode_corpus.tsv"));
  ASSERT_TRUE(in);
  std::vector<uint32_t> alu;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto w = static_cast<uint32_t>(std::stoul(line.substr(0, line.find('\t')), nullptr, 16));
    const Format f = format_of(decode(w).mnemonic);
    const Mnemonic m = decode(w).mnemonic;
    if (f == Format::R || f == Format::IShift || f == Format::U ||
        (f == Format::I && m != Mnemonic::JALR && m != Mnemonic::LB && m != Mnemonic::LH && m != Mnemonic::LW &&
         m != Mnemonic::LBU && m != Mnemonic::LHU && m != Mnemonic::ECALL && m != Mnemonic::EBREAK)) {
      alu.push_back(w);
    }
  }
  ASSERT_GT(alu.size(), 500u);
  auto rng = test::rng(22);
  for (int prog = 0; prog < 20; ++prog) {
    std::vector<uint32_t> words;
    for (unsigned r = 1; r < 32; ++r) {
      const auto v = static_cast<uint32_t>(test::random_value(rng, kWord));
      words.push_back(test::enc::lui(r, (v + 0x800) >> 12 & 0xFFFFF));
      words.push_back(test::enc::addi(r, r, static_cast<int32_t>(v << 20) >> 20));
    }
    for (int i = 0; i < 200; ++i) words.push_back(alu[rng() % alu.size()]);
    words = concat(words, test::exit_with(0));
    lockstep(load_elf_image(test::make_program(words)), "corpus program " + std::to_string(prog));
  }
}

// Every branch whose operands carry a symbolic part yields exactly one event
// and no other branch yields one; every event's condition agrees with the
// inputs of the run.
TEST(Trace, CompleteAndConsistentWithInputs) {
  auto rng = test::rng(23);
  for (const char* name : {"bubble_sort_n4", "insertion_sort_n5", "nested", "arith", "magic", "ranges"}) {
    const LoadedImage image = test::load_guest(name);
    for (int rep = 0; rep < 8; ++rep) {
      Session s;
      Model overrides;
      for (unsigned i = 0; i < 8; ++i) overrides[input_name(0, i)] = static_cast<uint8_t>(rng() % 16);
      ConcolicState st = image.concolic_state();
      SemanticsCache cache;
      RunContext ctx;
      ctx.overrides = &overrides;
      size_t expected = 0;
      while (!st.exit_code) {
        const uint32_t pc = st.pc;
        const uint32_t word = st.fetch_instruction();
        const Instr instr = decode(word);
        if (format_of(instr.mnemonic) == Format::B &&
            (st.read_register(instr.rs1).is_symbolic() || st.read_register(instr.rs2).is_symbolic())) {
          ++expected;
        }
        const size_t before = ctx.trace.size();
        st.pc = pc + 4;
        ++st.step_count;
        exec_sequence(st, s, cache.get(word), pc, ctx);
        ASSERT_LE(ctx.trace.size(), before + 1);
        ASSERT_EQ(ctx.trace.size(), expected) << name << " pc " << std::hex << pc;
        ASSERT_LT(st.step_count, 1'000'000u);
      }
      for (const BranchEvent& ev : ctx.trace) {
        const auto v = s.evaluate(ev.condition, ctx.inputs);
        ASSERT_TRUE(v.has_value());
        ASSERT_EQ(*v != 0, ev.taken) << name;
      }
      // the engine's own loop produces the same trace
      const RunResult r = run(image.concolic_state(), s, overrides, {});
      ASSERT_EQ(r.trace.size(), ctx.trace.size());
      for (size_t i = 0; i < r.trace.size(); ++i) {
        ASSERT_EQ(r.trace[i].pc, ctx.trace[i].pc);
        ASSERT_EQ(r.trace[i].taken, ctx.trace[i].taken);
      }
    }
  }
}

TEST(Run, SameInputsSameNames) {
  Session s;
  const LoadedImage image = test::load_guest("pair");
  const RunResult a = run(image.concolic_state(), s, {{"in_0_0", 3}}, {});
  const RunResult b = run(image.concolic_state(), s, {{"in_0_0", 3}}, {});
  ASSERT_EQ(a.symbolic_inputs.size(), b.symbolic_inputs.size());
  for (size_t i = 0; i < a.symbolic_inputs.size(); ++i) EXPECT_EQ(a.symbolic_inputs[i], b.symbolic_inputs[i]);
  EXPECT_EQ(a.inputs, b.inputs);
  EXPECT_EQ(a.steps, b.steps);
}

}  // namespace
}  // namespace rvsym
