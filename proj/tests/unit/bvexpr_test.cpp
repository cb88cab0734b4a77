#include <gtest/gtest.h>

#include "random_expr.hpp"
#include "test_support.hpp"
#include "rvsym/bvexpr.hpp"

namespace rvsym {
namespace {

using E = Expr<uint32_t>;

E c32(uint64_t v) { return E::from_int(kWord, v); }
E bin(ExprKind k, uint64_t a, uint64_t b) { return E::binary(k, c32(a), c32(b)); }
auto w32 = [](uint32_t) { return kWord; };

TEST(Width, Bounds) {
  EXPECT_THROW(Width(0), MalformedExpression);
  EXPECT_THROW(Width(65), MalformedExpression);
  EXPECT_EQ(Width(64).mask(), ~uint64_t{0});
  EXPECT_EQ(Width(1).mask(), 1u);
}

TEST(WidthOf, Examples) {
  EXPECT_EQ(width_of(c32(7), w32).bits(), 32u);
  EXPECT_EQ(width_of(E::zext(32, c32(1)), w32).bits(), 64u);
  EXPECT_EQ(width_of(E::extract(0, kByte, E::make_leaf(0x1234)), w32).bits(), 8u);
  EXPECT_EQ(width_of(E::sext(16, E::from_int(Width(16), 3)), w32).bits(), 32u);
  EXPECT_EQ(width_of(bin(ExprKind::kSltU, 1, 2), w32).bits(), 32u);
}

TEST(WidthOf, RejectsMismatchedOperands) {
  EXPECT_THROW(width_of(E::binary(ExprKind::kAdd, c32(1), E::from_int(kByte, 1)), w32), MalformedExpression);
  EXPECT_THROW(width_of(E::extract(30, kByte, c32(1)), w32), MalformedExpression);
  EXPECT_THROW(E::from_int(kByte, 256), MalformedExpression);
  EXPECT_THROW(width_of(E::zext(40, c32(0)), w32), MalformedExpression);
}

TEST(EvalConcrete, Examples) {
  EXPECT_EQ(eval_concrete(bin(ExprKind::kAdd, 0xFFFFFFFF, 1)), 0u);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kSltS, 0xFFFFFFFF, 0)), 1u);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kEq, 7, 7)), 1u);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kDivU, 5, 0)), 0xFFFFFFFFu);
}

// Values checked against unicorn executing the corresponding RV32M instruction
// (tests/tools/check_examples.py).
TEST(EvalConcrete, DivisionConvention) {
  EXPECT_EQ(eval_concrete(bin(ExprKind::kDivS, 5, 0)), 0xFFFFFFFFu);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kRemU, 5, 0)), 5u);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kRemS, 5, 0)), 5u);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kDivS, 0x80000000, 0xFFFFFFFF)), 0x80000000u);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kRemS, 0x80000000, 0xFFFFFFFF)), 0u);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kDivS, static_cast<uint32_t>(-7), 2)), static_cast<uint32_t>(-3));
  EXPECT_EQ(eval_concrete(bin(ExprKind::kRemS, static_cast<uint32_t>(-7), 2)), static_cast<uint32_t>(-1));
}

TEST(EvalConcrete, MultiplyHigh) {
  EXPECT_EQ(eval_concrete(bin(ExprKind::kMulhUU, 0xFFFFFFFF, 0xFFFFFFFF)), 0xFFFFFFFEu);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kMulhSS, 0x80000000, 0x80000000)), 0x40000000u);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kMulhSU, 0xFFFFFFFF, 0xFFFFFFFF)), 0xFFFFFFFFu);
}

TEST(EvalConcrete, ShiftsUseFullAmount) {
  EXPECT_EQ(eval_concrete(bin(ExprKind::kSll, 1, 32)), 0u);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kSrl, 0x80000000, 33)), 0u);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kSra, 0x80000000, 100)), 0xFFFFFFFFu);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kSra, 0x80000000, 4)), 0xF8000000u);
  EXPECT_EQ(eval_concrete(bin(ExprKind::kSrl, 0x80000000, 4)), 0x08000000u);
}

TEST(EvalConcrete, ExtensionAndExtract) {
  EXPECT_EQ(eval_concrete(E::sext(24, E::from_int(kByte, 0x80))), 0xFFFFFF80u);
  EXPECT_EQ(eval_concrete(E::zext(24, E::from_int(kByte, 0x80))), 0x80u);
  EXPECT_EQ(eval_concrete(E::extract(8, kByte, c32(0xDEADBEEF))), 0xBEu);
  EXPECT_EQ(eval_concrete(E::extract(0, kWord, E::sext(32, c32(0x80000001)))), 0x80000001u);
}

TEST(MapLeaves, PreservesStructure) {
  const E e = E::binary(ExprKind::kAdd, E::make_leaf(3), E::binary(ExprKind::kAnd, E::make_leaf(4), c32(0xFF)));
  unsigned count = 0;
  for_each_leaf(e, [&](uint32_t) { ++count; });
  EXPECT_EQ(count, 2u);
  const auto doubled = map_leaves<uint32_t>(e, [](uint32_t v) { return E::make_leaf(v * 2); });
  EXPECT_EQ(eval_concrete(doubled), 14u);
}

class AlgebraicProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{0xa1b2c3};
  uint32_t next() { return static_cast<uint32_t>(test::random_value(rng, kWord)); }
};

TEST_F(AlgebraicProperties, HoldOnRandomOperands) {
  for (int i = 0; i < 10'000; ++i) {
    const uint32_t a = next(), b = next();
    ASSERT_EQ(eval_concrete(bin(ExprKind::kAdd, a, b)), eval_concrete(bin(ExprKind::kAdd, b, a)));
    ASSERT_EQ(eval_concrete(bin(ExprKind::kSub, a, a)), 0u);
    ASSERT_EQ(eval_concrete(bin(ExprKind::kXor, a, a)), 0u);
    ASSERT_EQ(eval_concrete(bin(ExprKind::kEq, a, b)), a == b ? 1u : 0u);
    ASSERT_EQ(eval_concrete(bin(ExprKind::kSltS, a, b)) + eval_concrete(bin(ExprKind::kSgeS, a, b)), 1u);
    ASSERT_EQ(eval_concrete(bin(ExprKind::kSltU, a, b)) + eval_concrete(bin(ExprKind::kSgeU, a, b)), 1u);
    ASSERT_EQ(eval_concrete(E::extract(0, kWord, c32(a))), a);
  }
}

TEST(RandomTrees, ResultFitsWidth) {
  auto rng = test::rng(1);
  auto leaf = [](std::mt19937_64& r) { return E::make_leaf(static_cast<uint32_t>(r())); };
  for (int i = 0; i < 2000; ++i) {
    const Width w(1 + rng() % 64);
    const E e = test::random_expr<uint32_t>(rng, w, 6, leaf);
    const Bits b = evaluate(e, [](uint32_t v) { return Bits{v, 32}; });
    ASSERT_EQ(b.width, w.bits());
    ASSERT_EQ(b.value & ~w.mask(), 0u);
  }
}

TEST(RandomTrees, MatchBigIntegerOracle) {
  auto rng = test::rng(2);
  auto leaf = [](std::mt19937_64& r) { return E::make_leaf(static_cast<uint32_t>(test::random_value(r, kWord))); };
  auto leaf_value = [](uint32_t v) { return v; };
  for (int i = 0; i < 5000; ++i) {
    const Width w(rng() % 3 == 0 ? 1 + rng() % 64 : 32);
    const E e = test::random_expr<uint32_t>(rng, w, 6, leaf);
    const Bits got = evaluate(e, [](uint32_t v) { return Bits{v, 32}; });
    const test::BigBits want = test::big_eval(e, leaf_value);
    ASSERT_EQ(got.width, want.width);
    ASSERT_EQ(got.value, static_cast<uint64_t>(want.value)) << "tree " << i;
  }
}

}  // namespace
}  // namespace rvsym
