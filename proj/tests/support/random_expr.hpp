#pragma once

// Random well-formed expression trees, plus an independent evaluator over
// arbitrary-precision integers used as the oracle for eval_concrete.

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "rvsym/bvexpr.hpp"

namespace rvsym::test {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr ExprKind kBinaryKinds[] = {
    ExprKind::kAdd,    ExprKind::kSub,    ExprKind::kAnd,    ExprKind::kOr,   ExprKind::kXor,  ExprKind::kSll,
    ExprKind::kSrl,    ExprKind::kSra,    ExprKind::kMul,    ExprKind::kMulhSS, ExprKind::kMulhUU,
    ExprKind::kMulhSU, ExprKind::kDivS,   ExprKind::kDivU,   ExprKind::kRemS, ExprKind::kRemU,
    ExprKind::kEq,     ExprKind::kNeq,    ExprKind::kSltS,   ExprKind::kSgeS, ExprKind::kSltU, ExprKind::kSgeU};

/// Operand values biased towards the boundary cases that matter for
/// division, shifts and signed comparison.
inline uint64_t random_value(std::mt19937_64& rng, Width w) {
  switch (rng() % 6) {
    case 0:
      return 0;
    case 1:
      return w.mask();  // -1
    case 2:
      return uint64_t{1} << (w.bits() - 1);  // signed minimum
    case 3:
      return (rng() % 40) & w.mask();  // small, also small shift amounts
    default:
      return rng() & w.mask();
  }
}

/// `leaf` returns a width-32 Expr<V> leaf.
template <class V, class LeafFn>
Expr<V> random_expr(std::mt19937_64& rng, Width w, unsigned depth, LeafFn& leaf) {
  using E = Expr<V>;
  if (depth == 0 || rng() % 5 == 0) {
    const unsigned pick = rng() % 3;
    if (pick == 0) return E::from_int(w, random_value(rng, w));
    if (w == kWord) return leaf(rng);
    if (w.bits() < 32) return E::extract(rng() % (33 - w.bits()), w, leaf(rng));
    return rng() % 2 ? E::zext(w.bits() - 32, leaf(rng)) : E::sext(w.bits() - 32, leaf(rng));
  }
  const unsigned shape = rng() % 10;
  if (shape == 0 && w.bits() > 1) {
    const unsigned inner = 1 + rng() % (w.bits() - 1);
    auto e = random_expr<V>(rng, Width(inner), depth - 1, leaf);
    return rng() % 2 ? E::zext(w.bits() - inner, e) : E::sext(w.bits() - inner, e);
  }
  if (shape == 1) {
    const unsigned inner = w.bits() + rng() % (kMaxWidth - w.bits() + 1);
    const unsigned low = rng() % (inner - w.bits() + 1);
    return E::extract(low, w, random_expr<V>(rng, Width(inner), depth - 1, leaf));
  }
  const ExprKind k = kBinaryKinds[rng() % std::size(kBinaryKinds)];
  return E::binary(k, random_expr<V>(rng, w, depth - 1, leaf), random_expr<V>(rng, w, depth - 1, leaf));
}

namespace detail {

inline BigInt pow2(unsigned n) { return BigInt(1) << n; }
inline BigInt wrap(const BigInt& x, unsigned w) {
  BigInt m = pow2(w);
  BigInt r = x % m;
  return r < 0 ? r + m : r;
}
inline BigInt to_signed(const BigInt& x, unsigned w) { return x >= pow2(w - 1) ? x - pow2(w) : x; }
inline BigInt floor_div_pow2(const BigInt& x, unsigned n) {
  const BigInt d = pow2(n);
  if (x >= 0) return x / d;
  return -((-x + d - 1) / d);
}

}  // namespace detail

struct BigBits {
  BigInt value;
  unsigned width;
};

/// Reference evaluator. Every operator is written from its mathematical
/// definition on unbounded integers, then reduced modulo 2^width.
template <class V, class LeafFn>
BigBits big_eval(const Expr<V>& e, LeafFn& leaf) {
  using namespace detail;
  switch (e.kind()) {
    case ExprKind::kLeaf:
      return {BigInt(leaf(e.leaf())), 32};
    case ExprKind::kFromInt:
      return {BigInt(e.literal()), e.node_width()};
    case ExprKind::kZExt: {
      auto in = big_eval(e.lhs(), leaf);
      return {in.value, in.width + e.param()};
    }
    case ExprKind::kSExt: {
      auto in = big_eval(e.lhs(), leaf);
      const unsigned w = in.width + e.param();
      return {wrap(to_signed(in.value, in.width), w), w};
    }
    case ExprKind::kExtract: {
      auto in = big_eval(e.lhs(), leaf);
      return {wrap(in.value >> e.param(), e.node_width()), e.node_width()};
    }
    default:
      break;
  }
  const auto l = big_eval(e.lhs(), leaf);
  const auto r = big_eval(e.rhs(), leaf);
  const unsigned w = l.width;
  const BigInt a = l.value, b = r.value, sa = to_signed(a, w), sb = to_signed(b, w);
  const BigInt all_ones = pow2(w) - 1;
  BigInt v;
  switch (e.kind()) {
    case ExprKind::kAdd: v = a + b; break;
    case ExprKind::kSub: v = a - b; break;
    case ExprKind::kAnd: v = a & b; break;
    case ExprKind::kOr: v = a | b; break;
    case ExprKind::kXor: v = a ^ b; break;
    case ExprKind::kSll: v = b >= w ? BigInt(0) : a << static_cast<unsigned>(b); break;
    case ExprKind::kSrl: v = b >= w ? BigInt(0) : a >> static_cast<unsigned>(b); break;
    case ExprKind::kSra: v = floor_div_pow2(sa, b >= w ? w - 1 : static_cast<unsigned>(b)); break;
    case ExprKind::kMul: v = a * b; break;
    case ExprKind::kMulhSS: v = floor_div_pow2(sa * sb, w); break;
    case ExprKind::kMulhUU: v = (a * b) >> w; break;
    case ExprKind::kMulhSU: v = floor_div_pow2(sa * b, w); break;
    case ExprKind::kDivU: v = b == 0 ? all_ones : a / b; break;
    case ExprKind::kRemU: v = b == 0 ? a : a % b; break;
    case ExprKind::kDivS: v = sb == 0 ? BigInt(-1) : sa / sb; break;  // cpp_int truncates toward zero
    case ExprKind::kRemS: v = sb == 0 ? sa : sa - (sa / sb) * sb; break;
    case ExprKind::kEq: v = a == b; break;
    case ExprKind::kNeq: v = a != b; break;
    case ExprKind::kSltS: v = sa < sb; break;
    case ExprKind::kSgeS: v = sa >= sb; break;
    case ExprKind::kSltU: v = a < b; break;
    case ExprKind::kSgeU: v = a >= b; break;
    default: throw MalformedExpression("unexpected node");
  }
  return {wrap(v, w), w};
}

}  // namespace rvsym::test
