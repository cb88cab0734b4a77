#include "rvsym/bvexpr.hpp"

namespace rvsym {

const char* to_string(ExprKind k) {
  switch (k) {
    case ExprKind::kLeaf: return "Leaf";
    case ExprKind::kFromInt: return "FromInt";
    case ExprKind::kZExt: return "ZExt";
    case ExprKind::kSExt: return "SExt";
    case ExprKind::kExtract: return "Extract";
    case ExprKind::kAdd: return "Add";
    case ExprKind::kSub: return "Sub";
    case ExprKind::kAnd: return "And";
    case ExprKind::kOr: return "Or";
    case ExprKind::kXor: return "Xor";
    case ExprKind::kSll: return "Sll";
    case ExprKind::kSrl: return "Srl";
    case ExprKind::kSra: return "Sra";
    case ExprKind::kMul: return "Mul";
    case ExprKind::kMulhSS: return "MulhSS";
    case ExprKind::kMulhUU: return "MulhUU";
    case ExprKind::kMulhSU: return "MulhSU";
    case ExprKind::kDivS: return "DivS";
    case ExprKind::kDivU: return "DivU";
    case ExprKind::kRemS: return "RemS";
    case ExprKind::kRemU: return "RemU";
    case ExprKind::kEq: return "Eq";
    case ExprKind::kNeq: return "Neq";
    case ExprKind::kSltS: return "SltS";
    case ExprKind::kSgeS: return "SgeS";
    case ExprKind::kSltU: return "SltU";
    case ExprKind::kSgeU: return "SgeU";
  }
  return "?";
}

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

int64_t to_signed(uint64_t v, Width w) { return static_cast<int64_t>(sign_extend(v, w.bits())); }

uint64_t high_half(u128 product, Width w) { return static_cast<uint64_t>(product >> w.bits()) & w.mask(); }

}  // namespace

uint64_t apply_binary(ExprKind kind, uint64_t a, uint64_t b, Width w) {
  const uint64_t mask = w.mask();
  const unsigned bits = w.bits();
  const int64_t sa = to_signed(a, w);
  const int64_t sb = to_signed(b, w);
  const uint64_t min_signed = uint64_t{1} << (bits - 1);

  switch (kind) {
    case ExprKind::kAdd: return (a + b) & mask;
    case ExprKind::kSub: return (a - b) & mask;
    case ExprKind::kAnd: return a & b;
    case ExprKind::kOr: return a | b;
    case ExprKind::kXor: return a ^ b;
    case ExprKind::kSll: return b >= bits ? 0 : (a << b) & mask;
    case ExprKind::kSrl: return b >= bits ? 0 : a >> b;
    case ExprKind::kSra: {
      if (b >= bits) return sa < 0 ? mask : 0;
      return static_cast<uint64_t>(sa >> b) & mask;
    }
    case ExprKind::kMul: return static_cast<uint64_t>(u128{a} * u128{b}) & mask;
    case ExprKind::kMulhUU: return high_half(u128{a} * u128{b}, w);
    case ExprKind::kMulhSS: return high_half(static_cast<u128>(i128{sa} * i128{sb}), w);
    case ExprKind::kMulhSU: return high_half(static_cast<u128>(i128{sa} * static_cast<i128>(b)), w);
    case ExprKind::kDivU: return b == 0 ? mask : a / b;
    case ExprKind::kRemU: return b == 0 ? a : a % b;
    case ExprKind::kDivS: {
      if (b == 0) return mask;
      if (a == min_signed && b == mask) return min_signed;
      return static_cast<uint64_t>(sa / sb) & mask;
    }
    case ExprKind::kRemS: {
      if (b == 0) return a;
      if (a == min_signed && b == mask) return 0;
      return static_cast<uint64_t>(sa % sb) & mask;
    }
    case ExprKind::kEq: return a == b ? 1 : 0;
    case ExprKind::kNeq: return a != b ? 1 : 0;
    case ExprKind::kSltS: return sa < sb ? 1 : 0;
    case ExprKind::kSgeS: return sa >= sb ? 1 : 0;
    case ExprKind::kSltU: return a < b ? 1 : 0;
    case ExprKind::kSgeU: return a >= b ? 1 : 0;
    default:
      throw MalformedExpression(std::string("not a binary operator: ") + to_string(kind));
  }
}

uint64_t eval_concrete(const Expr<uint32_t>& e) {
  return evaluate(e, [](uint32_t v) { return Bits{v, 32}; }).value;
}

}  // namespace rvsym
