#pragma once

// Width-annotated bit-vector expressions, parameterised over the leaf value
// type. The same vocabulary describes instruction arithmetic for the concrete
// interpreter (leaves are machine words), the concolic interpreter (leaves are
// concolic words) and the solver adapter (leaves are solver terms).

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace rvsym {

class MalformedExpression : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned kMaxWidth = 64;

/// Number of bits of a bit-vector value, 1..64.
class Width {
 public:
  constexpr explicit Width(unsigned bits) : bits_(bits) {
    if (bits < 1 || bits > kMaxWidth) {
      throw MalformedExpression("bit-vector width out of range: " + std::to_string(bits));
    }
  }
  constexpr unsigned bits() const { return bits_; }
  constexpr uint64_t mask() const { return bits_ == 64 ? ~uint64_t{0} : (uint64_t{1} << bits_) - 1; }
  friend constexpr bool operator==(Width, Width) = default;

 private:
  unsigned bits_;
};

inline constexpr Width kWord{32};
inline constexpr Width kByte{8};

enum class ExprKind : uint8_t {
  kLeaf,
  kFromInt,
  kZExt,
  kSExt,
  kExtract,
  // binary
  kAdd,
  kSub,
  kAnd,
  kOr,
  kXor,
  kSll,
  kSrl,
  kSra,
  kMul,
  kMulhSS,
  kMulhUU,
  kMulhSU,
  kDivS,
  kDivU,
  kRemS,
  kRemU,
  // comparisons: operand-width result holding 0 or 1
  kEq,
  kNeq,
  kSltS,
  kSgeS,
  kSltU,
  kSgeU,
};

constexpr bool is_binary(ExprKind k) { return k >= ExprKind::kAdd; }
constexpr bool is_comparison(ExprKind k) { return k >= ExprKind::kEq; }
const char* to_string(ExprKind k);

/// Concrete semantics of one binary or comparison node at the given width.
/// Operands must already be reduced modulo 2^width.
uint64_t apply_binary(ExprKind kind, uint64_t lhs, uint64_t rhs, Width width);

inline uint64_t sign_extend(uint64_t value, unsigned from_bits) {
  if (from_bits >= 64) return value;
  const uint64_t sign = uint64_t{1} << (from_bits - 1);
  value &= (sign << 1) - 1;
  return (value ^ sign) - sign;
}

template <class V>
class Expr {
 public:
  struct Node {
    ExprKind kind;
    unsigned param = 0;  // extra bits (ZExt/SExt) or low bit (Extract)
    unsigned width = 0;  // FromInt / Extract result width
    uint64_t literal = 0;
    std::optional<V> leaf;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  static Expr make_leaf(V value) {
    Node n{ExprKind::kLeaf};
    n.leaf = std::move(value);
    return Expr(std::make_shared<const Node>(std::move(n)));
  }

  static Expr from_int(Width w, uint64_t literal) {
    if (literal & ~w.mask()) {
      throw MalformedExpression("literal does not fit in " + std::to_string(w.bits()) + " bits");
    }
    Node n{ExprKind::kFromInt};
    n.width = w.bits();
    n.literal = literal;
    return Expr(std::make_shared<const Node>(std::move(n)));
  }

  static Expr zext(unsigned extra_bits, Expr inner) { return extend(ExprKind::kZExt, extra_bits, std::move(inner)); }
  static Expr sext(unsigned extra_bits, Expr inner) { return extend(ExprKind::kSExt, extra_bits, std::move(inner)); }

  static Expr extract(unsigned low_bit, Width w, Expr inner) {
    Node n{ExprKind::kExtract};
    n.param = low_bit;
    n.width = w.bits();
    n.lhs = std::move(inner.node_);
    return Expr(std::make_shared<const Node>(std::move(n)));
  }

  static Expr binary(ExprKind kind, Expr lhs, Expr rhs) {
    if (!is_binary(kind)) throw MalformedExpression("not a binary operator");
    Node n{kind};
    n.lhs = std::move(lhs.node_);
    n.rhs = std::move(rhs.node_);
    return Expr(std::make_shared<const Node>(std::move(n)));
  }

  ExprKind kind() const { return node_->kind; }
  const V& leaf() const { return *node_->leaf; }
  uint64_t literal() const { return node_->literal; }
  unsigned param() const { return node_->param; }
  unsigned node_width() const { return node_->width; }
  Expr lhs() const { return Expr(node_->lhs); }
  Expr rhs() const { return Expr(node_->rhs); }
  const Node* node() const { return node_.get(); }

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {
    if (!node_) throw MalformedExpression("missing operand");
  }

  static Expr extend(ExprKind kind, unsigned extra_bits, Expr inner) {
    Node n{kind};
    n.param = extra_bits;
    n.lhs = std::move(inner.node_);
    return Expr(std::make_shared<const Node>(std::move(n)));
  }

  template <class>
  friend class Expr;

  std::shared_ptr<const Node> node_;
};

// Construction shorthands. V is deduced from the operands.
template <class V> Expr<V> add(Expr<V> a, Expr<V> b) { return Expr<V>::binary(ExprKind::kAdd, std::move(a), std::move(b)); }
template <class V> Expr<V> sub(Expr<V> a, Expr<V> b) { return Expr<V>::binary(ExprKind::kSub, std::move(a), std::move(b)); }
template <class V> Expr<V> bv_and(Expr<V> a, Expr<V> b) { return Expr<V>::binary(ExprKind::kAnd, std::move(a), std::move(b)); }
template <class V> Expr<V> bv_or(Expr<V> a, Expr<V> b) { return Expr<V>::binary(ExprKind::kOr, std::move(a), std::move(b)); }
template <class V> Expr<V> bv_xor(Expr<V> a, Expr<V> b) { return Expr<V>::binary(ExprKind::kXor, std::move(a), std::move(b)); }
template <class V> Expr<V> sll(Expr<V> a, Expr<V> b) { return Expr<V>::binary(ExprKind::kSll, std::move(a), std::move(b)); }
template <class V> Expr<V> eq(Expr<V> a, Expr<V> b) { return Expr<V>::binary(ExprKind::kEq, std::move(a), std::move(b)); }

namespace detail {

template <class V, class LeafWidthFn>
unsigned width_of_node(const typename Expr<V>::Node& n, LeafWidthFn& leaf_width) {
  switch (n.kind) {
    case ExprKind::kLeaf:
      return Width(leaf_width(*n.leaf)).bits();
    case ExprKind::kFromInt:
      return n.width;
    case ExprKind::kZExt:
    case ExprKind::kSExt:
      return Width(width_of_node<V>(*n.lhs, leaf_width) + n.param).bits();
    case ExprKind::kExtract: {
      const unsigned inner = width_of_node<V>(*n.lhs, leaf_width);
      if (n.param + n.width > inner) throw MalformedExpression("extract out of range");
      return n.width;
    }
    default: {
      const unsigned l = width_of_node<V>(*n.lhs, leaf_width);
      const unsigned r = width_of_node<V>(*n.rhs, leaf_width);
      if (l != r) {
        throw MalformedExpression(std::string("operand widths differ for ") + to_string(n.kind) + ": " +
                                  std::to_string(l) + " vs " + std::to_string(r));
      }
      return l;
    }
  }
}

}  // namespace detail

/// Result width of `e`. `leaf_width` maps a leaf value to its width in bits.
template <class V, class LeafWidthFn>
Width width_of(const Expr<V>& e, LeafWidthFn leaf_width) {
  return Width(detail::width_of_node<V>(*e.node(), leaf_width));
}

/// A concrete bit-vector value together with its width.
struct Bits {
  uint64_t value = 0;
  unsigned width = 0;
};

namespace detail {

template <class V, class LeafFn>
Bits evaluate_node(const typename Expr<V>::Node& n, LeafFn& leaf) {
  switch (n.kind) {
    case ExprKind::kLeaf: {
      Bits b = leaf(*n.leaf);
      b.value &= Width(b.width).mask();
      return b;
    }
    case ExprKind::kFromInt:
      return {n.literal, n.width};
    case ExprKind::kZExt: {
      Bits b = evaluate_node<V>(*n.lhs, leaf);
      return {b.value, Width(b.width + n.param).bits()};
    }
    case ExprKind::kSExt: {
      Bits b = evaluate_node<V>(*n.lhs, leaf);
      const Width w(b.width + n.param);
      return {sign_extend(b.value, b.width) & w.mask(), w.bits()};
    }
    case ExprKind::kExtract: {
      Bits b = evaluate_node<V>(*n.lhs, leaf);
      if (n.param + n.width > b.width) throw MalformedExpression("extract out of range");
      return {(b.value >> n.param) & Width(n.width).mask(), n.width};
    }
    default: {
      const Bits l = evaluate_node<V>(*n.lhs, leaf);
      const Bits r = evaluate_node<V>(*n.rhs, leaf);
      if (l.width != r.width) {
        throw MalformedExpression(std::string("operand widths differ for ") + to_string(n.kind));
      }
      return {apply_binary(n.kind, l.value, r.value, Width(l.width)), l.width};
    }
  }
}

}  // namespace detail

/// Evaluates `e` with modular arithmetic. `leaf` maps a leaf value to Bits.
template <class V, class LeafFn>
Bits evaluate(const Expr<V>& e, LeafFn leaf) {
  return detail::evaluate_node<V>(*e.node(), leaf);
}

/// Concrete evaluation over 32-bit machine-word leaves.
uint64_t eval_concrete(const Expr<uint32_t>& e);

/// Rebuilds `e` with every leaf replaced by `fn(leaf)`, which returns an Expr<U>.
template <class U, class V, class Fn>
Expr<U> map_leaves(const Expr<V>& e, Fn fn) {
  switch (e.kind()) {
    case ExprKind::kLeaf:
      return fn(e.leaf());
    case ExprKind::kFromInt:
      return Expr<U>::from_int(Width(e.node_width()), e.literal());
    case ExprKind::kZExt:
      return Expr<U>::zext(e.param(), map_leaves<U>(e.lhs(), fn));
    case ExprKind::kSExt:
      return Expr<U>::sext(e.param(), map_leaves<U>(e.lhs(), fn));
    case ExprKind::kExtract:
      return Expr<U>::extract(e.param(), Width(e.node_width()), map_leaves<U>(e.lhs(), fn));
    default:
      return Expr<U>::binary(e.kind(), map_leaves<U>(e.lhs(), fn), map_leaves<U>(e.rhs(), fn));
  }
}

/// Calls fn(leaf) for every leaf, left to right.
template <class V, class Fn>
void for_each_leaf(const Expr<V>& e, Fn&& fn) {
  switch (e.kind()) {
    case ExprKind::kLeaf:
      fn(e.leaf());
      return;
    case ExprKind::kFromInt:
      return;
    case ExprKind::kZExt:
    case ExprKind::kSExt:
    case ExprKind::kExtract:
      for_each_leaf(e.lhs(), fn);
      return;
    default:
      for_each_leaf(e.lhs(), fn);
      for_each_leaf(e.rhs(), fn);
  }
}

}  // namespace rvsym
