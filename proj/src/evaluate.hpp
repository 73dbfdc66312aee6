#pragma once

// Internal: folds an expression tree with a target-specific set of operations.

#include "skewpbw/expression.hpp"

namespace skewpbw::detail {

template <class Ops>
auto evaluate(const expr::Node& node, Ops& ops) -> decltype(ops.integer(node)) {
  using expr::NodeKind;
  switch (node.kind) {
    case NodeKind::Integer: return ops.integer(node);
    case NodeKind::Symbol: return ops.symbol(node);
    case NodeKind::Neg: return ops.negate(evaluate(*node.children[0], ops));
    case NodeKind::Add: return ops.add(evaluate(*node.children[0], ops), evaluate(*node.children[1], ops));
    case NodeKind::Sub: return ops.sub(evaluate(*node.children[0], ops), evaluate(*node.children[1], ops));
    case NodeKind::Mul: return ops.mul(evaluate(*node.children[0], ops), evaluate(*node.children[1], ops));
    case NodeKind::Div:
      return ops.divide(evaluate(*node.children[0], ops), evaluate(*node.children[1], ops), node);
    case NodeKind::Pow: return ops.power(evaluate(*node.children[0], ops), node.exponent);
  }
  return ops.integer(node);
}

}  // namespace skewpbw::detail
