#include <algorithm>
#include <optional>

#include "fotensor/tensor_expr.hpp"

namespace fotensor {
namespace {

using EK = TensorExpr::Kind;

bool mentions(const TensorExpr& e, const Variable& v) { return free_variables(e).count(v) != 0; }

// Orders the block for summing out so that no intermediate factor spans more
// than two block variables (it stays a vector or a matrix). Variables are
// tried innermost first; returns nullopt when no such order exists.
std::optional<std::vector<Variable>> plan(const std::vector<Variable>& block,
                                          const std::vector<TensorExpr>& factors) {
  std::vector<std::set<Variable>> scopes;
  const std::set<Variable> members(block.begin(), block.end());
  if (members.size() != block.size()) return std::nullopt;
  for (const auto& f : factors) {
    std::set<Variable> s;
    for (const auto& v : f.arguments()) {
      if (members.count(v)) s.insert(v);
    }
    scopes.push_back(std::move(s));
  }

  std::vector<Variable> remaining = block;
  std::vector<Variable> order;
  while (!remaining.empty()) {
    std::size_t best = remaining.size();
    std::set<Variable> best_scope;
    for (std::size_t k = remaining.size(); k-- > 0;) {
      std::set<Variable> scope;
      for (const auto& s : scopes) {
        if (s.count(remaining[k])) scope.insert(s.begin(), s.end());
      }
      scope.erase(remaining[k]);
      if (best == remaining.size() || scope.size() < best_scope.size()) {
        best = k;
        best_scope = std::move(scope);
      }
    }
    if (best_scope.size() > 2) return std::nullopt;
    const Variable v = remaining[best];
    std::erase_if(scopes, [&](const std::set<Variable>& s) { return s.count(v) != 0; });
    scopes.push_back(best_scope);
    order.push_back(v);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return order;
}

TensorExpr make_product(const std::vector<TensorExpr>& operands) {
  std::vector<TensorExpr> flat;
  for (const auto& e : operands) {
    if (e.kind() == EK::kProduct) {
      flat.insert(flat.end(), e.operands().begin(), e.operands().end());
    } else {
      flat.push_back(e);
    }
  }
  return flat.size() == 1 ? flat.front() : TensorExpr::product(std::move(flat));
}

// min1(a + min1(b + c)) = min1(a + b + c) for nonnegative terms.
TensorExpr make_sum(const std::vector<TensorExpr>& operands) {
  std::vector<TensorExpr> flat;
  for (const auto& e : operands) {
    if (e.kind() == EK::kMin1Sum) {
      flat.insert(flat.end(), e.operands().begin(), e.operands().end());
    } else {
      flat.push_back(e);
    }
  }
  return flat.size() == 1 ? flat.front() : TensorExpr::min1_sum(std::move(flat));
}

// Factors and summed variables gathered from several operands, to be folded
// into one contraction over `block`.
struct Gathered {
  std::vector<Variable> block;
  std::vector<TensorExpr> factors;
  std::vector<Variable> loose;  // arguments of factors not under an inner block

  void add_leaf(const TensorExpr& leaf) {
    factors.push_back(leaf);
    loose.insert(loose.end(), leaf.arguments().begin(), leaf.arguments().end());
  }

  void add_contraction(const TensorExpr& c) {
    block.insert(block.end(), c.block().begin(), c.block().end());
    factors.insert(factors.end(), c.operands().begin(), c.operands().end());
    for (const auto& f : c.operands()) {
      for (const auto& v : f.arguments()) {
        if (std::find(c.block().begin(), c.block().end(), v) == c.block().end()) loose.push_back(v);
      }
    }
  }

  // Merging must not let an inner block capture another operand's variable.
  std::optional<TensorExpr> build(bool exists) const {
    for (std::size_t i = 1; i < block.size(); ++i) {
      if (std::find(loose.begin(), loose.end(), block[i]) != loose.end()) return std::nullopt;
    }
    auto order = plan(block, factors);
    if (!order) return std::nullopt;
    return exists ? TensorExpr::exists_contract(*order, factors)
                  : TensorExpr::forall_contract(*order, factors);
  }
};

class Optimizer {
 public:
  TensorExpr run(const TensorExpr& e, bool nonempty) {
    switch (e.kind()) {
      case EK::kRel:
      case EK::kEq:
      case EK::kExistsContract:
      case EK::kForallContract:
        return e;
      case EK::kComplement: {
        TensorExpr inner = run(e.operand(), nonempty);
        if (inner.kind() == EK::kComplement) return inner.operand();
        if (inner.is_leaf()) return inner.toggled();
        return TensorExpr::complement(inner);
      }
      case EK::kProduct:
      case EK::kMin1Sum: {
        std::vector<TensorExpr> ops;
        for (const auto& child : e.operands()) ops.push_back(run(child, nonempty));
        return e.kind() == EK::kProduct ? make_product(ops) : make_sum(ops);
      }
      case EK::kExistsSum:
        return exists(e.variable(), run(e.operand(), true), nonempty);
      case EK::kForallDual:
        return forall(e.variable(), run(e.operand(), true), nonempty);
    }
    return e;
  }

 private:
  // `nonempty` holds when the domain is known to have an element wherever
  // this node is evaluated, i.e. under a quantifier or with a free variable.
  TensorExpr exists(const Variable& v, const TensorExpr& body, bool nonempty) {
    if (!mentions(body, v)) {
      // Σ_v over a constant body: min1(N · body) = body · [N ≥ 1].
      return nonempty ? body : make_product({body, TensorExpr::exists_contract({v}, {})});
    }
    switch (body.kind()) {
      case EK::kRel:
      case EK::kEq:
        return TensorExpr::exists_contract({v}, {body});
      case EK::kExistsContract: {
        Gathered g{{v}, {}, {}};
        g.add_contraction(body);
        if (auto merged = g.build(true)) return *merged;
        break;
      }
      case EK::kMin1Sum: {
        std::vector<TensorExpr> parts;
        for (const auto& child : body.operands()) parts.push_back(exists(v, child, nonempty));
        return make_sum(parts);
      }
      case EK::kProduct: {
        std::vector<TensorExpr> outside;
        std::vector<TensorExpr> inside;
        for (const auto& child : body.operands()) {
          (mentions(child, v) ? inside : outside).push_back(child);
        }
        Gathered g{{v}, {}, {}};
        bool foldable = true;
        for (const auto& child : inside) {
          if (child.is_leaf()) {
            g.add_leaf(child);
          } else if (child.kind() == EK::kExistsContract) {
            g.add_contraction(child);
          } else {
            foldable = false;
          }
        }
        if (foldable) {
          if (auto folded = g.build(true)) {
            outside.push_back(*folded);
            return make_product(outside);
          }
        }
        if (!outside.empty()) {
          outside.push_back(exists(v, make_product(inside), nonempty));
          return make_product(outside);
        }
        break;
      }
      default:
        break;
    }
    return TensorExpr::exists_sum(v, body);
  }

  TensorExpr forall(const Variable& v, const TensorExpr& body, bool nonempty) {
    if (!mentions(body, v)) {
      // 1 − min1(N · (1 − body)) = body, or 1 when N = 0.
      return nonempty ? body : make_sum({body, TensorExpr::forall_contract({v}, {})});
    }
    switch (body.kind()) {
      case EK::kRel:
      case EK::kEq:
        return TensorExpr::forall_contract({v}, {body.toggled()});
      case EK::kForallContract: {
        Gathered g{{v}, {}, {}};
        g.add_contraction(body);
        if (auto merged = g.build(false)) return *merged;
        break;
      }
      case EK::kProduct: {
        std::vector<TensorExpr> parts;
        for (const auto& child : body.operands()) parts.push_back(forall(v, child, nonempty));
        return make_product(parts);
      }
      case EK::kMin1Sum: {
        // ∀v (A ∨ B(v)) = A ∨ ¬∃v ¬B(v); the negated disjuncts become factors.
        std::vector<TensorExpr> outside;
        std::vector<TensorExpr> inside;
        for (const auto& child : body.operands()) {
          (mentions(child, v) ? inside : outside).push_back(child);
        }
        Gathered g{{v}, {}, {}};
        bool foldable = true;
        for (const auto& child : inside) {
          if (child.is_leaf()) {
            g.add_leaf(child.toggled());
          } else if (child.kind() == EK::kForallContract) {
            g.add_contraction(child);
          } else if (child.kind() == EK::kComplement &&
                     child.operand().kind() == EK::kProduct &&
                     std::all_of(child.operand().operands().begin(),
                                 child.operand().operands().end(),
                                 [](const TensorExpr& f) { return f.is_leaf(); })) {
            for (const auto& f : child.operand().operands()) g.add_leaf(f);
          } else {
            foldable = false;
          }
        }
        if (foldable) {
          if (auto folded = g.build(false)) {
            outside.push_back(*folded);
            return make_sum(outside);
          }
        }
        if (!outside.empty()) {
          outside.push_back(forall(v, make_sum(inside), nonempty));
          return make_sum(outside);
        }
        break;
      }
      default:
        break;
    }
    return TensorExpr::forall_dual(v, body);
  }
};

}  // namespace

TensorExpr optimize(const TensorExpr& e) {
  return Optimizer().run(e, !free_variables(e).empty());
}

}  // namespace fotensor
