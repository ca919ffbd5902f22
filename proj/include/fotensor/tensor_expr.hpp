#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "fotensor/formula.hpp"
#include "fotensor/prenex.hpp"
#include "fotensor/structure.hpp"
#include "fotensor/tensor.hpp"

namespace fotensor {

/// Compiled evaluation plan. Leaves contract a relation tensor (or the
/// identity, for equality) with the one-hot vectors of their arguments;
/// inner nodes combine truth values:
///
///   compl          1 − v
///   prod           v1 · … · vh
///   min1sum        min1(v1 + … + vh)
///   exists-sum     min1(Σ_i body[x ← e_i])
///   forall-dual    1 − min1(Σ_i (1 − body[x ← e_i]))
///
/// The optimizer additionally produces contraction nodes that fold a block
/// of summations over a product of leaves into matrix–vector products:
///
///   exists-contract   min1(Σ_{block} Π factors)
///   forall-contract   1 − min1(Σ_{block} Π factors)
///
/// Plans are model independent; the domain binds at evaluation.
class TensorExpr {
 public:
  enum class Kind {
    kRel,
    kEq,
    kComplement,
    kProduct,
    kMin1Sum,
    kExistsSum,
    kForallDual,
    kExistsContract,
    kForallContract,
  };

  /// `negated` selects ¬R; `transposed` selects Rᵀ (binary only).
  static TensorExpr rel(std::string predicate, std::vector<Variable> arguments,
                        bool negated = false, bool transposed = false);
  static TensorExpr eq(Variable left, Variable right, bool negated = false);
  static TensorExpr complement(TensorExpr operand);
  static TensorExpr product(std::vector<TensorExpr> operands);
  static TensorExpr min1_sum(std::vector<TensorExpr> operands);
  static TensorExpr exists_sum(Variable variable, TensorExpr body);
  static TensorExpr forall_dual(Variable variable, TensorExpr body);
  /// `block` lists the summed variables in elimination order; every factor
  /// must be a leaf.
  static TensorExpr exists_contract(std::vector<Variable> block, std::vector<TensorExpr> factors);
  static TensorExpr forall_contract(std::vector<Variable> block, std::vector<TensorExpr> factors);

  Kind kind() const;
  bool is_leaf() const { return kind() == Kind::kRel || kind() == Kind::kEq; }
  bool is_contraction() const {
    return kind() == Kind::kExistsContract || kind() == Kind::kForallContract;
  }

  const std::string& predicate() const;
  /// Leaf arguments in contraction order.
  const std::vector<Variable>& arguments() const;
  bool negated() const;
  bool transposed() const;
  /// Summation variable of exists-sum / forall-dual.
  const Variable& variable() const;
  /// Summation block of a contraction node.
  const std::vector<Variable>& block() const;
  /// Children, or the factors of a contraction node.
  const std::vector<TensorExpr>& operands() const;
  const TensorExpr& operand(std::size_t i = 0) const { return operands().at(i); }

  /// Leaf with the negation flag flipped.
  TensorExpr toggled() const;

  /// Indented s-expression, one node per line.
  std::string dump() const;

  /// Identity of the shared node, stable across copies.
  const void* id() const { return node_.get(); }

  friend bool operator==(const TensorExpr& a, const TensorExpr& b);

 private:
  struct Node;
  explicit TensorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

std::set<Variable> free_variables(const TensorExpr& e);

/// Compiles the prenex form of f (see to_prenex) without grounding.
TensorExpr compile(const Formula& f);

/// Compiles an already-prenex formula. A binary atom whose arguments appear
/// in the opposite order to their binding order (free variables first, then
/// the prefix) is encoded with the transposed relation.
TensorExpr compile_prenex(const PrenexFormula& p);

struct EvalOptions {
  /// Throw ClosureViolation when any node value leaves {0, 1}.
  bool check_closure = true;
  /// When set, receives one line per summation: its partial sum before min1
  /// and the clamped result.
  std::vector<std::string>* trace = nullptr;
};

/// Evaluates a plan over an embedded model. Free variables take their values
/// from the assignment. Throws UnboundVariableError, UnknownPredicateError,
/// ArityError, StructureError (assignment outside the domain), or
/// ClosureViolation.
Scalar eval_tensor(const TensorExpr& e, const EmbeddedModel& m, const Assignment& a = {},
                   const EvalOptions& options = {});

/// Rewrites summations into contraction nodes where the summed body is (or
/// reduces to) a product of leaves, distributing ∃ over min1sum and ∀ over
/// prod first. Evaluation is preserved on every model; expressions without a
/// matching shape are returned unchanged.
TensorExpr optimize(const TensorExpr& e);

}  // namespace fotensor
