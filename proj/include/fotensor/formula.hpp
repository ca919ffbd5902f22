#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fotensor {

using Variable = std::string;

enum class Quantifier { kExists, kForall };

/// Predicate names with a fixed binary interpretation in the string models.
inline constexpr std::string_view kSuccessor = "succ";
inline constexpr std::string_view kPrecedence = "prec";
/// Binary relations of the two-dimensional tree models.
inline constexpr std::string_view kDominance = "dom";
inline constexpr std::string_view kLeftOf = "leftof";

struct PredicateSymbol {
  std::string name;
  int arity = 1;

  friend bool operator==(const PredicateSymbol&, const PredicateSymbol&) = default;
  friend auto operator<=>(const PredicateSymbol&, const PredicateSymbol&) = default;
};

/// Immutable first-order formula over a relational signature with at most
/// binary predicates. Terms are variables only; there are no constants or
/// function symbols. Copies share structure.
class Formula {
 public:
  enum class Kind { kAtom, kEqual, kNot, kAnd, kOr, kImplies, kExists, kForall };

  static Formula atom(std::string predicate, std::vector<Variable> terms);
  static Formula equal(Variable left, Variable right);
  static Formula negation(Formula operand);
  /// And/Or take one or more operands.
  static Formula conjunction(std::vector<Formula> operands);
  static Formula disjunction(std::vector<Formula> operands);
  static Formula implication(Formula antecedent, Formula consequent);
  static Formula exists(Variable variable, Formula body);
  static Formula forall(Variable variable, Formula body);
  static Formula quantified(Quantifier q, Variable variable, Formula body);

  Kind kind() const;
  bool is_literal() const;  // atom, equality, or the negation of one
  bool is_quantifier() const { return kind() == Kind::kExists || kind() == Kind::kForall; }

  /// Atom predicate name.
  const std::string& predicate() const;
  PredicateSymbol predicate_symbol() const;
  /// Atom arguments, or the two sides of an equality.
  const std::vector<Variable>& terms() const;
  /// Bound variable of a quantifier.
  const Variable& variable() const;
  Quantifier quantifier() const;
  /// Not: 1 operand. And/Or: n operands. Implies: antecedent, consequent. Quantifiers: body.
  const std::vector<Formula>& operands() const;
  const Formula& operand(std::size_t i = 0) const { return operands().at(i); }

  /// Surface syntax accepted by parse_formula.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses the surface syntax:
///
///   formula     = quantified | implication
///   quantified  = ("exists" | "forall") ident "." formula
///   implication = disjunction [ "->" implication ]
///   disjunction = conjunction { "|" conjunction }
///   conjunction = negation { "&" negation }
///   negation    = "!" negation | quantified | atom
///   atom        = ident "(" ident { "," ident } ")" | ident "=" ident | "(" formula ")"
///
/// A quantifier may also start an operand; its scope then extends as far
/// right as possible. `succ` and `prec` are always binary. Every other
/// predicate takes the arity of its first use, which must be 1 or 2.
///
/// Throws ParseError or ArityError.
Formula parse_formula(std::string_view text);

/// Rewrites every `p -> q` to `!p | q`.
Formula desugar(const Formula& f);

std::set<Variable> free_variables(const Formula& f);

/// Every predicate symbol occurring in f.
std::set<PredicateSymbol> predicates(const Formula& f);

/// Maximum nesting of quantifiers.
int quantifier_depth(const Formula& f);

}  // namespace fotensor
