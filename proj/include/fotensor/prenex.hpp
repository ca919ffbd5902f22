#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fotensor/formula.hpp"

namespace fotensor {

struct QuantifierBinding {
  Quantifier quantifier;
  Variable variable;

  friend bool operator==(const QuantifierBinding&, const QuantifierBinding&) = default;
};

/// A quantifier prefix over a quantifier-free, implication-free matrix.
struct PrenexFormula {
  std::vector<QuantifierBinding> prefix;
  Formula matrix;

  /// Re-attaches the prefix, outermost quantifier first.
  Formula to_formula() const;
  std::string to_string() const { return to_formula().to_string(); }
};

struct PrenexOptions {
  /// Push negations down to literals inside the matrix.
  bool negation_normal_form = false;
  /// Shape the matrix as DNF when the innermost quantifier is existential
  /// (or there is none) and as CNF when it is universal. Implies NNF.
  bool clause_normal_form = false;
};

/// Renames bound variables so that every binder introduces a distinct name
/// that also differs from every free variable. Clashing binders get the
/// first free suffix: x, x1, x2, ...
Formula standardize_apart(const Formula& f);

/// Negation normal form: negations only on atoms and equalities.
Formula to_nnf(const Formula& f);

/// Converts f (implications are desugared first) to an equivalent prenex
/// formula. Negations are moved through quantifiers during extraction.
/// Equivalence includes the empty domain: when both an existential and a
/// universal block could lead, the block that fixes the formula's value on
/// an empty domain is placed first.
PrenexFormula to_prenex(const Formula& f, const PrenexOptions& options = {});

}  // namespace fotensor
