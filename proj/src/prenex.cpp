#include "fotensor/prenex.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace fotensor {
namespace {

using K = Formula::Kind;

Quantifier dual(Quantifier q) {
  return q == Quantifier::kExists ? Quantifier::kForall : Quantifier::kExists;
}

void collect_names(const Formula& f, std::set<Variable>& out) {
  switch (f.kind()) {
    case K::kAtom:
    case K::kEqual:
      out.insert(f.terms().begin(), f.terms().end());
      return;
    case K::kExists:
    case K::kForall:
      out.insert(f.variable());
      break;
    default:
      break;
  }
  for (const auto& g : f.operands()) collect_names(g, out);
}

class Renamer {
 public:
  explicit Renamer(const Formula& f) : taken_(free_variables(f)) { collect_names(f, reserved_); }

  Formula rename(const Formula& f, std::map<Variable, Variable>& scope) {
    switch (f.kind()) {
      case K::kAtom: {
        std::vector<Variable> terms;
        for (const auto& t : f.terms()) terms.push_back(lookup(scope, t));
        return Formula::atom(f.predicate(), std::move(terms));
      }
      case K::kEqual:
        return Formula::equal(lookup(scope, f.terms()[0]), lookup(scope, f.terms()[1]));
      case K::kExists:
      case K::kForall: {
        const Variable fresh = claim(f.variable());
        auto previous = scope.find(f.variable());
        std::optional<Variable> saved;
        if (previous != scope.end()) saved = previous->second;
        scope[f.variable()] = fresh;
        Formula body = rename(f.operand(), scope);
        if (saved) {
          scope[f.variable()] = *saved;
        } else {
          scope.erase(f.variable());
        }
        return Formula::quantified(f.quantifier(), fresh, std::move(body));
      }
      case K::kNot:
        return Formula::negation(rename(f.operand(), scope));
      case K::kImplies:
        return Formula::implication(rename(f.operand(0), scope), rename(f.operand(1), scope));
      case K::kAnd:
      case K::kOr: {
        std::vector<Formula> ops;
        for (const auto& g : f.operands()) ops.push_back(rename(g, scope));
        return f.kind() == K::kAnd ? Formula::conjunction(std::move(ops))
                                   : Formula::disjunction(std::move(ops));
      }
    }
    throw std::logic_error("unhandled formula kind");
  }

 private:
  static const Variable& lookup(const std::map<Variable, Variable>& scope, const Variable& v) {
    auto it = scope.find(v);
    return it == scope.end() ? v : it->second;
  }

  Variable claim(const Variable& name) {
    if (taken_.insert(name).second) return name;
    for (int k = 1;; ++k) {
      Variable candidate = name + std::to_string(k);
      if (reserved_.count(candidate) || taken_.count(candidate)) continue;
      taken_.insert(candidate);
      return candidate;
    }
  }

  std::set<Variable> taken_;
  std::set<Variable> reserved_;
};

Formula nnf(const Formula& f, bool negated) {
  switch (f.kind()) {
    case K::kAtom:
    case K::kEqual:
      return negated ? Formula::negation(f) : f;
    case K::kNot:
      return nnf(f.operand(), !negated);
    case K::kAnd:
    case K::kOr: {
      std::vector<Formula> ops;
      for (const auto& g : f.operands()) ops.push_back(nnf(g, negated));
      const bool conj = (f.kind() == K::kAnd) != negated;
      return conj ? Formula::conjunction(std::move(ops)) : Formula::disjunction(std::move(ops));
    }
    case K::kImplies:
      return nnf(desugar(f), negated);
    case K::kExists:
    case K::kForall: {
      const Quantifier q = negated ? dual(f.quantifier()) : f.quantifier();
      return Formula::quantified(q, f.variable(), nnf(f.operand(), negated));
    }
  }
  throw std::logic_error("unhandled formula kind");
}

// Clause normal form over an NNF matrix. A clause set is a list of literal
// lists; `conjunctive` selects whether the outer list is read as AND.
using Clauses = std::vector<std::vector<Formula>>;

Clauses clauses(const Formula& f, bool conjunctive) {
  const K outer = conjunctive ? K::kAnd : K::kOr;
  const K inner = conjunctive ? K::kOr : K::kAnd;
  if (f.is_literal()) return {{f}};
  if (f.kind() == outer) {
    Clauses out;
    for (const auto& g : f.operands()) {
      Clauses part = clauses(g, conjunctive);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (f.kind() == inner) {
    // Distribute: the cross product of the operands' clause sets.
    Clauses out{{}};
    for (const auto& g : f.operands()) {
      Clauses part = clauses(g, conjunctive);
      Clauses next;
      for (const auto& left : out) {
        for (const auto& right : part) {
          auto merged = left;
          merged.insert(merged.end(), right.begin(), right.end());
          next.push_back(std::move(merged));
        }
      }
      out = std::move(next);
    }
    return out;
  }
  throw std::logic_error("clause normal form requires a quantifier-free NNF matrix");
}

Formula from_clauses(const Clauses& cs, bool conjunctive) {
  std::vector<Formula> outer;
  for (const auto& c : cs) {
    if (c.size() == 1) {
      outer.push_back(c.front());
    } else {
      outer.push_back(conjunctive ? Formula::disjunction(c) : Formula::conjunction(c));
    }
  }
  if (outer.size() == 1) return outer.front();
  return conjunctive ? Formula::conjunction(std::move(outer))
                     : Formula::disjunction(std::move(outer));
}

Formula strip_double_negation(Formula f) {
  while (f.kind() == K::kNot && f.operand().kind() == K::kNot) f = f.operand().operand();
  return f;
}

PrenexFormula extract(const Formula& f) {
  switch (f.kind()) {
    case K::kAtom:
    case K::kEqual:
      return {{}, f};
    case K::kNot: {
      PrenexFormula inner = extract(f.operand());
      for (auto& b : inner.prefix) b.quantifier = dual(b.quantifier);
      return {std::move(inner.prefix), strip_double_negation(Formula::negation(inner.matrix))};
    }
    case K::kExists:
    case K::kForall: {
      PrenexFormula inner = extract(f.operand());
      inner.prefix.insert(inner.prefix.begin(), {f.quantifier(), f.variable()});
      return inner;
    }
    case K::kAnd:
    case K::kOr: {
      // Over an empty domain a conjunction is false iff some conjunct's
      // leading quantifier is existential, and a disjunction is true iff some
      // disjunct's leading quantifier is universal. Hoisting that block first
      // keeps the prenex form equivalent there too.
      const Quantifier decisive = f.kind() == K::kAnd ? Quantifier::kExists : Quantifier::kForall;
      std::vector<PrenexFormula> parts;
      std::vector<Formula> matrices;
      std::size_t lead = f.operands().size();
      for (const auto& g : f.operands()) {
        parts.push_back(extract(g));
        matrices.push_back(parts.back().matrix);
        const auto& p = parts.back().prefix;
        if (lead == f.operands().size() && !p.empty() && p.front().quantifier == decisive) {
          lead = parts.size() - 1;
        }
      }
      PrenexFormula out{{}, f.kind() == K::kAnd ? Formula::conjunction(std::move(matrices))
                                                : Formula::disjunction(std::move(matrices))};
      if (lead != parts.size()) {
        out.prefix = parts[lead].prefix;
      }
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == lead) continue;
        out.prefix.insert(out.prefix.end(), parts[i].prefix.begin(), parts[i].prefix.end());
      }
      return out;
    }
    case K::kImplies:
      throw std::logic_error("extract expects a desugared formula");
  }
  throw std::logic_error("unhandled formula kind");
}

}  // namespace

Formula PrenexFormula::to_formula() const {
  Formula out = matrix;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    out = Formula::quantified(it->quantifier, it->variable, out);
  }
  return out;
}

Formula standardize_apart(const Formula& f) {
  std::map<Variable, Variable> scope;
  return Renamer(f).rename(f, scope);
}

Formula to_nnf(const Formula& f) { return nnf(f, false); }

PrenexFormula to_prenex(const Formula& f, const PrenexOptions& options) {
  PrenexFormula out = extract(standardize_apart(desugar(f)));
  if (options.negation_normal_form || options.clause_normal_form) out.matrix = to_nnf(out.matrix);
  if (options.clause_normal_form) {
    const bool conjunctive =
        !out.prefix.empty() && out.prefix.back().quantifier == Quantifier::kForall;
    out.matrix = from_clauses(clauses(out.matrix, conjunctive), conjunctive);
  }
  return out;
}

}  // namespace fotensor
