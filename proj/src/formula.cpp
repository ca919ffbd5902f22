#include "fotensor/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include "fotensor/error.hpp"

namespace fotensor {

struct Formula::Node {
  Kind kind;
  std::string name;  // predicate or bound variable
  std::vector<Variable> terms;
  std::vector<Formula> operands;
};

namespace {

void require_identifier(const std::string& name, const char* what) {
  if (name.empty()) {
    throw std::invalid_argument(std::string("empty ") + what + " name");
  }
}

}  // namespace

Formula Formula::atom(std::string predicate, std::vector<Variable> terms) {
  require_identifier(predicate, "predicate");
  if (terms.size() != 1 && terms.size() != 2) {
    throw ArityError("predicate '" + predicate + "' applied to " + std::to_string(terms.size()) +
                     " arguments; only unary and binary predicates are supported");
  }
  for (const auto& t : terms) require_identifier(t, "variable");
  return Formula(std::make_shared<const Node>(
      Node{Kind::kAtom, std::move(predicate), std::move(terms), {}}));
}

Formula Formula::equal(Variable left, Variable right) {
  require_identifier(left, "variable");
  require_identifier(right, "variable");
  return Formula(std::make_shared<const Node>(
      Node{Kind::kEqual, {}, {std::move(left), std::move(right)}, {}}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::kNot, {}, {}, {std::move(operand)}}));
}

Formula Formula::conjunction(std::vector<Formula> operands) {
  if (operands.empty()) throw std::invalid_argument("empty conjunction");
  return Formula(std::make_shared<const Node>(Node{Kind::kAnd, {}, {}, std::move(operands)}));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  if (operands.empty()) throw std::invalid_argument("empty disjunction");
  return Formula(std::make_shared<const Node>(Node{Kind::kOr, {}, {}, std::move(operands)}));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kImplies, {}, {}, {std::move(antecedent), std::move(consequent)}}));
}

Formula Formula::exists(Variable variable, Formula body) {
  return quantified(Quantifier::kExists, std::move(variable), std::move(body));
}

Formula Formula::forall(Variable variable, Formula body) {
  return quantified(Quantifier::kForall, std::move(variable), std::move(body));
}

Formula Formula::quantified(Quantifier q, Variable variable, Formula body) {
  require_identifier(variable, "variable");
  Kind kind = q == Quantifier::kExists ? Kind::kExists : Kind::kForall;
  return Formula(std::make_shared<const Node>(
      Node{kind, std::move(variable), {}, {std::move(body)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_literal() const {
  switch (kind()) {
    case Kind::kAtom:
    case Kind::kEqual:
      return true;
    case Kind::kNot: {
      Kind inner = operand().kind();
      return inner == Kind::kAtom || inner == Kind::kEqual;
    }
    default:
      return false;
  }
}

const std::string& Formula::predicate() const {
  if (kind() != Kind::kAtom) throw std::logic_error("predicate() on a non-atom");
  return node_->name;
}

PredicateSymbol Formula::predicate_symbol() const {
  return {predicate(), static_cast<int>(terms().size())};
}

const std::vector<Variable>& Formula::terms() const {
  if (kind() != Kind::kAtom && kind() != Kind::kEqual) {
    throw std::logic_error("terms() on a non-atomic formula");
  }
  return node_->terms;
}

const Variable& Formula::variable() const {
  if (!is_quantifier()) throw std::logic_error("variable() on a non-quantifier");
  return node_->name;
}

Quantifier Formula::quantifier() const {
  if (!is_quantifier()) throw std::logic_error("quantifier() on a non-quantifier");
  return kind() == Kind::kExists ? Quantifier::kExists : Quantifier::kForall;
}

const std::vector<Formula>& Formula::operands() const { return node_->operands; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.terms == y.terms && x.operands == y.operands;
}

// Printing: binding strength of each node kind. Quantifiers bind weakest
// because their scope extends to the right.
namespace {

int strength(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kExists:
    case K::kForall:
      return 0;
    case K::kImplies:
      return 1;
    case K::kOr:
      return 2;
    case K::kAnd:
      return 3;
    case K::kNot:
      return 4;
    default:
      return 5;
  }
}

void print(const Formula& f, int context, std::string& out) {
  using K = Formula::Kind;
  const bool parens = strength(f) < context;
  if (parens) out += '(';
  switch (f.kind()) {
    case K::kAtom: {
      out += f.predicate();
      out += '(';
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        if (i) out += ", ";
        out += f.terms()[i];
      }
      out += ')';
      break;
    }
    case K::kEqual:
      out += f.terms()[0] + " = " + f.terms()[1];
      break;
    case K::kNot:
      out += '!';
      print(f.operand(), 4, out);
      break;
    case K::kAnd:
    case K::kOr: {
      const char* sep = f.kind() == K::kAnd ? " & " : " | ";
      const int inner = strength(f) + 1;
      for (std::size_t i = 0; i < f.operands().size(); ++i) {
        if (i) out += sep;
        print(f.operands()[i], inner, out);
      }
      break;
    }
    case K::kImplies:
      print(f.operand(0), 2, out);
      out += " -> ";
      print(f.operand(1), 1, out);
      break;
    case K::kExists:
    case K::kForall:
      out += f.kind() == K::kExists ? "exists " : "forall ";
      out += f.variable();
      out += ". ";
      print(f.operand(), 0, out);
      break;
  }
  if (parens) out += ')';
}

void collect_free(const Formula& f, std::vector<Variable>& bound, std::set<Variable>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kAtom:
    case K::kEqual:
      for (const auto& t : f.terms()) {
        if (std::find(bound.begin(), bound.end(), t) == bound.end()) out.insert(t);
      }
      break;
    case K::kExists:
    case K::kForall:
      bound.push_back(f.variable());
      collect_free(f.operand(), bound, out);
      bound.pop_back();
      break;
    default:
      for (const auto& g : f.operands()) collect_free(g, bound, out);
  }
}

void collect_predicates(const Formula& f, std::set<PredicateSymbol>& out) {
  if (f.kind() == Formula::Kind::kAtom) {
    out.insert(f.predicate_symbol());
    return;
  }
  if (f.kind() == Formula::Kind::kEqual) return;
  for (const auto& g : f.operands()) collect_predicates(g, out);
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

Formula desugar(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kAtom:
    case K::kEqual:
      return f;
    case K::kNot:
      return Formula::negation(desugar(f.operand()));
    case K::kAnd:
    case K::kOr: {
      std::vector<Formula> ops;
      ops.reserve(f.operands().size());
      for (const auto& g : f.operands()) ops.push_back(desugar(g));
      return f.kind() == K::kAnd ? Formula::conjunction(std::move(ops))
                                 : Formula::disjunction(std::move(ops));
    }
    case K::kImplies:
      return Formula::disjunction(
          {Formula::negation(desugar(f.operand(0))), desugar(f.operand(1))});
    case K::kExists:
    case K::kForall:
      return Formula::quantified(f.quantifier(), f.variable(), desugar(f.operand()));
  }
  throw std::logic_error("unhandled formula kind");
}

std::set<Variable> free_variables(const Formula& f) {
  std::set<Variable> out;
  std::vector<Variable> bound;
  collect_free(f, bound, out);
  return out;
}

std::set<PredicateSymbol> predicates(const Formula& f) {
  std::set<PredicateSymbol> out;
  collect_predicates(f, out);
  return out;
}

int quantifier_depth(const Formula& f) {
  if (f.kind() == Formula::Kind::kAtom || f.kind() == Formula::Kind::kEqual) return 0;
  int deepest = 0;
  for (const auto& g : f.operands()) deepest = std::max(deepest, quantifier_depth(g));
  return deepest + (f.is_quantifier() ? 1 : 0);
}

}  // namespace fotensor
