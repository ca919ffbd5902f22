#include "fotensor/tensor_expr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fotensor/error.hpp"

namespace fotensor {

struct TensorExpr::Node {
  Kind kind;
  std::string name;  // predicate or summation variable
  std::vector<Variable> vars;  // leaf arguments or contraction block
  bool negated = false;
  bool transposed = false;
  std::vector<TensorExpr> operands;
};

TensorExpr TensorExpr::rel(std::string predicate, std::vector<Variable> arguments, bool negated,
                           bool transposed) {
  if (arguments.size() != 1 && arguments.size() != 2) {
    throw ArityError("relation leaf '" + predicate + "' needs 1 or 2 arguments");
  }
  if (transposed && arguments.size() != 2) {
    throw std::invalid_argument("only binary relations can be transposed");
  }
  return TensorExpr(std::make_shared<const Node>(
      Node{Kind::kRel, std::move(predicate), std::move(arguments), negated, transposed, {}}));
}

TensorExpr TensorExpr::eq(Variable left, Variable right, bool negated) {
  return TensorExpr(std::make_shared<const Node>(
      Node{Kind::kEq, {}, {std::move(left), std::move(right)}, negated, false, {}}));
}

TensorExpr TensorExpr::complement(TensorExpr operand) {
  return TensorExpr(
      std::make_shared<const Node>(Node{Kind::kComplement, {}, {}, false, false, {std::move(operand)}}));
}

TensorExpr TensorExpr::product(std::vector<TensorExpr> operands) {
  if (operands.empty()) throw std::invalid_argument("empty product");
  return TensorExpr(
      std::make_shared<const Node>(Node{Kind::kProduct, {}, {}, false, false, std::move(operands)}));
}

TensorExpr TensorExpr::min1_sum(std::vector<TensorExpr> operands) {
  if (operands.empty()) throw std::invalid_argument("empty min1sum");
  return TensorExpr(
      std::make_shared<const Node>(Node{Kind::kMin1Sum, {}, {}, false, false, std::move(operands)}));
}

TensorExpr TensorExpr::exists_sum(Variable variable, TensorExpr body) {
  return TensorExpr(std::make_shared<const Node>(
      Node{Kind::kExistsSum, std::move(variable), {}, false, false, {std::move(body)}}));
}

TensorExpr TensorExpr::forall_dual(Variable variable, TensorExpr body) {
  return TensorExpr(std::make_shared<const Node>(
      Node{Kind::kForallDual, std::move(variable), {}, false, false, {std::move(body)}}));
}

namespace {

void check_contraction(const std::vector<Variable>& block, const std::vector<TensorExpr>& factors) {
  if (block.empty()) throw std::invalid_argument("contraction with an empty block");
  for (const auto& f : factors) {
    if (!f.is_leaf()) throw std::invalid_argument("contraction factors must be leaves");
  }
}

}  // namespace

TensorExpr TensorExpr::exists_contract(std::vector<Variable> block,
                                       std::vector<TensorExpr> factors) {
  check_contraction(block, factors);
  return TensorExpr(std::make_shared<const Node>(
      Node{Kind::kExistsContract, {}, std::move(block), false, false, std::move(factors)}));
}

TensorExpr TensorExpr::forall_contract(std::vector<Variable> block,
                                       std::vector<TensorExpr> factors) {
  check_contraction(block, factors);
  return TensorExpr(std::make_shared<const Node>(
      Node{Kind::kForallContract, {}, std::move(block), false, false, std::move(factors)}));
}

TensorExpr::Kind TensorExpr::kind() const { return node_->kind; }

const std::string& TensorExpr::predicate() const {
  if (kind() != Kind::kRel) throw std::logic_error("predicate() on a non-relation node");
  return node_->name;
}

const std::vector<Variable>& TensorExpr::arguments() const {
  if (!is_leaf()) throw std::logic_error("arguments() on a non-leaf");
  return node_->vars;
}

bool TensorExpr::negated() const { return node_->negated; }

bool TensorExpr::transposed() const { return node_->transposed; }

const Variable& TensorExpr::variable() const {
  if (kind() != Kind::kExistsSum && kind() != Kind::kForallDual) {
    throw std::logic_error("variable() on a non-summation node");
  }
  return node_->name;
}

const std::vector<Variable>& TensorExpr::block() const {
  if (!is_contraction()) throw std::logic_error("block() on a non-contraction node");
  return node_->vars;
}

const std::vector<TensorExpr>& TensorExpr::operands() const { return node_->operands; }

TensorExpr TensorExpr::toggled() const {
  if (kind() == Kind::kRel) return rel(predicate(), arguments(), !negated(), transposed());
  if (kind() == Kind::kEq) return eq(arguments()[0], arguments()[1], !negated());
  throw std::logic_error("toggled() on a non-leaf");
}

bool operator==(const TensorExpr& a, const TensorExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.vars == y.vars && x.negated == y.negated &&
         x.transposed == y.transposed && x.operands == y.operands;
}

namespace {

using EK = TensorExpr::Kind;

const char* tag(EK kind) {
  switch (kind) {
    case EK::kRel: return "rel";
    case EK::kEq: return "eq";
    case EK::kComplement: return "compl";
    case EK::kProduct: return "prod";
    case EK::kMin1Sum: return "min1sum";
    case EK::kExistsSum: return "exists-sum";
    case EK::kForallDual: return "forall-dual";
    case EK::kExistsContract: return "exists-contract";
    case EK::kForallContract: return "forall-contract";
  }
  return "?";
}

void dump_node(const TensorExpr& e, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += '(';
  out += tag(e.kind());
  if (e.is_leaf()) {
    if (e.kind() == EK::kRel) out += ' ' + e.predicate();
    for (const auto& v : e.arguments()) out += ' ' + v;
    if (e.negated()) out += " :negated";
    if (e.transposed()) out += " :transposed";
    out += ')';
    return;
  }
  if (e.kind() == EK::kExistsSum || e.kind() == EK::kForallDual) out += ' ' + e.variable();
  if (e.is_contraction()) {
    out += " [";
    for (std::size_t i = 0; i < e.block().size(); ++i) {
      if (i) out += ' ';
      out += e.block()[i];
    }
    out += ']';
  }
  for (const auto& child : e.operands()) {
    out += '\n';
    dump_node(child, depth + 1, out);
  }
  out += ')';
}

void collect_free(const TensorExpr& e, std::vector<Variable>& bound, std::set<Variable>& out) {
  auto is_bound = [&](const Variable& v) {
    return std::find(bound.begin(), bound.end(), v) != bound.end();
  };
  if (e.is_leaf()) {
    for (const auto& v : e.arguments()) {
      if (!is_bound(v)) out.insert(v);
    }
    return;
  }
  std::size_t pushed = 0;
  if (e.kind() == EK::kExistsSum || e.kind() == EK::kForallDual) {
    bound.push_back(e.variable());
    pushed = 1;
  } else if (e.is_contraction()) {
    bound.insert(bound.end(), e.block().begin(), e.block().end());
    pushed = e.block().size();
  }
  for (const auto& child : e.operands()) collect_free(child, bound, out);
  bound.resize(bound.size() - pushed);
}

using K = Formula::Kind;

class Compiler {
 public:
  explicit Compiler(const PrenexFormula& p) {
    std::set<Variable> bound;
    for (const auto& b : p.prefix) bound.insert(b.variable);
    for (const auto& v : free_variables(p.matrix)) {
      if (!bound.count(v)) rank_.emplace(v, rank_.size());
    }
    for (const auto& b : p.prefix) rank_.emplace(b.variable, rank_.size());
  }

  TensorExpr matrix(const Formula& f) const {
    switch (f.kind()) {
      case K::kAtom:
      case K::kEqual:
        return literal(f, false);
      case K::kNot:
        if (f.operand().kind() == K::kAtom || f.operand().kind() == K::kEqual) {
          return literal(f.operand(), true);
        }
        return TensorExpr::complement(matrix(f.operand()));
      case K::kAnd:
      case K::kOr: {
        std::vector<TensorExpr> ops;
        for (const auto& g : f.operands()) ops.push_back(matrix(g));
        return f.kind() == K::kAnd ? TensorExpr::product(std::move(ops))
                                   : TensorExpr::min1_sum(std::move(ops));
      }
      case K::kImplies:
        return matrix(desugar(f));
      case K::kExists:
      case K::kForall:
        throw std::logic_error("quantifier inside a prenex matrix");
    }
    throw std::logic_error("unhandled formula kind");
  }

 private:
  TensorExpr literal(const Formula& atom, bool negated) const {
    const auto& t = atom.terms();
    if (atom.kind() == K::kEqual) return TensorExpr::eq(t[0], t[1], negated);
    if (t.size() == 2 && t[0] != t[1] && rank(t[0]) > rank(t[1])) {
      return TensorExpr::rel(atom.predicate(), {t[1], t[0]}, negated, true);
    }
    return TensorExpr::rel(atom.predicate(), t, negated, false);
  }

  std::size_t rank(const Variable& v) const { return rank_.at(v); }

  std::map<Variable, std::size_t> rank_;
};

}  // namespace

std::string TensorExpr::dump() const {
  std::string out;
  dump_node(*this, 0, out);
  return out;
}

std::set<Variable> free_variables(const TensorExpr& e) {
  std::set<Variable> out;
  std::vector<Variable> bound;
  collect_free(e, bound, out);
  return out;
}

TensorExpr compile_prenex(const PrenexFormula& p) {
  TensorExpr out = Compiler(p).matrix(p.matrix);
  for (auto it = p.prefix.rbegin(); it != p.prefix.rend(); ++it) {
    out = it->quantifier == Quantifier::kExists ? TensorExpr::exists_sum(it->variable, out)
                                                : TensorExpr::forall_dual(it->variable, out);
  }
  return out;
}

TensorExpr compile(const Formula& f) { return compile_prenex(to_prenex(f)); }

}  // namespace fotensor
