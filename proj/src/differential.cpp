#include "fotensor/differential.hpp"

#include <json.hpp>

#include "fotensor/error.hpp"
#include "fotensor/oracle.hpp"
#include "fotensor/tensor_expr.hpp"

namespace fotensor {
namespace {

const std::vector<Variable> kVariables = {"x", "y", "z"};

}  // namespace

Formula FormulaGenerator::formula(const std::vector<std::string>& labels,
                                  const std::string& order_relation,
                                  const std::vector<Variable>& scope, int max_depth) {
  labels_ = labels;
  order_ = order_relation;
  max_depth_ = max_depth;
  std::vector<Variable> s = scope;
  return node(0, s);
}

Formula FormulaGenerator::node(int depth, std::vector<Variable>& scope) {
  if (scope.empty()) {
    // Only a quantifier, or a connective whose operands can still quantify,
    // keeps the result closed.
    const bool connective = depth + 2 <= max_depth_ && below(60) < 40;
    if (!connective) {
      const Variable v = kVariables[below(kVariables.size())];
      const Quantifier q = below(2) ? Quantifier::kForall : Quantifier::kExists;
      scope.push_back(v);
      Formula body = node(depth + 1, scope);
      scope.pop_back();
      return Formula::quantified(q, v, body);
    }
  }
  if (depth >= max_depth_) return leaf(scope, below(40) < 10);

  const auto roll = below(100);
  if (roll < 40 || (scope.empty())) {
    switch (below(4)) {
      case 0:
        return Formula::negation(node(depth + 1, scope));
      case 1:
        return Formula::conjunction({node(depth + 1, scope), node(depth + 1, scope)});
      case 2:
        return Formula::disjunction({node(depth + 1, scope), node(depth + 1, scope)});
      default: {
        Formula lhs = node(depth + 1, scope);
        return Formula::implication(lhs, node(depth + 1, scope));
      }
    }
  }
  if (roll < 70) return leaf(scope, false);
  if (roll < 90) {
    const Variable v = kVariables[below(kVariables.size())];
    const Quantifier q = below(2) ? Quantifier::kForall : Quantifier::kExists;
    scope.push_back(v);
    Formula body = node(depth + 1, scope);
    scope.pop_back();
    return Formula::quantified(q, v, body);
  }
  return leaf(scope, true);
}

Formula FormulaGenerator::leaf(std::vector<Variable>& scope, bool equality) {
  auto pick = [&] { return scope[below(scope.size())]; };
  if (equality) {
    Variable lhs = pick();
    return Formula::equal(lhs, pick());
  }
  const auto choice = below(labels_.size() + 1);
  if (choice == labels_.size()) {
    Variable lhs = pick();
    return Formula::atom(order_, {lhs, pick()});
  }
  return Formula::atom(labels_[choice], {pick()});
}

RandomCase random_case(std::uint64_t seed) {
  FormulaGenerator gen(seed);
  const std::string letters = "abc";
  const Alphabet alphabet(letters.substr(0, 1 + gen.below(3)));
  const ModelKind kind = gen.below(2) ? ModelKind::kPrecedence : ModelKind::kSuccessor;
  std::string word;
  const auto length = gen.below(6);
  for (std::uint64_t i = 0; i < length; ++i) word += alphabet.symbols()[gen.below(alphabet.size())];
  std::vector<std::string> labels;
  for (char c : alphabet.symbols()) labels.emplace_back(1, c);
  const std::string order(kind == ModelKind::kSuccessor ? kSuccessor : kPrecedence);
  Formula f = gen.formula(labels, order);
  return {seed, kind, alphabet, word, f};
}

CaseOutcome run_case(const RandomCase& c) {
  CaseOutcome out{c, false, -1, -1, {}};
  const StructureModel model = build_word_model(c.model_kind, c.word, c.alphabet);
  out.oracle = tarski_eval(c.formula, model);
  const EmbeddedModel embedded = embed_model(model);
  try {
    const TensorExpr plan = compile(c.formula);
    out.tensor = eval_tensor(plan, embedded);
    out.optimized = eval_tensor(optimize(plan), embedded);
  } catch (const ClosureViolation& e) {
    out.error = e.what();
  }
  return out;
}

CheckReport run_differential_check(std::size_t count, std::uint64_t seed) {
  CheckReport report;
  for (std::size_t i = 0; i < count; ++i) {
    CaseOutcome outcome = run_case(random_case(seed + i));
    ++report.total;
    if (outcome.agrees()) {
      ++report.agreed;
    } else {
      report.mismatches.push_back(std::move(outcome));
    }
  }
  return report;
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const auto& m : mismatches) {
    const auto& c = m.random_case;
    out += "mismatch seed=" + std::to_string(c.seed) + " model=" + std::string(to_string(c.model_kind)) +
           " alphabet=" + c.alphabet.symbols() + " word=\"" + c.word + "\"\n";
    out += "  formula: " + c.formula.to_string() + "\n";
    out += "  oracle=" + std::to_string(m.oracle ? 1 : 0) + " tensor=" + std::to_string(m.tensor) +
           " optimized=" + std::to_string(m.optimized) + "\n";
    if (!m.error.empty()) {
      const std::string first_line = m.error.substr(0, m.error.find('\n'));
      out += "  error: " + first_line + "\n";
    }
  }
  out += std::to_string(agreed) + "/" + std::to_string(total) + " agree\n";
  return out;
}

std::string CheckReport::to_json() const {
  nlohmann::json doc;
  doc["total"] = total;
  doc["agree"] = agreed;
  doc["mismatches"] = nlohmann::json::array();
  for (const auto& m : mismatches) {
    const auto& c = m.random_case;
    doc["mismatches"].push_back({{"seed", c.seed},
                                 {"model", std::string(to_string(c.model_kind))},
                                 {"alphabet", c.alphabet.symbols()},
                                 {"word", c.word},
                                 {"formula", c.formula.to_string()},
                                 {"oracle", m.oracle ? 1 : 0},
                                 {"tensor", m.tensor},
                                 {"optimized", m.optimized},
                                 {"error", m.error}});
  }
  return doc.dump();
}

}  // namespace fotensor
