#include "fotensor/languages.hpp"

#include <set>
#include <stdexcept>

#include "fotensor/error.hpp"
#include "fotensor/oracle.hpp"
#include "fotensor/tensor_expr.hpp"
#include "fotensor/tree.hpp"

namespace fotensor {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kSuccessor: return "succ";
    case ModelKind::kPrecedence: return "prec";
    case ModelKind::kTree: return "tree";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "succ") return ModelKind::kSuccessor;
  if (name == "prec") return ModelKind::kPrecedence;
  if (name == "tree") return ModelKind::kTree;
  throw std::invalid_argument("unknown model kind '" + std::string(name) + "'");
}

void LanguageSpec::validate() const {
  if (auto free = free_variables(formula); !free.empty()) {
    throw std::invalid_argument("language formula has free variable '" + *free.begin() + "'");
  }
  for (const auto& p : predicates(formula)) {
    bool ok = false;
    if (p.arity == 1) {
      ok = p.name.size() == 1 && alphabet.contains(p.name[0]);
    } else if (model_kind == ModelKind::kSuccessor) {
      ok = p.name == kSuccessor;
    } else if (model_kind == ModelKind::kPrecedence) {
      ok = p.name == kPrecedence;
    } else {
      ok = p.name == kDominance || p.name == kLeftOf;
    }
    if (!ok) {
      throw std::invalid_argument("predicate '" + p.name + "' is not available over " +
                                  std::string(to_string(model_kind)) + " models of {" +
                                  alphabet.symbols() + "}");
    }
  }
}

LanguageSpec formula_one_b(const Alphabet& alphabet) {
  LanguageSpec spec{parse_formula("exists x. forall y. (b(x) & (b(y) -> x = y))"),
                    ModelKind::kSuccessor, alphabet};
  spec.validate();
  return spec;
}

LanguageSpec formula_diss(const Alphabet& alphabet) {
  LanguageSpec spec{
      parse_formula("forall x. forall y. ((l(x) & l(y) & prec(x,y)) -> "
                    "exists z. (r(z) & prec(x,z) & prec(z,y)))"),
      ModelKind::kPrecedence, alphabet};
  spec.validate();
  return spec;
}

Formula succ_from_prec_formula() {
  return parse_formula("prec(x,y) & !exists z. (prec(x,z) & prec(z,y))");
}

Alphabet infer_alphabet(const Formula& formula, std::string_view word) {
  std::set<char> letters(word.begin(), word.end());
  for (const auto& p : predicates(formula)) {
    if (p.arity == 1 && p.name.size() == 1) letters.insert(p.name[0]);
  }
  if (letters.empty()) throw SymbolError("cannot infer an alphabet; pass one explicitly");
  return Alphabet(std::string(letters.begin(), letters.end()));
}

StructureModel build_word_model(ModelKind kind, std::string_view word, const Alphabet& alphabet) {
  switch (kind) {
    case ModelKind::kSuccessor:
      return build_successor_model(word, alphabet);
    case ModelKind::kPrecedence:
      return build_precedence_model(word, alphabet);
    case ModelKind::kTree:
      alphabet.check_word(word);
      return build_tree_model(chain_tree(word), alphabet);
  }
  throw std::logic_error("unhandled model kind");
}

bool satisfies(const Formula& formula, const StructureModel& model, EvalPath path) {
  if (path == EvalPath::kOracle) return tarski_eval(formula, model);
  return eval_tensor(compile(formula), embed_model(model)) == 1;
}

bool membership(const LanguageSpec& spec, std::string_view word, EvalPath path) {
  return satisfies(spec.formula, build_word_model(spec.model_kind, word, spec.alphabet), path);
}

std::vector<std::string> all_words(const Alphabet& alphabet, std::size_t max_length) {
  std::vector<std::string> out{""};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (char c : alphabet.symbols()) out.push_back(out[k] + c);
    }
    layer_begin = layer_end;
  }
  return out;
}

std::vector<std::string> enumerate_language(const LanguageSpec& spec, std::size_t max_length,
                                            EvalPath path) {
  // One plan serves every candidate word.
  const TensorExpr plan = compile(spec.formula);
  std::vector<std::string> out;
  for (auto& word : all_words(spec.alphabet, max_length)) {
    const StructureModel model = build_word_model(spec.model_kind, word, spec.alphabet);
    const bool member = path == EvalPath::kOracle ? tarski_eval(spec.formula, model)
                                                  : eval_tensor(plan, embed_model(model)) == 1;
    if (member) out.push_back(std::move(word));
  }
  return out;
}

}  // namespace fotensor
