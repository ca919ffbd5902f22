#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fotensor/formula.hpp"
#include "fotensor/structure.hpp"

namespace fotensor {

enum class ModelKind { kSuccessor, kPrecedence, kTree };

/// "succ", "prec", "tree".
std::string_view to_string(ModelKind kind);
/// Throws std::invalid_argument on an unknown name.
ModelKind parse_model_kind(std::string_view name);

enum class EvalPath { kTensor, kOracle };

/// A closed formula read over one kind of model of words from an alphabet.
struct LanguageSpec {
  Formula formula;
  ModelKind model_kind;
  Alphabet alphabet;

  /// Throws std::invalid_argument if the formula is open or uses a predicate
  /// the model kind does not provide.
  void validate() const;
};

/// Exactly one b: ∃x ∀y (b(x) ∧ (b(y) → x = y)) over successor models.
LanguageSpec formula_one_b(const Alphabet& alphabet = Alphabet("ab"));

/// No two l's without an intervening r, over precedence models:
/// ∀x ∀y ((l(x) ∧ l(y) ∧ x < y) → ∃z (r(z) ∧ x < z ∧ z < y)).
LanguageSpec formula_diss(const Alphabet& alphabet = Alphabet("lra"));

/// φ(x, y) = prec(x, y) ∧ ¬∃z (prec(x, z) ∧ prec(z, y)), which defines the
/// successor relation over precedence models.
Formula succ_from_prec_formula();

/// The sorted letters of word together with every single-letter unary
/// predicate of formula. Throws SymbolError when that set is empty.
Alphabet infer_alphabet(const Formula& formula, std::string_view word = {});

/// The model of word under the given kind. Tree models read the word as a
/// unary-branching tree (ε, 0, 00, ...). Throws SymbolError.
StructureModel build_word_model(ModelKind kind, std::string_view word, const Alphabet& alphabet);

/// Truth of a closed formula on a structure through either evaluation path.
bool satisfies(const Formula& formula, const StructureModel& model, EvalPath path);

bool membership(const LanguageSpec& spec, std::string_view word, EvalPath path);

/// Every word of length ≤ max_length, ordered by length then by alphabet order.
std::vector<std::string> all_words(const Alphabet& alphabet, std::size_t max_length);

/// Words of length ≤ max_length in the language, in the order of all_words.
std::vector<std::string> enumerate_language(const LanguageSpec& spec, std::size_t max_length,
                                            EvalPath path = EvalPath::kTensor);

}  // namespace fotensor
