// fotensor: evaluate first-order constraints over string and tree models
// through compiled tensor plans.
//
// Exit status: 0 ok, 1 parse or usage error, 2 semantic error,
// 3 differential mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fotensor/differential.hpp"
#include "fotensor/error.hpp"
#include "fotensor/formula.hpp"
#include "fotensor/languages.hpp"
#include "fotensor/prenex.hpp"
#include "fotensor/structure_io.hpp"
#include "fotensor/tensor_expr.hpp"

namespace {

using namespace fotensor;
using json = nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kSemantic = 2, kMismatch = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string expr;
  std::string formula_file;
  std::string builtin;
  std::string model = "succ";
  std::optional<std::string> word;
  std::string structure;
  std::string alphabet;
  std::size_t max_len = 0;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t random = 0;
  bool optimized = false;
  bool trace = false;
  bool count = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Source {
  Formula formula;
  std::optional<LanguageSpec> builtin;
};

Source load_formula(const Config& c) {
  const int sources = !c.expr.empty() + !c.formula_file.empty() + !c.builtin.empty();
  if (sources != 1) {
    throw UsageError("give exactly one of --expr, --formula-file, --builtin");
  }
  if (!c.builtin.empty()) {
    std::optional<LanguageSpec> spec;
    if (c.builtin == "one-b") {
      spec = c.alphabet.empty() ? formula_one_b() : formula_one_b(Alphabet(c.alphabet));
    } else if (c.builtin == "diss") {
      spec = c.alphabet.empty() ? formula_diss() : formula_diss(Alphabet(c.alphabet));
    } else {
      throw UsageError("unknown builtin '" + c.builtin + "' (one-b, diss)");
    }
    return {spec->formula, spec};
  }
  return {parse_formula(c.expr.empty() ? read_file(c.formula_file) : c.expr), std::nullopt};
}

void require_closed(const Formula& f) {
  if (auto free = free_variables(f); !free.empty()) {
    throw UnboundVariableError(*free.begin());
  }
}

ModelKind model_kind(const Config& c, const Source& s) {
  return s.builtin && c.model.empty() ? s.builtin->model_kind : parse_model_kind(c.model);
}

Alphabet alphabet_for(const Config& c, const Source& s, std::string_view word) {
  if (!c.alphabet.empty()) return Alphabet(c.alphabet);
  if (s.builtin) return s.builtin->alphabet;
  return infer_alphabet(s.formula, word);
}

int cmd_eval(const Config& c) {
  if (c.word.has_value() == !c.structure.empty()) {
    throw UsageError("give exactly one of --word, --structure");
  }
  const Source s = load_formula(c);
  require_closed(s.formula);
  const ModelKind kind = model_kind(c, s);
  const StructureModel model =
      c.word ? build_word_model(kind, *c.word, alphabet_for(c, s, *c.word))
             : load_structure(read_file(c.structure));

  TensorExpr plan = compile(s.formula);
  if (c.optimized) plan = optimize(plan);
  std::vector<std::string> trace;
  EvalOptions options;
  if (c.trace) options.trace = &trace;
  const Scalar value = eval_tensor(plan, embed_model(model), {}, options);

  if (c.format == "json") {
    json doc{{"value", value}};
    if (c.trace) doc["trace"] = trace;
    std::cout << doc.dump() << "\n";
  } else {
    for (const auto& line : trace) std::cout << line << "\n";
    std::cout << value << "\n";
  }
  return kOk;
}

int cmd_enumerate(const Config& c) {
  if (c.word || !c.structure.empty()) throw UsageError("enumerate takes no --word or --structure");
  const Source s = load_formula(c);
  require_closed(s.formula);
  LanguageSpec spec{s.formula, model_kind(c, s), alphabet_for(c, s, "")};
  spec.validate();
  const auto words = enumerate_language(spec, c.max_len);

  if (c.format == "json") {
    json doc{{"count", words.size()}};
    if (!c.count) doc["words"] = words;
    std::cout << doc.dump() << "\n";
  } else if (c.count) {
    std::cout << words.size() << "\n";
  } else {
    for (const auto& w : words) std::cout << (w.empty() ? "\"\"" : w) << "\n";
  }
  return kOk;
}

int cmd_compile(const Config& c) {
  const Source s = load_formula(c);
  const PrenexFormula prenex = to_prenex(s.formula);
  const TensorExpr plan = compile_prenex(prenex);
  if (c.format == "json") {
    json doc{{"prenex", prenex.to_string()}, {"plan", plan.dump()}};
    if (c.optimized) doc["optimized"] = optimize(plan).dump();
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "prenex: " << prenex.to_string() << "\n" << plan.dump() << "\n";
    if (c.optimized) std::cout << "optimized:\n" << optimize(plan).dump() << "\n";
  }
  return kOk;
}

int cmd_check(const Config& c) {
  if (c.random < 1) throw UsageError("--random must be at least 1");
  const CheckReport report = run_differential_check(c.random, c.seed);
  std::cout << (c.format == "json" ? report.to_json() + "\n" : report.to_text());
  return report.ok() ? kOk : kMismatch;
}

void add_common(CLI::App* sub, Config& c) {
  auto* expr = sub->add_option("--expr", c.expr, "Formula text");
  auto* file = sub->add_option("--formula-file", c.formula_file, "File holding the formula");
  auto* builtin = sub->add_option("--builtin", c.builtin, "Built-in language: one-b or diss");
  expr->excludes(file)->excludes(builtin);
  file->excludes(builtin);
  sub->add_option("--model", c.model, "Model kind: succ, prec, or tree")
      ->check(CLI::IsMember({"succ", "prec", "tree"}));
  sub->add_option("--alphabet", c.alphabet, "Alphabet symbols, e.g. ab");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order constraints over string and tree models, evaluated as tensors"};
  app.require_subcommand(1);
  Config c;

  auto* eval = app.add_subcommand("eval", "Evaluate a closed formula on a word or structure");
  add_common(eval, c);
  auto* word = eval->add_option("--word", c.word, "Input word");
  auto* structure = eval->add_option("--structure", c.structure, "Structure document (JSON)");
  word->excludes(structure);
  eval->add_flag("--trace", c.trace, "Print per-quantifier sums before min1");
  eval->add_flag("--optimized", c.optimized, "Evaluate the optimized plan");

  auto* enumerate = app.add_subcommand("enumerate", "List the words of the language up to a length");
  add_common(enumerate, c);
  enumerate->add_option("--max-len", c.max_len, "Maximum word length")->required();
  enumerate->add_flag("--count", c.count, "Print only the number of words");

  auto* compile_cmd = app.add_subcommand("compile", "Print the prenex form and tensor plan");
  add_common(compile_cmd, c);
  compile_cmd->add_flag("--optimized", c.optimized, "Also print the optimized plan");

  auto* check = app.add_subcommand("check", "Differential test of tensor against oracle evaluation");
  check->add_option("--random", c.random, "Number of random cases")->required();
  check->add_option("--seed", c.seed, "Seed of the first case");
  check->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  // --builtin supplies its own model kind unless --model is given.
  if (!c.builtin.empty() && app.get_subcommands().front()->count("--model") == 0) c.model.clear();

  try {
    if (eval->parsed()) return cmd_eval(c);
    if (enumerate->parsed()) return cmd_enumerate(c);
    if (compile_cmd->parsed()) return cmd_compile(c);
    return cmd_check(c);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == StructureError::Kind::kMalformed ? kUsage : kSemantic;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
}
