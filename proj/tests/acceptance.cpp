// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fotensor/differential.hpp"
#include "fotensor/error.hpp"
#include "fotensor/languages.hpp"
#include "fotensor/oracle.hpp"
#include "fotensor/structure_io.hpp"
#include "fotensor/tensor_expr.hpp"
#include "fotensor/tree.hpp"

using namespace fotensor;

namespace {

struct Result {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 = no limit
  std::function<Result()> run;
};

Scalar tensor_value(const Formula& f, const StructureModel& m) {
  return eval_tensor(compile(f), embed_model(m));
}

std::vector<TreeNode> thirteen_node_tree() {
  const char* texts[] = {"", "0", "1", "00", "01", "010", "011", "10", "11", "110", "111", "1110", "112"};
  std::vector<TreeNode> nodes;
  std::size_t k = 0;
  for (const char* t : texts) nodes.push_back({GornAddress::parse(t), "ab"[k++ % 2]});
  return nodes;
}

std::vector<GornAddress> parse_all(std::initializer_list<const char*> texts) {
  std::vector<GornAddress> out;
  for (const char* t : texts) out.push_back(GornAddress::parse(t));
  return out;
}

Result worked_one_b() {
  Result r;
  const Scalar v = tensor_value(formula_one_b().formula, build_successor_model("abba", Alphabet("abc")));
  if (v != 0) r.fail("value " + std::to_string(v));
  return r;
}

Result worked_models() {
  Result r;
  const Alphabet abc("abc");
  const StructureModel s = build_successor_model("abba", abc);
  using Pairs = std::vector<PositionPair>;
  using Positions = std::vector<Position>;
  if (s.domain_size() != 4) r.fail("successor domain");
  if (s.binary_names() != std::vector<std::string>{"succ"}) r.fail("successor signature");
  if (s.binary_pairs("succ") != Pairs{{1, 2}, {2, 3}, {3, 4}}) r.fail("succ pairs");
  if (s.unary_members("a") != Positions{1, 4}) r.fail("R_a");
  if (s.unary_members("b") != Positions{2, 3}) r.fail("R_b");
  if (!s.unary_members("c").empty()) r.fail("R_c");
  const StructureModel p = build_precedence_model("abba", abc);
  if (p.domain_size() != 4) r.fail("precedence domain");
  if (p.binary_pairs("prec") != Pairs{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}) r.fail("prec pairs");
  return r;
}

Result one_b_language() {
  Result r;
  const LanguageSpec spec = formula_one_b();
  const TensorExpr plan = compile(spec.formula);
  std::size_t checked = 0;
  for (const auto& w : all_words(spec.alphabet, 8)) {
    const StructureModel m = build_word_model(spec.model_kind, w, spec.alphabet);
    const bool expected = std::count(w.begin(), w.end(), 'b') == 1;
    const bool tensor = eval_tensor(plan, embed_model(m)) == 1;
    if (tensor != expected || tarski_eval(spec.formula, m) != expected) r.fail("word \"" + w + "\"");
    ++checked;
  }
  if (checked != 511) r.fail(std::to_string(checked) + " words");
  if (r.ok) r.detail = "511 words";
  return r;
}

bool l_pairs_separated(const std::string& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == 'l' && w[j] == 'l' && w.substr(i + 1, j - i - 1).find('r') == std::string::npos) {
        return false;
      }
    }
  }
  return true;
}

Result dissimilation_language() {
  Result r;
  const LanguageSpec spec = formula_diss();
  const TensorExpr plan = compile(spec.formula);
  std::size_t checked = 0;
  for (const auto& w : all_words(spec.alphabet, 6)) {
    const StructureModel m = build_word_model(spec.model_kind, w, spec.alphabet);
    const bool expected = l_pairs_separated(w);
    const bool tensor = eval_tensor(plan, embed_model(m)) == 1;
    if (tensor != expected || tarski_eval(spec.formula, m) != expected) r.fail("word \"" + w + "\"");
    ++checked;
  }
  if (checked != 1093) r.fail(std::to_string(checked) + " words");
  if (r.ok) r.detail = "1093 words";
  return r;
}

Result differential() {
  Result r;
  // Closure is checked at every node during evaluation.
  const CheckReport report = run_differential_check(1000, 20240601);
  if (!report.ok()) r.fail(report.to_text());
  r.detail = std::to_string(report.agreed) + "/" + std::to_string(report.total) + " agree";
  return r;
}

Result successor_definability() {
  Result r;
  const Formula phi = succ_from_prec_formula();
  const TensorExpr plan = compile(phi);
  const Alphabet ab("ab");
  for (const auto& w : all_words(ab, 6)) {
    const StructureModel prec = build_precedence_model(w, ab);
    const StructureModel succ = build_successor_model(w, ab);
    const EmbeddedModel e = embed_model(prec);
    for (const auto& a : enumerate_assignments({"x", "y"}, prec.domain_size())) {
      const bool expected = succ.binary_holds("succ", *a.lookup("x"), *a.lookup("y"));
      if ((eval_tensor(plan, e, a) == 1) != expected || tarski_eval(phi, prec, a) != expected) {
        r.fail("word \"" + w + "\"");
      }
    }
  }
  return r;
}

Result duality() {
  Result r;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const RandomCase c = random_case(880000 + k);
    FormulaGenerator gen(990000 + k);
    std::vector<std::string> labels;
    for (char s : c.alphabet.symbols()) labels.emplace_back(1, s);
    const std::string order(c.model_kind == ModelKind::kSuccessor ? kSuccessor : kPrecedence);
    const Formula f = gen.formula(labels, order, {"x"});
    const Formula g = c.formula;
    const Formula h = gen.formula(labels, order);
    const StructureModel m = build_word_model(c.model_kind, c.word, c.alphabet);

    const Scalar all = tensor_value(Formula::forall("x", f), m);
    const Scalar dual = tensor_value(
        Formula::negation(Formula::exists("x", Formula::negation(f))), m);
    const Scalar nand = tensor_value(Formula::negation(Formula::conjunction({g, h})), m);
    const Scalar or_not =
        tensor_value(Formula::disjunction({Formula::negation(g), Formula::negation(h)}), m);
    if (all != dual) r.fail("duality, seed " + std::to_string(c.seed));
    if (nand != or_not) r.fail("De Morgan, seed " + std::to_string(c.seed));
  }
  return r;
}

Result tree_model() {
  Result r;
  const auto nodes = thirteen_node_tree();
  std::vector<GornAddress> domain;
  for (const auto& n : nodes) domain.push_back(n.address);
  if (!validate_gorn_domain(domain).valid()) r.fail("thirteen-node domain rejected");
  if (validate_gorn_domain(parse_all({"", "1"})).valid()) r.fail("{ε, 1} accepted");
  if (validate_gorn_domain(parse_all({"00"})).valid()) r.fail("{00} accepted");

  const StructureModel m = build_tree_model(nodes, Alphabet("ab"));
  const char* sentences[] = {
      "exists x. exists y. dom(x, y)",
      "forall x. forall y. (leftof(x, y) -> exists z. (dom(z, x) & dom(z, y)))",
      "exists x. forall y. !dom(y, x)",
      "forall x. (exists y. dom(y, x)) | (forall y. !leftof(y, x) & !leftof(x, y))",
      "exists x. exists y. exists z. leftof(x, y) & leftof(y, z) & a(x)",
      "forall x. forall y. (dom(x, y) -> !(x = y))",
  };
  for (const char* text : sentences) {
    const Formula f = parse_formula(text);
    const bool oracle = tarski_eval(f, m);
    const Scalar tensor = tensor_value(f, m);
    const Scalar fast = eval_tensor(optimize(compile(f)), embed_model(m));
    if (tensor != (oracle ? 1 : 0) || fast != tensor) r.fail(text);
  }
  return r;
}

Result optimizer() {
  Result r;
  struct Pattern {
    Formula formula;
    ModelKind kind;
    Alphabet alphabet;
  };
  std::vector<Pattern> patterns = {
      {parse_formula("exists x. b(x)"), ModelKind::kSuccessor, Alphabet("ab")},
      {parse_formula("exists x. exists y. (b(x) & succ(x, y))"), ModelKind::kSuccessor, Alphabet("ab")},
      {formula_one_b().formula, ModelKind::kSuccessor, Alphabet("ab")},
      {formula_diss().formula, ModelKind::kPrecedence, Alphabet("lra")},
      {succ_from_prec_formula(), ModelKind::kPrecedence, Alphabet("ab")},
      {parse_formula("forall x. (a(x) -> exists y. prec(x, y) & b(y))"), ModelKind::kPrecedence,
       Alphabet("ab")},
  };
  for (std::uint64_t k = 0; k < 100; ++k) {
    const RandomCase c = random_case(330000 + k);
    patterns.push_back({c.formula, c.model_kind, c.alphabet});
  }

  std::size_t evaluations = 0;
  for (const auto& p : patterns) {
    const TensorExpr plan = compile(p.formula);
    const TensorExpr fast = optimize(plan);
    const auto free = free_variables(p.formula);
    const std::vector<Variable> vars(free.begin(), free.end());
    for (const auto& w : all_words(p.alphabet, 5)) {
      const StructureModel m = build_word_model(p.kind, w, p.alphabet);
      const EmbeddedModel e = embed_model(m);
      for (const auto& a : enumerate_assignments(vars, m.domain_size())) {
        ++evaluations;
        if (eval_tensor(fast, e, a) != eval_tensor(plan, e, a)) {
          r.fail(p.formula.to_string() + " on \"" + w + "\"");
        }
      }
    }
  }
  if (r.ok) r.detail = std::to_string(patterns.size()) + " expressions, " + std::to_string(evaluations) + " evaluations";
  return r;
}

Result round_trips() {
  Result r;
  const Alphabet abc("abc");
  const std::vector<std::pair<std::string, StructureModel>> models = {
      {"successor abba", build_successor_model("abba", abc)},
      {"precedence abba", build_precedence_model("abba", abc)},
      {"thirteen-node tree", build_tree_model(thirteen_node_tree(), Alphabet("ab"))},
  };
  for (const auto& [name, m] : models) {
    if (!(load_structure(dump_structure(m)) == m)) r.fail(name);
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "one-b sentence on abba evaluates to 0", 1.0, worked_one_b},
      {2, "successor and precedence models of abba", 0.0, worked_models},
      {3, "one-b language, words over {a,b} up to length 8", 10.0, one_b_language},
      {4, "dissimilation language, words over {l,r,a} up to length 6", 30.0, dissimilation_language},
      {5, "differential check, 1000 random cases", 60.0, differential},
      {6, "successor definable from precedence, lengths up to 6", 0.0, successor_definability},
      {7, "quantifier duality and De Morgan, 200 cases", 0.0, duality},
      {8, "tree model", 0.0, tree_model},
      {9, "optimizer soundness on all models up to length 5", 0.0, optimizer},
      {10, "structure round trips", 0.0, round_trips},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      result.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    failures += !result.ok;
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", result.ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), seconds, result.detail.empty() ? "" : ": ", result.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
