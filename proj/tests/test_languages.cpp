#include <doctest.h>

#include <algorithm>

#include "fotensor/error.hpp"
#include "fotensor/languages.hpp"
#include "fotensor/oracle.hpp"
#include "fotensor/tensor_expr.hpp"

using namespace fotensor;

namespace {

bool exactly_one_b(const std::string& w) { return std::count(w.begin(), w.end(), 'b') == 1; }

bool every_l_pair_has_r(const std::string& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] != 'l' || w[j] != 'l') continue;
      bool r = false;
      for (std::size_t k = i + 1; k < j; ++k) r = r || w[k] == 'r';
      if (!r) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("one-b membership") {
  const LanguageSpec one_b = formula_one_b();
  CHECK(one_b.model_kind == ModelKind::kSuccessor);
  CHECK(one_b.alphabet == Alphabet("ab"));
  CHECK_FALSE(membership(one_b, "abba", EvalPath::kTensor));
  CHECK(membership(one_b, "b", EvalPath::kTensor));
  CHECK_FALSE(membership(one_b, "", EvalPath::kTensor));
  CHECK(membership(one_b, "ba", EvalPath::kOracle));
  CHECK_THROWS_AS(membership(one_b, "abc", EvalPath::kTensor), SymbolError);

  const LanguageSpec wide = formula_one_b(Alphabet("abc"));
  CHECK(membership(wide, "cbc", EvalPath::kTensor));
}

TEST_CASE("dissimilation membership") {
  const LanguageSpec diss = formula_diss();
  CHECK(diss.model_kind == ModelKind::kPrecedence);
  CHECK_FALSE(membership(diss, "lal", EvalPath::kTensor));
  CHECK(membership(diss, "laral", EvalPath::kTensor));
  CHECK(membership(diss, "rrr", EvalPath::kTensor));
  CHECK_FALSE(membership(diss, "ll", EvalPath::kTensor));
  CHECK(membership(diss, "", EvalPath::kTensor));
}

TEST_CASE("enumeration") {
  CHECK(enumerate_language(formula_one_b(), 2) == std::vector<std::string>{"b", "ab", "ba"});
  CHECK(enumerate_language(formula_one_b(), 0).empty());
  CHECK(enumerate_language(formula_diss(), 0) == std::vector<std::string>{""});

  std::vector<std::string> expected;
  for (const auto& w : all_words(Alphabet("lra"), 2)) {
    if (w != "ll") expected.push_back(w);
  }
  CHECK(expected.size() == 12);
  CHECK(enumerate_language(formula_diss(), 2) == expected);
  CHECK(enumerate_language(formula_diss(), 2, EvalPath::kOracle) == expected);
}

TEST_CASE("all words order") {
  CHECK(all_words(Alphabet("ba"), 2) ==
        std::vector<std::string>{"", "b", "a", "bb", "ba", "ab", "aa"});
  CHECK(all_words(Alphabet("ab"), 8).size() == 511);
  CHECK(all_words(Alphabet("lra"), 6).size() == 1093);
}

TEST_CASE("one-b agrees with counting") {
  const LanguageSpec one_b = formula_one_b();
  for (const auto& w : all_words(one_b.alphabet, 8)) {
    CAPTURE(w);
    CHECK(membership(one_b, w, EvalPath::kTensor) == exactly_one_b(w));
    CHECK(membership(one_b, w, EvalPath::kOracle) == exactly_one_b(w));
  }
}

TEST_CASE("dissimilation agrees with a pairwise scan") {
  const LanguageSpec diss = formula_diss();
  for (const auto& w : all_words(diss.alphabet, 6)) {
    CAPTURE(w);
    CHECK(membership(diss, w, EvalPath::kTensor) == every_l_pair_has_r(w));
    CHECK(membership(diss, w, EvalPath::kOracle) == every_l_pair_has_r(w));
  }
}

TEST_CASE("one-b does not depend on the order relation") {
  const LanguageSpec succ = formula_one_b();
  LanguageSpec prec = succ;
  prec.model_kind = ModelKind::kPrecedence;
  for (const auto& w : all_words(succ.alphabet, 6)) {
    CHECK(membership(succ, w, EvalPath::kTensor) == membership(prec, w, EvalPath::kTensor));
  }
}

TEST_CASE("successor is definable from precedence") {
  const Formula phi = succ_from_prec_formula();
  CHECK(free_variables(phi) == std::set<Variable>{"x", "y"});
  const TensorExpr plan = compile(phi);
  auto defined = [&](const std::string& w) {
    const StructureModel m = build_precedence_model(w, Alphabet("ab"));
    const EmbeddedModel e = embed_model(m);
    std::vector<PositionPair> pairs;
    for (const auto& a : enumerate_assignments({"x", "y"}, m.domain_size())) {
      const bool tensor = eval_tensor(plan, e, a) == 1;
      CHECK(tensor == tarski_eval(phi, m, a));
      if (tensor) pairs.emplace_back(*a.lookup("x"), *a.lookup("y"));
    }
    return pairs;
  };
  CHECK(defined("abba") == std::vector<PositionPair>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(defined("a").empty());
  CHECK(defined("ab") == std::vector<PositionPair>{{1, 2}});
  for (const auto& w : all_words(Alphabet("ab"), 6)) {
    CHECK(defined(w) == build_successor_model(w, Alphabet("ab")).binary_pairs("succ"));
  }
}

TEST_CASE("LanguageSpec validation") {
  CHECK_THROWS_AS((LanguageSpec{parse_formula("b(x)"), ModelKind::kSuccessor, Alphabet("ab")}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (LanguageSpec{parse_formula("exists x. exists y. prec(x, y)"), ModelKind::kSuccessor, Alphabet("ab")}
           .validate()),
      std::invalid_argument);
  CHECK_THROWS_AS((LanguageSpec{parse_formula("exists x. z(x)"), ModelKind::kSuccessor, Alphabet("ab")}
                       .validate()),
                  std::invalid_argument);
  CHECK_NOTHROW((LanguageSpec{parse_formula("exists x. exists y. dom(x, y)"), ModelKind::kTree, Alphabet("ab")}
                     .validate()));
  CHECK(parse_model_kind("tree") == ModelKind::kTree);
  CHECK(to_string(ModelKind::kPrecedence) == "prec");
  CHECK_THROWS_AS(parse_model_kind("graph"), std::invalid_argument);
}

TEST_CASE("tree word models") {
  const LanguageSpec spec{parse_formula("exists x. exists y. dom(x, y) & b(y)"), ModelKind::kTree,
                          Alphabet("ab")};
  for (const auto& w : all_words(spec.alphabet, 4)) {
    const bool expected = w.find('b', 1) != std::string::npos;
    CHECK(membership(spec, w, EvalPath::kTensor) == expected);
    CHECK(membership(spec, w, EvalPath::kOracle) == expected);
  }
}
