#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "fotensor/error.hpp"
#include "fotensor/languages.hpp"
#include "fotensor/structure.hpp"
#include "fotensor/structure_io.hpp"
#include "fotensor/tree.hpp"

using namespace fotensor;

namespace {

using Pairs = std::vector<PositionPair>;
using Positions = std::vector<Position>;

std::vector<GornAddress> addresses(std::initializer_list<const char*> texts) {
  std::vector<GornAddress> out;
  for (const char* t : texts) out.push_back(GornAddress::parse(t));
  return out;
}

const std::initializer_list<const char*> kThirteenNodes = {"",   "0",   "1",   "00",   "01",  "010", "011",
                                                       "10", "11",  "110", "111", "1110", "112"};

std::vector<TreeNode> thirteen_node_tree() {
  std::vector<TreeNode> nodes;
  const std::string labels = "ab";
  std::size_t k = 0;
  for (const auto& a : addresses(kThirteenNodes)) nodes.push_back({a, labels[k++ % 2]});
  return nodes;
}

Position index_of(const std::vector<TreeNode>& nodes, const char* address) {
  const auto order = ordered_addresses(nodes);
  const auto it = std::find(order.begin(), order.end(), GornAddress::parse(address));
  REQUIRE(it != order.end());
  return static_cast<Position>(it - order.begin()) + 1;
}

}  // namespace

TEST_CASE("alphabet") {
  CHECK(Alphabet("abc").size() == 3);
  CHECK_THROWS_AS(Alphabet(""), SymbolError);
  CHECK_THROWS_AS(Alphabet("aba"), SymbolError);
  CHECK_THROWS_AS(Alphabet("ab").check_word("abc"), SymbolError);
}

TEST_CASE("successor model of abba") {
  const StructureModel m = build_successor_model("abba", Alphabet("abc"));
  CHECK(m.domain_size() == 4);
  CHECK(m.binary_pairs("succ") == Pairs{{1, 2}, {2, 3}, {3, 4}});
  CHECK(m.unary_members("a") == Positions{1, 4});
  CHECK(m.unary_members("b") == Positions{2, 3});
  CHECK(m.unary_members("c").empty());
  CHECK(m.binary_names() == std::vector<std::string>{"succ"});
}

TEST_CASE("small successor models") {
  const StructureModel empty = build_successor_model("", Alphabet("ab"));
  CHECK(empty.domain_size() == 0);
  CHECK(empty.unary_members("a").empty());
  CHECK(empty.binary_pairs("succ").empty());

  const StructureModel one = build_successor_model("a", Alphabet("ab"));
  CHECK(one.domain_size() == 1);
  CHECK(one.binary_pairs("succ").empty());
  CHECK(one.unary_members("a") == Positions{1});
  CHECK(one.unary_members("b").empty());

  CHECK_THROWS_AS(build_successor_model("abz", Alphabet("ab")), SymbolError);
}

TEST_CASE("precedence models") {
  const StructureModel m = build_precedence_model("abba", Alphabet("abc"));
  CHECK(m.binary_pairs("prec") == Pairs{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(m.unary_members("a") == Positions{1, 4});
  CHECK(m.unary_members("b") == Positions{2, 3});
  CHECK(build_precedence_model("", Alphabet("ab")).domain_size() == 0);
  CHECK(build_precedence_model("abc", Alphabet("abc")).binary_pairs("prec") ==
        Pairs{{1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(build_precedence_model("x", Alphabet("ab")), SymbolError);
}

TEST_CASE("property: string model invariants") {
  const Alphabet ab("ab");
  for (const auto& w : all_words(ab, 6)) {
    const StructureModel s = build_successor_model(w, ab);
    const StructureModel p = build_precedence_model(w, ab);
    const std::size_t n = w.size();
    CHECK(s.unary_names() == p.unary_names());
    for (const auto& name : s.unary_names()) CHECK(s.unary_members(name) == p.unary_members(name));
    CHECK(s.binary_pairs("succ").size() == (n == 0 ? 0 : n - 1));
    CHECK(p.binary_pairs("prec").size() == n * (n - 1) / 2);
    for (Position i = 1; i <= n; ++i) {
      int labels = 0;
      for (const auto& name : s.unary_names()) labels += s.unary_holds(name, i);
      CHECK(labels == 1);
    }
  }
}

TEST_CASE("structure construction errors") {
  StructureModel m(3);
  const Positions bad{4};
  CHECK_THROWS_AS(m.add_unary("a", bad), StructureError);
  const Positions dup{1, 1};
  CHECK_THROWS_AS(m.add_unary("a", dup), StructureError);
  CHECK_THROWS_AS(m.add_unary_bits("a", {0, 2, 1}), StructureError);
  CHECK_THROWS_AS(m.add_binary_bits("r", {0, 1}), StructureError);
  const Positions ok{1};
  m.add_unary("a", ok);
  CHECK_THROWS_AS(m.add_unary("a", ok), StructureError);
  CHECK_THROWS_AS(m.unary_members("zz"), UnknownPredicateError);
}

TEST_CASE("gorn addresses") {
  CHECK(GornAddress::parse("").is_root());
  CHECK(GornAddress::parse("ε").is_root());
  CHECK(GornAddress::parse("110").digits() == std::vector<unsigned>{1, 1, 0});
  CHECK(GornAddress::parse("1.10.2").digits() == std::vector<unsigned>{1, 10, 2});
  CHECK(GornAddress::parse("110").parent() == GornAddress::parse("11"));
  CHECK(GornAddress::parse("11").child(2) == GornAddress::parse("112"));
  CHECK(GornAddress::parse("").to_string() == "ε");
  CHECK(GornAddress::parse("1") < GornAddress::parse("00"));
  CHECK(GornAddress::parse("01") < GornAddress::parse("10"));
}

TEST_CASE("gorn domain validation") {
  CHECK(validate_gorn_domain(addresses(kThirteenNodes)).valid());
  CHECK(validate_gorn_domain(addresses({""})).valid());

  const GornValidation sibling = validate_gorn_domain(addresses({"", "1"}));
  CHECK(!sibling.valid());
  CHECK(sibling.violations ==
        std::vector<GornViolation>{{GornAddress::parse("1"), GornViolation::Kind::kMissingLeftSibling,
                                    GornAddress::parse("0")}});

  const GornValidation prefix = validate_gorn_domain(addresses({"00"}));
  CHECK(!prefix.valid());
  std::vector<GornAddress> missing;
  for (const auto& v : prefix.violations) {
    CHECK(v.kind == GornViolation::Kind::kMissingPrefix);
    missing.push_back(v.required);
  }
  std::sort(missing.begin(), missing.end());
  CHECK(missing == addresses({"", "0"}));
  CHECK(!prefix.describe().empty());
}

TEST_CASE("tree model of the thirteen-node domain") {
  const auto nodes = thirteen_node_tree();
  const StructureModel m = build_tree_model(nodes, Alphabet("ab"));
  CHECK(m.domain_size() == 13);
  auto dom = [&](const char* p, const char* c) {
    return m.binary_holds("dom", index_of(nodes, p), index_of(nodes, c));
  };
  auto leftof = [&](const char* l, const char* r) {
    return m.binary_holds("leftof", index_of(nodes, l), index_of(nodes, r));
  };
  CHECK(dom("", "0"));
  CHECK(dom("", "1"));
  CHECK(dom("11", "110"));
  CHECK(dom("11", "111"));
  CHECK(dom("11", "112"));
  CHECK(leftof("0", "1"));
  CHECK(leftof("110", "111"));
  CHECK(leftof("111", "112"));
  CHECK(!leftof("110", "112"));
  CHECK(!dom("", "00"));
  CHECK(m.binary_pairs("dom").size() == 12);
  CHECK(m.binary_pairs("leftof").size() == 6);

  // Every non-root node has exactly one parent, and parents come earlier in
  // the domain order, so dom is acyclic.
  for (Position j = 1; j <= m.domain_size(); ++j) {
    int parents = 0;
    for (Position i = 1; i <= m.domain_size(); ++i) {
      if (m.binary_holds("dom", i, j)) {
        ++parents;
        CHECK(i < j);
      }
    }
    CHECK(parents == (j == 1 ? 0 : 1));
  }
}

TEST_CASE("small tree models") {
  const StructureModel root = build_tree_model({{GornAddress(), 'a'}}, Alphabet("a"));
  CHECK(root.domain_size() == 1);
  CHECK(root.binary_pairs("dom").empty());
  CHECK(root.binary_pairs("leftof").empty());

  const StructureModel chain = build_tree_model(chain_tree("aba"), Alphabet("ab"));
  CHECK(chain.binary_pairs("dom") == Pairs{{1, 2}, {2, 3}});
  CHECK(chain.binary_pairs("leftof").empty());
  CHECK(chain.unary_members("b") == Positions{2});

  try {
    build_tree_model({{GornAddress::parse("00"), 'a'}}, Alphabet("a"));
    FAIL("expected an invalid-domain error");
  } catch (const StructureError& e) {
    CHECK(e.kind() == StructureError::Kind::kInvalidDomain);
  }
  try {
    build_tree_model({{GornAddress(), 'a'}, {GornAddress(), 'a'}}, Alphabet("a"));
    FAIL("expected a duplicate error");
  } catch (const StructureError& e) {
    CHECK(e.kind() == StructureError::Kind::kDuplicate);
  }
  CHECK_THROWS_AS(build_tree_model({{GornAddress(), 'z'}}, Alphabet("a")), SymbolError);
}

TEST_CASE("structure documents") {
  const StructureModel m = build_successor_model("abba", Alphabet("abc"));
  CHECK(nlohmann::json::parse(dump_structure(m)) == nlohmann::json::parse(R"({
    "domain": 4,
    "unary": {"a": [1, 4], "b": [2, 3], "c": []},
    "binary": {"succ": [[1, 2], [2, 3], [3, 4]]}})"));

  const StructureModel loaded = load_structure(R"({
    "domain": 4,
    "unary": {"c": [], "b": [3, 2], "a": [4, 1]},
    "binary": {"succ": [[3, 4], [1, 2], [2, 3]]}})");
  CHECK(loaded == m);

  const StructureModel dense = load_structure(R"({
    "domain": 2, "unary": {"a": {"bits": [1, 0]}}, "binary": {"r": {"matrix": [[0, 1], [0, 0]]}}})");
  CHECK(dense.unary_members("a") == Positions{1});
  CHECK(dense.binary_pairs("r") == Pairs{{1, 2}});
}

TEST_CASE("structure document errors") {
  auto kind_of = [](const char* text) {
    try {
      load_structure(text);
    } catch (const StructureError& e) {
      return e.kind();
    }
    FAIL("expected a structure error");
    return StructureError::Kind::kMalformed;
  };
  using K = StructureError::Kind;
  CHECK(kind_of(R"({"domain": 4, "unary": {"a": [5]}})") == K::kOutOfRange);
  CHECK(kind_of(R"({"domain": 4, "binary": {"succ": [[0, 1]]}})") == K::kOutOfRange);
  CHECK(kind_of(R"({"domain": 2, "unary": {"a": {"bits": [1, 2]}}})") == K::kNonBinaryEntry);
  CHECK(kind_of(R"({"domain": 2, "binary": {"r": {"matrix": [[0, 1], [3, 0]]}}})") ==
        K::kNonBinaryEntry);
  CHECK(kind_of(R"({"domain": 4, "unary": {"a": [1, 1]}})") == K::kDuplicate);
  CHECK(kind_of(R"({"domain": 4, "binary": {"r": [[1, 2], [1, 2]]}})") == K::kDuplicate);
  CHECK(kind_of(R"({"domain": 4, "unary": {"a": [1]}, "binary": {"a": [[1, 2]]}})") == K::kDuplicate);
  CHECK(kind_of(R"({"domain": -1})") == K::kMalformed);
  CHECK(kind_of(R"({"unary": {}})") == K::kMalformed);
  CHECK(kind_of(R"({"domain": 2, "extra": 1})") == K::kMalformed);
  CHECK(kind_of(R"({"domain": 2, "binary": {"r": [[1]]}})") == K::kMalformed);
  CHECK(kind_of("not json") == K::kMalformed);
}

TEST_CASE("structure round trips") {
  const std::vector<StructureModel> models = {
      build_successor_model("abba", Alphabet("abc")),
      build_precedence_model("abba", Alphabet("abc")),
      build_tree_model(thirteen_node_tree(), Alphabet("ab")),
      build_successor_model("", Alphabet("ab")),
  };
  for (const auto& m : models) {
    CHECK(load_structure(dump_structure(m)) == m);
    CHECK(load_structure(dump_structure(m, -1)) == m);
  }
}
