#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fotensor/formula.hpp"
#include "fotensor/languages.hpp"
#include "fotensor/structure.hpp"
#include "fotensor/tensor.hpp"

namespace fotensor {

/// Random formulas for differential testing. Node choice is weighted 40%
/// connective, 30% atom, 20% quantifier, 10% equality, truncated at the
/// depth limit; variables come from {x, y, z} and may be re-bound.
class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint64_t seed) : rng_(seed) {}

  /// A formula whose free variables are among `scope` (closed when scope is
  /// empty), with nesting depth at most max_depth.
  Formula formula(const std::vector<std::string>& labels, const std::string& order_relation,
                  const std::vector<Variable>& scope = {}, int max_depth = 3);

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

 private:
  Formula node(int depth, std::vector<Variable>& scope);
  Formula leaf(std::vector<Variable>& scope, bool equality);

  std::mt19937_64 rng_;
  std::vector<std::string> labels_;
  std::string order_;
  int max_depth_ = 3;
};

/// One randomly drawn differential test case.
struct RandomCase {
  std::uint64_t seed;
  ModelKind model_kind;
  Alphabet alphabet;
  std::string word;
  Formula formula;
};

/// Draws a case from its seed: an alphabet of 1–3 letters, a successor or
/// precedence model, a word of length 0–5 and a closed formula of depth ≤ 3.
RandomCase random_case(std::uint64_t seed);

struct CaseOutcome {
  RandomCase random_case;
  bool oracle = false;
  /// Plain and optimized tensor values, or -1 when evaluation threw.
  Scalar tensor = -1;
  Scalar optimized = -1;
  std::string error;

  bool agrees() const {
    return error.empty() && tensor == (oracle ? 1 : 0) && optimized == tensor;
  }
};

CaseOutcome run_case(const RandomCase& c);

struct CheckReport {
  std::size_t total = 0;
  std::size_t agreed = 0;
  std::vector<CaseOutcome> mismatches;

  bool ok() const { return agreed == total; }
  std::string to_text() const;
  std::string to_json() const;
};

/// Runs `count` cases with seeds seed, seed+1, ...; a mismatching case is
/// reproduced on its own by running one case from its printed seed.
CheckReport run_differential_check(std::size_t count, std::uint64_t seed);

}  // namespace fotensor
