#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fotensor/formula.hpp"

namespace fotensor {

/// Ordered set of single-character symbols.
class Alphabet {
 public:
  /// Throws SymbolError on an empty or duplicated symbol list.
  explicit Alphabet(std::string_view symbols);

  const std::string& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool contains(char c) const { return symbols_.find(c) != std::string::npos; }
  /// Throws SymbolError naming the first character of word outside the alphabet.
  void check_word(std::string_view word) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

/// 1-based domain position.
using Position = std::size_t;
using PositionPair = std::pair<Position, Position>;

/// Finite relational structure: a domain {1..N} with named unary and binary
/// relations stored densely as 0/1 vectors and row-major N×N matrices.
/// Every public index is 1-based.
class StructureModel {
 public:
  explicit StructureModel(std::size_t domain_size = 0) : domain_size_(domain_size) {}

  std::size_t domain_size() const { return domain_size_; }

  /// Adds a unary relation from its member positions. Throws StructureError
  /// on an out-of-range or repeated position or a name already in use.
  void add_unary(const std::string& name, std::span<const Position> members);
  void add_binary(const std::string& name, std::span<const PositionPair> pairs);
  /// Dense forms; every entry must be 0 or 1.
  void add_unary_bits(const std::string& name, std::vector<std::uint8_t> bits);
  void add_binary_bits(const std::string& name, std::vector<std::uint8_t> row_major);

  bool has_unary(const std::string& name) const { return unary_.count(name) != 0; }
  bool has_binary(const std::string& name) const { return binary_.count(name) != 0; }

  bool unary_holds(const std::string& name, Position i) const;
  bool binary_holds(const std::string& name, Position i, Position j) const;

  std::vector<Position> unary_members(const std::string& name) const;
  /// Pairs in row-major order.
  std::vector<PositionPair> binary_pairs(const std::string& name) const;

  std::span<const std::uint8_t> unary_bits(const std::string& name) const;
  std::span<const std::uint8_t> binary_bits(const std::string& name) const;

  std::vector<std::string> unary_names() const;
  std::vector<std::string> binary_names() const;

  /// Signature of the structure as predicate symbols.
  std::vector<PredicateSymbol> signature() const;

  friend bool operator==(const StructureModel&, const StructureModel&) = default;

 private:
  void claim_name(const std::string& name) const;
  void check_position(Position i) const;

  std::size_t domain_size_;
  std::map<std::string, std::vector<std::uint8_t>> unary_;
  std::map<std::string, std::vector<std::uint8_t>> binary_;
};

/// Variable bindings to 1-based domain positions.
class Assignment {
 public:
  Assignment() = default;

  Assignment& bind(const Variable& v, Position i);
  std::optional<Position> lookup(const Variable& v) const;
  const std::map<Variable, Position>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }

  /// Throws StructureError if some binding lies outside {1..domain_size}.
  void check_within(std::size_t domain_size) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<Variable, Position> bindings_;
};

/// Successor string model: labels per symbol and succ = {(i, i+1)}.
StructureModel build_successor_model(std::string_view word, const Alphabet& alphabet);

/// Precedence string model: labels per symbol and prec = {(i, j) | i < j}.
StructureModel build_precedence_model(std::string_view word, const Alphabet& alphabet);

}  // namespace fotensor
