#include "fotensor/structure.hpp"

#include "fotensor/error.hpp"

namespace fotensor {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) throw SymbolError("alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_.find(symbols_[i], i + 1) != std::string::npos) {
      throw SymbolError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    }
  }
}

void Alphabet::check_word(std::string_view word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!contains(word[i])) {
      throw SymbolError(std::string("symbol '") + word[i] + "' at position " +
                        std::to_string(i + 1) + " is not in alphabet {" + symbols_ + "}");
    }
  }
}

void StructureModel::claim_name(const std::string& name) const {
  if (name.empty()) throw StructureError(StructureError::Kind::kMalformed, "empty relation name");
  if (has_unary(name) || has_binary(name)) {
    throw StructureError(StructureError::Kind::kDuplicate, "relation '" + name + "' defined twice");
  }
}

void StructureModel::check_position(Position i) const {
  if (i < 1 || i > domain_size_) {
    throw StructureError(StructureError::Kind::kOutOfRange,
                         "index " + std::to_string(i) + " outside domain {1.." +
                             std::to_string(domain_size_) + "}");
  }
}

void StructureModel::add_unary(const std::string& name, std::span<const Position> members) {
  claim_name(name);
  std::vector<std::uint8_t> bits(domain_size_, 0);
  for (Position i : members) {
    check_position(i);
    if (bits[i - 1]) {
      throw StructureError(StructureError::Kind::kDuplicate,
                           "index " + std::to_string(i) + " repeated in '" + name + "'");
    }
    bits[i - 1] = 1;
  }
  unary_.emplace(name, std::move(bits));
}

void StructureModel::add_binary(const std::string& name, std::span<const PositionPair> pairs) {
  claim_name(name);
  std::vector<std::uint8_t> bits(domain_size_ * domain_size_, 0);
  for (auto [i, j] : pairs) {
    check_position(i);
    check_position(j);
    auto& cell = bits[(i - 1) * domain_size_ + (j - 1)];
    if (cell) {
      throw StructureError(StructureError::Kind::kDuplicate,
                           "pair (" + std::to_string(i) + "," + std::to_string(j) +
                               ") repeated in '" + name + "'");
    }
    cell = 1;
  }
  binary_.emplace(name, std::move(bits));
}

namespace {

void check_bits(const std::string& name, const std::vector<std::uint8_t>& bits,
                std::size_t expected) {
  if (bits.size() != expected) {
    throw StructureError(StructureError::Kind::kMalformed,
                         "relation '" + name + "' has " + std::to_string(bits.size()) +
                             " entries, expected " + std::to_string(expected));
  }
  for (auto b : bits) {
    if (b > 1) {
      throw StructureError(StructureError::Kind::kNonBinaryEntry,
                           "relation '" + name + "' has entry " + std::to_string(b) +
                               "; entries must be 0 or 1");
    }
  }
}

}  // namespace

void StructureModel::add_unary_bits(const std::string& name, std::vector<std::uint8_t> bits) {
  claim_name(name);
  check_bits(name, bits, domain_size_);
  unary_.emplace(name, std::move(bits));
}

void StructureModel::add_binary_bits(const std::string& name,
                                     std::vector<std::uint8_t> row_major) {
  claim_name(name);
  check_bits(name, row_major, domain_size_ * domain_size_);
  binary_.emplace(name, std::move(row_major));
}

bool StructureModel::unary_holds(const std::string& name, Position i) const {
  check_position(i);
  return unary_bits(name)[i - 1] != 0;
}

bool StructureModel::binary_holds(const std::string& name, Position i, Position j) const {
  check_position(i);
  check_position(j);
  return binary_bits(name)[(i - 1) * domain_size_ + (j - 1)] != 0;
}

std::vector<Position> StructureModel::unary_members(const std::string& name) const {
  std::vector<Position> out;
  auto bits = unary_bits(name);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out.push_back(i + 1);
  }
  return out;
}

std::vector<PositionPair> StructureModel::binary_pairs(const std::string& name) const {
  std::vector<PositionPair> out;
  auto bits = binary_bits(name);
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k]) out.emplace_back(k / domain_size_ + 1, k % domain_size_ + 1);
  }
  return out;
}

std::span<const std::uint8_t> StructureModel::unary_bits(const std::string& name) const {
  auto it = unary_.find(name);
  if (it == unary_.end()) throw UnknownPredicateError(name);
  return it->second;
}

std::span<const std::uint8_t> StructureModel::binary_bits(const std::string& name) const {
  auto it = binary_.find(name);
  if (it == binary_.end()) throw UnknownPredicateError(name);
  return it->second;
}

std::vector<std::string> StructureModel::unary_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : unary_) out.push_back(name);
  return out;
}

std::vector<std::string> StructureModel::binary_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : binary_) out.push_back(name);
  return out;
}

std::vector<PredicateSymbol> StructureModel::signature() const {
  std::vector<PredicateSymbol> out;
  for (const auto& [name, _] : unary_) out.push_back({name, 1});
  for (const auto& [name, _] : binary_) out.push_back({name, 2});
  return out;
}

Assignment& Assignment::bind(const Variable& v, Position i) {
  bindings_[v] = i;
  return *this;
}

std::optional<Position> Assignment::lookup(const Variable& v) const {
  auto it = bindings_.find(v);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

void Assignment::check_within(std::size_t domain_size) const {
  for (const auto& [v, i] : bindings_) {
    if (i < 1 || i > domain_size) {
      throw StructureError(StructureError::Kind::kOutOfRange,
                           "variable '" + v + "' bound to " + std::to_string(i) +
                               " outside domain {1.." + std::to_string(domain_size) + "}");
    }
  }
}

namespace {

StructureModel labelled_string(std::string_view word, const Alphabet& alphabet) {
  alphabet.check_word(word);
  StructureModel m(word.size());
  for (char symbol : alphabet.symbols()) {
    std::vector<Position> members;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] == symbol) members.push_back(i + 1);
    }
    m.add_unary(std::string(1, symbol), members);
  }
  return m;
}

}  // namespace

StructureModel build_successor_model(std::string_view word, const Alphabet& alphabet) {
  StructureModel m = labelled_string(word, alphabet);
  std::vector<PositionPair> pairs;
  for (Position i = 1; i < word.size(); ++i) pairs.emplace_back(i, i + 1);
  m.add_binary(std::string(kSuccessor), pairs);
  return m;
}

StructureModel build_precedence_model(std::string_view word, const Alphabet& alphabet) {
  StructureModel m = labelled_string(word, alphabet);
  std::vector<PositionPair> pairs;
  for (Position i = 1; i <= word.size(); ++i) {
    for (Position j = i + 1; j <= word.size(); ++j) pairs.emplace_back(i, j);
  }
  m.add_binary(std::string(kPrecedence), pairs);
  return m;
}

}  // namespace fotensor
