#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fotensor/structure.hpp"

namespace fotensor {

/// Node address in a Gorn tree domain; the empty address is the root.
class GornAddress {
 public:
  GornAddress() = default;
  explicit GornAddress(std::vector<unsigned> digits) : digits_(std::move(digits)) {}

  /// Accepts "" or "ε" for the root, a digit string such as "110", or a
  /// dot-separated form ("1.10.2") for child indices above 9.
  static GornAddress parse(std::string_view text);

  const std::vector<unsigned>& digits() const { return digits_; }
  std::size_t length() const { return digits_.size(); }
  bool is_root() const { return digits_.empty(); }

  GornAddress parent() const;
  GornAddress child(unsigned i) const;

  /// "ε" for the root.
  std::string to_string() const;

  /// Length first, then digits lexicographically.
  friend std::strong_ordering operator<=>(const GornAddress& a, const GornAddress& b);
  friend bool operator==(const GornAddress&, const GornAddress&) = default;

 private:
  std::vector<unsigned> digits_;
};

struct GornViolation {
  enum class Kind { kMissingPrefix, kMissingLeftSibling };

  GornAddress address;
  Kind kind;
  GornAddress required;

  friend bool operator==(const GornViolation&, const GornViolation&) = default;
};

struct GornValidation {
  std::vector<GornViolation> violations;

  bool valid() const { return violations.empty(); }
  std::string describe() const;
};

/// Checks prefix closure (every proper prefix is present) and left-sibling
/// closure (αi with i > 0 needs α(i-1)). Reports every missing address.
GornValidation validate_gorn_domain(const std::vector<GornAddress>& addresses);

struct TreeNode {
  GornAddress address;
  char label;
};

/// Two-dimensional tree model with binary relations `dom` (parent, child)
/// and `leftof` (αi, α(i+1)) plus one unary relation per alphabet symbol.
/// Node i of the domain is the i-th address in length-then-digits order.
/// Throws StructureError on duplicate addresses or an invalid domain and
/// SymbolError on a label outside the alphabet.
StructureModel build_tree_model(const std::vector<TreeNode>& nodes, const Alphabet& alphabet);

/// The addresses of a tree model's domain in index order.
std::vector<GornAddress> ordered_addresses(const std::vector<TreeNode>& nodes);

/// A word as a unary-branching tree: ε, 0, 00, ... labelled left to right.
std::vector<TreeNode> chain_tree(std::string_view word);

}  // namespace fotensor
