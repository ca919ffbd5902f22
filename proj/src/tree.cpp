#include "fotensor/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "fotensor/error.hpp"

namespace fotensor {

GornAddress GornAddress::parse(std::string_view text) {
  if (text.empty() || text == "ε" || text == "e") return {};
  std::vector<unsigned> digits;
  const bool dotted = text.find('.') != std::string_view::npos;
  unsigned current = 0;
  bool have_digit = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (dotted) {
        current = current * 10 + static_cast<unsigned>(c - '0');
        have_digit = true;
      } else {
        digits.push_back(static_cast<unsigned>(c - '0'));
      }
    } else if (c == '.' && dotted && have_digit) {
      digits.push_back(current);
      current = 0;
      have_digit = false;
    } else {
      throw StructureError(StructureError::Kind::kMalformed,
                           "malformed Gorn address '" + std::string(text) + "'");
    }
  }
  if (dotted) {
    if (!have_digit) {
      throw StructureError(StructureError::Kind::kMalformed,
                           "malformed Gorn address '" + std::string(text) + "'");
    }
    digits.push_back(current);
  }
  return GornAddress(std::move(digits));
}

GornAddress GornAddress::parent() const {
  if (is_root()) throw std::logic_error("the root has no parent");
  return GornAddress({digits_.begin(), digits_.end() - 1});
}

GornAddress GornAddress::child(unsigned i) const {
  auto d = digits_;
  d.push_back(i);
  return GornAddress(std::move(d));
}

std::string GornAddress::to_string() const {
  if (is_root()) return "ε";
  const bool wide = std::any_of(digits_.begin(), digits_.end(), [](unsigned d) { return d > 9; });
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (wide && i) out += '.';
    out += std::to_string(digits_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const GornAddress& a, const GornAddress& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.digits_ <=> b.digits_;
}

std::string GornValidation::describe() const {
  if (valid()) return "valid Gorn tree domain";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.address.to_string();
    out += v.kind == GornViolation::Kind::kMissingPrefix ? " requires prefix "
                                                        : " requires left sibling ";
    out += v.required.to_string();
  }
  return out;
}

GornValidation validate_gorn_domain(const std::vector<GornAddress>& addresses) {
  const std::set<GornAddress> present(addresses.begin(), addresses.end());
  GornValidation result;
  for (const auto& a : present) {
    // Proper prefixes, longest first.
    GornAddress prefix = a;
    while (!prefix.is_root()) {
      prefix = prefix.parent();
      if (!present.count(prefix)) {
        result.violations.push_back({a, GornViolation::Kind::kMissingPrefix, prefix});
      }
    }
    if (!a.is_root() && a.digits().back() > 0) {
      GornAddress sibling = a.parent().child(a.digits().back() - 1);
      if (!present.count(sibling)) {
        result.violations.push_back({a, GornViolation::Kind::kMissingLeftSibling, sibling});
      }
    }
  }
  return result;
}

std::vector<GornAddress> ordered_addresses(const std::vector<TreeNode>& nodes) {
  std::vector<GornAddress> out;
  out.reserve(nodes.size());
  for (const auto& n : nodes) out.push_back(n.address);
  std::sort(out.begin(), out.end());
  return out;
}

StructureModel build_tree_model(const std::vector<TreeNode>& nodes, const Alphabet& alphabet) {
  std::map<GornAddress, char> labels;
  for (const auto& n : nodes) {
    if (!labels.emplace(n.address, n.label).second) {
      throw StructureError(StructureError::Kind::kDuplicate,
                           "duplicate tree address " + n.address.to_string());
    }
    if (!alphabet.contains(n.label)) {
      throw SymbolError(std::string("label '") + n.label + "' of node " +
                        n.address.to_string() + " is not in alphabet {" + alphabet.symbols() +
                        "}");
    }
  }
  const std::vector<GornAddress> order = ordered_addresses(nodes);
  if (auto check = validate_gorn_domain(order); !check.valid()) {
    throw StructureError(StructureError::Kind::kInvalidDomain,
                         "invalid Gorn tree domain: " + check.describe());
  }

  std::map<GornAddress, Position> index;
  for (std::size_t i = 0; i < order.size(); ++i) index.emplace(order[i], i + 1);

  StructureModel m(order.size());
  for (char symbol : alphabet.symbols()) {
    std::vector<Position> members;
    for (const auto& [address, label] : labels) {
      if (label == symbol) members.push_back(index.at(address));
    }
    std::sort(members.begin(), members.end());
    m.add_unary(std::string(1, symbol), members);
  }

  std::vector<PositionPair> dominance;
  std::vector<PositionPair> left_of;
  for (const auto& a : order) {
    if (a.is_root()) continue;
    dominance.emplace_back(index.at(a.parent()), index.at(a));
    const GornAddress right = a.parent().child(a.digits().back() + 1);
    if (auto it = index.find(right); it != index.end()) left_of.emplace_back(index.at(a), it->second);
  }
  m.add_binary(std::string(kDominance), dominance);
  m.add_binary(std::string(kLeftOf), left_of);
  return m;
}

std::vector<TreeNode> chain_tree(std::string_view word) {
  std::vector<TreeNode> out;
  std::vector<unsigned> digits;
  for (char c : word) {
    out.push_back({GornAddress(digits), c});
    digits.push_back(0);
  }
  return out;
}

}  // namespace fotensor
