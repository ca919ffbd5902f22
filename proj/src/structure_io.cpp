#include "fotensor/structure_io.hpp"

#include <json.hpp>

#include "fotensor/error.hpp"

namespace fotensor {
namespace {

using json = nlohmann::json;

[[noreturn]] void malformed(const std::string& message) {
  throw StructureError(StructureError::Kind::kMalformed, "malformed structure document: " + message);
}

Position read_index(const json& value, std::size_t domain, const std::string& where) {
  if (!value.is_number_integer()) malformed(where + " must contain integer indices");
  const auto raw = value.get<long long>();
  if (raw < 1 || static_cast<unsigned long long>(raw) > domain) {
    throw StructureError(StructureError::Kind::kOutOfRange,
                         where + ": index " + std::to_string(raw) + " outside domain {1.." +
                             std::to_string(domain) + "}");
  }
  return static_cast<Position>(raw);
}

std::uint8_t read_bit(const json& value, const std::string& where) {
  if (!value.is_number_integer()) malformed(where + " must contain 0/1 integers");
  const auto raw = value.get<long long>();
  if (raw != 0 && raw != 1) {
    throw StructureError(StructureError::Kind::kNonBinaryEntry,
                         where + ": entry " + std::to_string(raw) + " is not 0 or 1");
  }
  return static_cast<std::uint8_t>(raw);
}

void load_unary(StructureModel& m, const std::string& name, const json& value) {
  const std::string where = "unary '" + name + "'";
  const std::size_t n = m.domain_size();
  if (value.is_object()) {
    if (!value.contains("bits") || !value["bits"].is_array() || value.size() != 1) {
      malformed(where + " object form needs exactly a \"bits\" array");
    }
    std::vector<std::uint8_t> bits;
    for (const auto& b : value["bits"]) bits.push_back(read_bit(b, where));
    m.add_unary_bits(name, std::move(bits));
    return;
  }
  if (!value.is_array()) malformed(where + " must be an index list");
  std::vector<Position> members;
  for (const auto& v : value) members.push_back(read_index(v, n, where));
  m.add_unary(name, members);
}

void load_binary(StructureModel& m, const std::string& name, const json& value) {
  const std::string where = "binary '" + name + "'";
  const std::size_t n = m.domain_size();
  if (value.is_object()) {
    if (!value.contains("matrix") || !value["matrix"].is_array() || value.size() != 1) {
      malformed(where + " object form needs exactly a \"matrix\" array");
    }
    const auto& rows = value["matrix"];
    if (rows.size() != n) malformed(where + " matrix must have " + std::to_string(n) + " rows");
    std::vector<std::uint8_t> bits;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) {
        malformed(where + " matrix rows must have " + std::to_string(n) + " entries");
      }
      for (const auto& b : row) bits.push_back(read_bit(b, where));
    }
    m.add_binary_bits(name, std::move(bits));
    return;
  }
  if (!value.is_array()) malformed(where + " must be a list of pairs");
  std::vector<PositionPair> pairs;
  for (const auto& p : value) {
    if (!p.is_array() || p.size() != 2) malformed(where + " entries must be [i, j] pairs");
    pairs.emplace_back(read_index(p[0], n, where), read_index(p[1], n, where));
  }
  m.add_binary(name, pairs);
}

}  // namespace

StructureModel load_structure(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "domain" && key != "unary" && key != "binary") malformed("unknown key \"" + key + "\"");
  }
  if (!doc.contains("domain") || !doc["domain"].is_number_integer() || doc["domain"].get<long long>() < 0) {
    malformed("\"domain\" must be a nonnegative integer");
  }
  StructureModel m(doc["domain"].get<std::size_t>());
  for (const char* section : {"unary", "binary"}) {
    if (!doc.contains(section)) continue;
    if (!doc[section].is_object()) malformed(std::string("\"") + section + "\" must be an object");
  }
  if (doc.contains("unary")) {
    for (const auto& [name, value] : doc["unary"].items()) load_unary(m, name, value);
  }
  if (doc.contains("binary")) {
    for (const auto& [name, value] : doc["binary"].items()) load_binary(m, name, value);
  }
  return m;
}

std::string dump_structure(const StructureModel& model, int indent) {
  json doc;
  doc["domain"] = model.domain_size();
  doc["unary"] = json::object();
  doc["binary"] = json::object();
  for (const auto& name : model.unary_names()) doc["unary"][name] = model.unary_members(name);
  for (const auto& name : model.binary_names()) {
    json pairs = json::array();
    for (auto [i, j] : model.binary_pairs(name)) pairs.push_back({i, j});
    doc["binary"][name] = std::move(pairs);
  }
  return doc.dump(indent);
}

}  // namespace fotensor
