#pragma once

#include <string>
#include <string_view>

#include "fotensor/structure.hpp"

namespace fotensor {

/// Reads a structure document:
///
///   { "domain": 4,
///     "unary":  { "a": [1,4], "b": [2,3], "c": [] },
///     "binary": { "succ": [[1,2],[2,3],[3,4]] } }
///
/// Indices are 1-based and may appear in any order. A relation may instead
/// be given densely as {"bits": [...]} (unary) or {"matrix": [[...], ...]}
/// (binary) with 0/1 entries.
///
/// Throws StructureError (malformed, out of range, duplicate, non-0/1 entry).
StructureModel load_structure(std::string_view text);

/// Writes the index-list form with sorted keys and sorted index lists.
std::string dump_structure(const StructureModel& model, int indent = 2);

}  // namespace fotensor
