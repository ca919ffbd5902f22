#pragma once

#include <functional>
#include <vector>

#include "fotensor/formula.hpp"
#include "fotensor/structure.hpp"

namespace fotensor {

/// Textbook Tarskian model checking by structural recursion over the
/// structure's relations. Shares no evaluation code with the tensor path.
///
/// Throws UnboundVariableError, UnknownPredicateError, or ArityError.
bool tarski_eval(const Formula& f, const StructureModel& m, const Assignment& a = {});

/// All domain_size^|vars| assignments of vars, lexicographic with the first
/// variable most significant.
std::vector<Assignment> enumerate_assignments(const std::vector<Variable>& vars,
                                              std::size_t domain_size);

/// Streaming form of enumerate_assignments.
void for_each_assignment(const std::vector<Variable>& vars, std::size_t domain_size,
                         const std::function<void(const Assignment&)>& visit);

}  // namespace fotensor
