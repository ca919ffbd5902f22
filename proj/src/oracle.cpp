#include "fotensor/oracle.hpp"

#include <map>
#include <optional>

#include "fotensor/error.hpp"

namespace fotensor {
namespace {

using K = Formula::Kind;

class Checker {
 public:
  explicit Checker(const StructureModel& m) : m_(m) {}

  bool holds(const Formula& f, std::map<Variable, Position>& env) const {
    switch (f.kind()) {
      case K::kAtom: {
        const auto& t = f.terms();
        if (t.size() == 1) {
          if (!m_.has_unary(f.predicate())) missing(f);
          return m_.unary_holds(f.predicate(), value(env, t[0]));
        }
        if (!m_.has_binary(f.predicate())) missing(f);
        return m_.binary_holds(f.predicate(), value(env, t[0]), value(env, t[1]));
      }
      case K::kEqual:
        return value(env, f.terms()[0]) == value(env, f.terms()[1]);
      case K::kNot:
        return !holds(f.operand(), env);
      case K::kAnd:
        for (const auto& g : f.operands()) {
          if (!holds(g, env)) return false;
        }
        return true;
      case K::kOr:
        for (const auto& g : f.operands()) {
          if (holds(g, env)) return true;
        }
        return false;
      case K::kImplies:
        return !holds(f.operand(0), env) || holds(f.operand(1), env);
      case K::kExists:
      case K::kForall: {
        const bool exists = f.kind() == K::kExists;
        const auto saved = env.find(f.variable()) == env.end()
                               ? std::optional<Position>{}
                               : std::optional<Position>{env[f.variable()]};
        bool result = !exists;
        for (Position i = 1; i <= m_.domain_size(); ++i) {
          env[f.variable()] = i;
          if (holds(f.operand(), env) == exists) {
            result = exists;
            break;
          }
        }
        if (saved) {
          env[f.variable()] = *saved;
        } else {
          env.erase(f.variable());
        }
        return result;
      }
    }
    throw std::logic_error("unhandled formula kind");
  }

 private:
  static Position value(const std::map<Variable, Position>& env, const Variable& v) {
    auto it = env.find(v);
    if (it == env.end()) throw UnboundVariableError(v);
    return it->second;
  }

  [[noreturn]] void missing(const Formula& f) const {
    const std::string& name = f.predicate();
    const bool other_arity = f.terms().size() == 1 ? m_.has_binary(name) : m_.has_unary(name);
    if (other_arity) {
      throw ArityError("predicate '" + name + "' has a different arity in the structure");
    }
    throw UnknownPredicateError(name);
  }

  const StructureModel& m_;
};

}  // namespace

bool tarski_eval(const Formula& f, const StructureModel& m, const Assignment& a) {
  a.check_within(m.domain_size());
  std::map<Variable, Position> env = a.bindings();
  return Checker(m).holds(f, env);
}

void for_each_assignment(const std::vector<Variable>& vars, std::size_t domain_size,
                         const std::function<void(const Assignment&)>& visit) {
  if (domain_size == 0 && !vars.empty()) return;
  std::vector<Position> digits(vars.size(), 1);
  while (true) {
    Assignment a;
    for (std::size_t k = 0; k < vars.size(); ++k) a.bind(vars[k], digits[k]);
    visit(a);
    // Odometer increment, last variable fastest.
    std::size_t k = vars.size();
    while (k > 0 && digits[k - 1] == domain_size) digits[--k] = 1;
    if (k == 0) return;
    ++digits[k - 1];
  }
}

std::vector<Assignment> enumerate_assignments(const std::vector<Variable>& vars,
                                              std::size_t domain_size) {
  std::vector<Assignment> out;
  for_each_assignment(vars, domain_size, [&](const Assignment& a) { out.push_back(a); });
  return out;
}

}  // namespace fotensor
