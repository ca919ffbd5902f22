#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "fotensor/error.hpp"
#include "fotensor/tensor_expr.hpp"

namespace fotensor {
namespace {

using EK = TensorExpr::Kind;

// Dense factor over at most two summation variables, row-major.
struct Factor {
  std::vector<Variable> vars;
  std::vector<Scalar> data;
};

class Evaluator {
 public:
  Evaluator(const EmbeddedModel& m, const EvalOptions& options) : m_(m), options_(options) {}

  void bind(const Variable& v, Position i) { env_.emplace_back(v, i); }

  Scalar eval(const TensorExpr& e) {
    switch (e.kind()) {
      case EK::kRel:
      case EK::kEq: {
        const Tensor& t = leaf_tensor(e);
        const auto& args = e.arguments();
        // Contraction with one-hot arguments selects a single entry.
        return checked(args.size() == 1 ? t(lookup(args[0])) : t(lookup(args[0]), lookup(args[1])),
                       e);
      }
      case EK::kComplement:
        return checked(1 - eval(e.operand()), e);
      case EK::kProduct: {
        Scalar value = 1;
        for (const auto& child : e.operands()) value *= eval(child);
        return checked(value, e);
      }
      case EK::kMin1Sum: {
        Scalar sum = 0;
        for (const auto& child : e.operands()) sum += eval(child);
#ifdef FOTENSOR_MUTANT_UNCLAMPED_DISJUNCTION
        // Deliberately broken build used to show the differential check detects it.
        return checked(sum, e);
#else
        return checked(min1(sum), e);
#endif
      }
      case EK::kExistsSum:
      case EK::kForallDual: {
        const bool exists = e.kind() == EK::kExistsSum;
        Scalar sum = 0;
        ++depth_;
        for (Position i = 1; i <= m_.basis_size; ++i) {
          env_.emplace_back(e.variable(), i);
          const Scalar body = eval(e.operand());
          env_.pop_back();
          sum += exists ? body : 1 - body;
        }
        --depth_;
        const Scalar value = exists ? min1(sum) : 1 - min1(sum);
        record(e, exists ? "sum" : "sum(1-body)", sum, value);
        return checked(value, e);
      }
      case EK::kExistsContract:
      case EK::kForallContract: {
        const Scalar sum = contract(e);
        const Scalar value = e.kind() == EK::kExistsContract ? min1(sum) : 1 - min1(sum);
        record(e, "contraction", sum, value);
        return checked(value, e);
      }
    }
    throw std::logic_error("unhandled tensor expression kind");
  }

 private:
  Position lookup(const Variable& v) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
      if (it->first == v) return it->second;
    }
    throw UnboundVariableError(v);
  }

  Scalar checked(Scalar value, const TensorExpr& e) const {
    if (options_.check_closure && value != 0 && value != 1) {
      throw ClosureViolation("value " + std::to_string(value) + " outside {0,1} at node\n" +
                             e.dump());
    }
    return value;
  }

  const Tensor& leaf_tensor(const TensorExpr& e) {
    auto it = leaves_.find(e.id());
    if (it != leaves_.end()) return it->second;
    Tensor t = e.kind() == EK::kEq
                   ? m_.identity
                   : m_.relation(e.predicate(), static_cast<int>(e.arguments().size()));
    if (e.transposed()) t = transpose_encode(t);
    if (e.negated()) t = negate_relation(t);
    return leaves_.emplace(e.id(), std::move(t)).first->second;
  }

  void record(const TensorExpr& e, const char* what, Scalar sum, Scalar value) {
    if (!options_.trace) return;
    std::string line(static_cast<std::size_t>(depth_) * 2, ' ');
    if (e.is_contraction()) {
      line += e.kind() == EK::kExistsContract ? "exists-contract [" : "forall-contract [";
      for (std::size_t i = 0; i < e.block().size(); ++i) line += (i ? " " : "") + e.block()[i];
      line += ']';
    } else {
      line += e.kind() == EK::kExistsSum ? "exists-sum " : "forall-dual ";
      line += e.variable();
    }
    line += " {";
    for (std::size_t i = 0; i < env_.size(); ++i) {
      line += (i ? " " : "") + env_[i].first + "=" + std::to_string(env_[i].second);
    }
    line += "}: " + std::string(what) + "=" + std::to_string(sum) + " -> " + std::to_string(value);
    options_.trace->push_back(std::move(line));
  }

  // Σ over the block of the product of the factors, computed by summing the
  // block variables out one at a time. Arguments outside the block are bound
  // by the environment and select a row or column of their tensor.
  Scalar contract(const TensorExpr& e) {
    const auto& block = e.block();
    auto in_block = [&](const Variable& v) {
      return std::find(block.begin(), block.end(), v) != block.end();
    };
    const std::size_t n = m_.basis_size;

    std::vector<Factor> factors;
    for (const auto& leaf : e.operands()) {
      const Tensor& t = leaf_tensor(leaf);
      const auto& args = leaf.arguments();
      Factor f;
      if (args.size() == 1) {
        if (in_block(args[0])) {
          f.vars = {args[0]};
          f.data.assign(t.data().begin(), t.data().end());
        } else {
          f.data = {t(lookup(args[0]))};
        }
      } else {
        const bool row = in_block(args[0]);
        const bool col = in_block(args[1]);
        if (row && col && args[0] == args[1]) {
          f.vars = {args[0]};
          for (Position i = 1; i <= n; ++i) f.data.push_back(t(i, i));
        } else if (row && col) {
          f.vars = args;
          f.data.assign(t.data().begin(), t.data().end());
        } else if (row) {
          // R e_j: column j.
          const Position j = lookup(args[1]);
          f.vars = {args[0]};
          for (Position i = 1; i <= n; ++i) f.data.push_back(t(i, j));
        } else if (col) {
          // e_iᵀ R: row i.
          const Position i = lookup(args[0]);
          f.vars = {args[1]};
          for (Position j = 1; j <= n; ++j) f.data.push_back(t(i, j));
        } else {
          f.data = {t(lookup(args[0]), lookup(args[1]))};
        }
      }
      factors.push_back(std::move(f));
    }

    for (const auto& v : block) {
      std::vector<Factor> touching;
      std::vector<Factor> rest;
      for (auto& f : factors) {
        const bool uses = std::find(f.vars.begin(), f.vars.end(), v) != f.vars.end();
        (uses ? touching : rest).push_back(std::move(f));
      }
      rest.push_back(sum_out(v, touching, n));
      factors = std::move(rest);
    }

    Scalar total = 1;
    for (const auto& f : factors) {
      if (!f.vars.empty()) throw std::logic_error("contraction left an open factor");
      total *= f.data[0];
    }
    return total;
  }

  // result[s] = Σ_v Π_f f[s, v] where s ranges over the other variables of
  // the touching factors. With two matrices sharing v this is a matrix
  // product; with no factors it is Σ_v 1 = N.
  static Factor sum_out(const Variable& v, const std::vector<Factor>& touching, std::size_t n) {
    Factor result;
    for (const auto& f : touching) {
      for (const auto& u : f.vars) {
        if (u != v && std::find(result.vars.begin(), result.vars.end(), u) == result.vars.end()) {
          result.vars.push_back(u);
        }
      }
    }
    if (result.vars.size() > 2) throw std::logic_error("contraction plan exceeds matrix width");
    std::vector<Variable> all = result.vars;
    all.push_back(v);

    std::size_t cells = 1;
    for (std::size_t k = 0; k < result.vars.size(); ++k) cells *= n;
    result.data.assign(cells, 0);

    // Position of each factor axis within `all`.
    std::vector<std::vector<std::size_t>> axes;
    for (const auto& f : touching) {
      std::vector<std::size_t> a;
      for (const auto& u : f.vars) a.push_back(static_cast<std::size_t>(std::find(all.begin(), all.end(), u) - all.begin()));
      axes.push_back(std::move(a));
    }

    std::vector<std::size_t> idx(all.size(), 0);
    std::size_t total = cells * n;
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rem = flat;
      for (std::size_t k = all.size(); k-- > 0;) {
        idx[k] = rem % n;
        rem /= n;
      }
      Scalar term = 1;
      for (std::size_t f = 0; f < touching.size() && term != 0; ++f) {
        std::size_t off = 0;
        for (std::size_t axis : axes[f]) off = off * n + idx[axis];
        term *= touching[f].data[off];
      }
      result.data[flat / n] += term;
    }
    return result;
  }

  const EmbeddedModel& m_;
  const EvalOptions& options_;
  std::vector<std::pair<Variable, Position>> env_;
  std::unordered_map<const void*, Tensor> leaves_;
  int depth_ = 0;
};

}  // namespace

Scalar eval_tensor(const TensorExpr& e, const EmbeddedModel& m, const Assignment& a,
                   const EvalOptions& options) {
  a.check_within(m.basis_size);
  for (const auto& v : free_variables(e)) {
    if (!a.lookup(v)) throw UnboundVariableError(v);
  }
  Evaluator evaluator(m, options);
  for (const auto& [v, i] : a.bindings()) evaluator.bind(v, i);
  return evaluator.eval(e);
}

}  // namespace fotensor
