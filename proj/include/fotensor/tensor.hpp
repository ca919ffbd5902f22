#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fotensor/structure.hpp"

namespace fotensor {

/// Exact arithmetic: every value is a bounded nonnegative integer.
using Scalar = std::int64_t;

/// Dense order-1 or order-2 tensor over R^N, entries addressed 1-based to
/// match the basis e_1..e_N.
class Tensor {
 public:
  static Tensor zeros(int order, std::size_t n);
  /// The all-ones tensor 1∘…∘1.
  static Tensor ones(int order, std::size_t n);
  static Tensor identity(std::size_t n);
  static Tensor one_hot(std::size_t n, Position i);

  int order() const { return order_; }
  std::size_t dimension() const { return n_; }

  Scalar operator()(Position i) const { return data_[offset(i)]; }
  Scalar& operator()(Position i) { return data_[offset(i)]; }
  Scalar operator()(Position i, Position j) const { return data_[offset(i, j)]; }
  Scalar& operator()(Position i, Position j) { return data_[offset(i, j)]; }

  /// Row-major storage.
  std::span<const Scalar> data() const { return data_; }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  Tensor(int order, std::size_t n, Scalar fill);
  std::size_t offset(Position i) const;
  std::size_t offset(Position i, Position j) const;

  int order_;
  std::size_t n_;
  std::vector<Scalar> data_;
};

/// Inner product a • b of two vectors.
Scalar inner(const Tensor& a, const Tensor& b);

/// Matrix–vector product R v.
Tensor matvec(const Tensor& r, const Tensor& v);

/// Contracts a relation tensor with one vector per mode:
/// R(v1) = R • v1 for order 1, R(v1, v2) = v1ᵀ R v2 for order 2.
Scalar apply(const Tensor& r, std::span<const Tensor> arguments);

/// ¬R = 1∘…∘1 − R, the tensor of the complementary relation.
Tensor negate_relation(const Tensor& r);

/// Rᵀ, which encodes r(y, x) when R encodes r(x, y).
Tensor transpose_encode(const Tensor& r);

Scalar min1(Scalar x);
Tensor min1(const Tensor& t);

/// A structure mapped into R^N: position i becomes e_i, each relation its
/// 0/1 tensor, and equality the identity matrix.
struct EmbeddedModel {
  std::size_t basis_size = 0;
  std::map<std::string, Tensor> relations;
  Tensor identity = Tensor::identity(0);

  std::vector<Tensor> basis() const;
  /// Throws UnknownPredicateError, or ArityError when the stored tensor has
  /// a different order.
  const Tensor& relation(const std::string& name, int arity) const;
};

EmbeddedModel embed_model(const StructureModel& m);

}  // namespace fotensor
