#include "fotensor/tensor.hpp"

#include <algorithm>
#include <stdexcept>

#include "fotensor/error.hpp"

namespace fotensor {

Tensor::Tensor(int order, std::size_t n, Scalar fill) : order_(order), n_(n) {
  if (order != 1 && order != 2) throw std::invalid_argument("tensor order must be 1 or 2");
  data_.assign(order == 1 ? n : n * n, fill);
}

Tensor Tensor::zeros(int order, std::size_t n) { return Tensor(order, n, 0); }

Tensor Tensor::ones(int order, std::size_t n) { return Tensor(order, n, 1); }

Tensor Tensor::identity(std::size_t n) {
  Tensor t(2, n, 0);
  for (Position i = 1; i <= n; ++i) t(i, i) = 1;
  return t;
}

Tensor Tensor::one_hot(std::size_t n, Position i) {
  Tensor t(1, n, 0);
  t(i) = 1;
  return t;
}

std::size_t Tensor::offset(Position i) const {
  if (order_ != 1) throw std::logic_error("vector access on a matrix");
  if (i < 1 || i > n_) throw std::out_of_range("tensor index " + std::to_string(i));
  return i - 1;
}

std::size_t Tensor::offset(Position i, Position j) const {
  if (order_ != 2) throw std::logic_error("matrix access on a vector");
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::out_of_range("tensor index (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return (i - 1) * n_ + (j - 1);
}

Scalar inner(const Tensor& a, const Tensor& b) {
  if (a.order() != 1 || b.order() != 1 || a.dimension() != b.dimension()) {
    throw std::invalid_argument("inner product needs two vectors of equal dimension");
  }
  Scalar sum = 0;
  for (std::size_t k = 0; k < a.data().size(); ++k) sum += a.data()[k] * b.data()[k];
  return sum;
}

Tensor matvec(const Tensor& r, const Tensor& v) {
  if (r.order() != 2 || v.order() != 1 || r.dimension() != v.dimension()) {
    throw std::invalid_argument("matvec needs an N×N matrix and a length-N vector");
  }
  Tensor out = Tensor::zeros(1, r.dimension());
  for (Position i = 1; i <= r.dimension(); ++i) {
    Scalar sum = 0;
    for (Position j = 1; j <= r.dimension(); ++j) sum += r(i, j) * v(j);
    out(i) = sum;
  }
  return out;
}

Scalar apply(const Tensor& r, std::span<const Tensor> arguments) {
  if (arguments.size() != static_cast<std::size_t>(r.order())) {
    throw std::invalid_argument("apply needs one argument per tensor mode");
  }
  if (r.order() == 1) return inner(r, arguments[0]);
  return inner(arguments[0], matvec(r, arguments[1]));
}

Tensor negate_relation(const Tensor& r) {
  Tensor out = Tensor::ones(r.order(), r.dimension());
  if (r.order() == 1) {
    for (Position i = 1; i <= r.dimension(); ++i) out(i) -= r(i);
  } else {
    for (Position i = 1; i <= r.dimension(); ++i) {
      for (Position j = 1; j <= r.dimension(); ++j) out(i, j) -= r(i, j);
    }
  }
  return out;
}

Tensor transpose_encode(const Tensor& r) {
  if (r.order() != 2) throw std::invalid_argument("transpose of a non-matrix");
  Tensor out = Tensor::zeros(2, r.dimension());
  for (Position i = 1; i <= r.dimension(); ++i) {
    for (Position j = 1; j <= r.dimension(); ++j) out(j, i) = r(i, j);
  }
  return out;
}

Scalar min1(Scalar x) { return std::min<Scalar>(x, 1); }

Tensor min1(const Tensor& t) {
  Tensor out = t;
  if (t.order() == 1) {
    for (Position i = 1; i <= t.dimension(); ++i) out(i) = min1(t(i));
  } else {
    for (Position i = 1; i <= t.dimension(); ++i) {
      for (Position j = 1; j <= t.dimension(); ++j) out(i, j) = min1(t(i, j));
    }
  }
  return out;
}

std::vector<Tensor> EmbeddedModel::basis() const {
  std::vector<Tensor> out;
  for (Position i = 1; i <= basis_size; ++i) out.push_back(Tensor::one_hot(basis_size, i));
  return out;
}

const Tensor& EmbeddedModel::relation(const std::string& name, int arity) const {
  auto it = relations.find(name);
  if (it == relations.end()) throw UnknownPredicateError(name);
  if (it->second.order() != arity) {
    throw ArityError("predicate '" + name + "' used with arity " + std::to_string(arity) +
                     " but the model relation has arity " + std::to_string(it->second.order()));
  }
  return it->second;
}

EmbeddedModel embed_model(const StructureModel& m) {
  const std::size_t n = m.domain_size();
  EmbeddedModel out;
  out.basis_size = n;
  out.identity = Tensor::identity(n);
  for (const auto& name : m.unary_names()) {
    Tensor t = Tensor::zeros(1, n);
    for (Position i : m.unary_members(name)) t(i) = 1;
    out.relations.emplace(name, std::move(t));
  }
  for (const auto& name : m.binary_names()) {
    Tensor t = Tensor::zeros(2, n);
    for (auto [i, j] : m.binary_pairs(name)) t(i, j) = 1;
    out.relations.emplace(name, std::move(t));
  }
  return out;
}

}  // namespace fotensor
