#pragma once

#include <cstddef>
#include <vector>

#include "troplith/errors.hpp"
#include "troplith/exact_arith.hpp"

namespace troplith {

/// x -> A x + shift with A an integer m x n matrix and a rational shift.
struct IntegerAffineMap {
  std::size_t domain_dim = 0;
  ZMatrix matrix;  // m rows of length domain_dim
  QVec shift;      // length m

  std::size_t codomain_dim() const { return matrix.size(); }

  static IntegerAffineMap make(std::size_t n, ZMatrix A, QVec shift) {
    for (const auto& row : A) require(row.size() == n, ErrorCode::DimensionMismatch, "map matrix row has wrong length");
    require(shift.size() == A.size(), ErrorCode::DimensionMismatch, "map shift has wrong length");
    return {n, std::move(A), std::move(shift)};
  }

  static IntegerAffineMap identity(std::size_t n) {
    ZMatrix A(n, zero_z(n));
    for (std::size_t i = 0; i < n; ++i) A[i][i] = 1;
    return {n, A, zero_q(n)};
  }

  static IntegerAffineMap translation(const QVec& v) {
    IntegerAffineMap f = identity(v.size());
    f.shift = v;
    return f;
  }

  /// Keeps the listed coordinates, in order.
  static IntegerAffineMap coordinate_projection(std::size_t n, const std::vector<std::size_t>& keep) {
    ZMatrix A;
    for (auto i : keep) {
      ZVec row = zero_z(n);
      row.at(i) = 1;
      A.push_back(row);
    }
    return {n, A, zero_q(keep.size())};
  }

  QVec apply(const QVec& x) const {
    require(x.size() == domain_dim, ErrorCode::DimensionMismatch, "map applied to a point of wrong length");
    QVec y = shift;
    for (std::size_t i = 0; i < matrix.size(); ++i) y[i] += dot(matrix[i], x);
    return y;
  }

  ZVec apply_linear(const ZVec& v) const {
    ZVec y = zero_z(matrix.size());
    for (std::size_t i = 0; i < matrix.size(); ++i) y[i] = dot_z(matrix[i], v);
    return y;
  }

  /// Linear functional a on the codomain pulled back to the domain: A^T a.
  ZVec pull_linear(const ZVec& a) const {
    ZVec out = zero_z(domain_dim);
    for (std::size_t i = 0; i < matrix.size(); ++i)
      for (std::size_t j = 0; j < domain_dim; ++j) out[j] += a[i] * matrix[i][j];
    return out;
  }

  friend bool operator==(const IntegerAffineMap& a, const IntegerAffineMap& b) {
    return a.domain_dim == b.domain_dim && a.matrix == b.matrix && a.shift == b.shift;
  }
};

/// g ∘ f.
inline IntegerAffineMap compose(const IntegerAffineMap& f, const IntegerAffineMap& g) {
  require(f.codomain_dim() == g.domain_dim, ErrorCode::DimensionMismatch, "compose: dimensions do not chain");
  IntegerAffineMap h;
  h.domain_dim = f.domain_dim;
  h.matrix.assign(g.codomain_dim(), zero_z(f.domain_dim));
  for (std::size_t i = 0; i < g.codomain_dim(); ++i)
    for (std::size_t k = 0; k < g.domain_dim; ++k)
      for (std::size_t j = 0; j < f.domain_dim; ++j) h.matrix[i][j] += g.matrix[i][k] * f.matrix[k][j];
  h.shift = g.apply(f.shift);
  return h;
}

}  // namespace troplith
