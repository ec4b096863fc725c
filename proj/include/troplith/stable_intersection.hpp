#pragma once

// Stable intersection on R^n via the diagonal, the degree pairing, and an
// independent displacement oracle.
//
// numerical_equiv_sample only refutes: a mismatch of degrees on some test
// cycle proves two cycles inequivalent, while agreement on the sample proves
// nothing.  Equivalence is certified by equal recession fans instead.

#include <cstddef>
#include <optional>
#include <vector>

#include "troplith/affine_map.hpp"
#include "troplith/cycle.hpp"
#include "troplith/divisor.hpp"
#include "troplith/errors.hpp"
#include "troplith/exact_arith.hpp"
#include "troplith/morphism.hpp"
#include "troplith/polyhedron.hpp"

namespace troplith {

/// max{x_i, y_i} on R^n x R^n.
inline TropicalPolynomial diagonal_function(std::size_t n, std::size_t i) {
  ZVec a = zero_z(2 * n), b = zero_z(2 * n);
  a[i] = 1;
  b[n + i] = 1;
  return TropicalPolynomial::make(2 * n, {{a, 0}, {b, 0}});
}

/// π_*(Π max{x_i, y_i} · (X × Y)).
inline TropicalCycle stable_intersect(const TropicalCycle& X, const TropicalCycle& Y) {
  require(X.ambient_dim() == Y.ambient_dim(), ErrorCode::DimensionMismatch, "stable_intersect: ambient dims differ");
  const std::size_t n = X.ambient_dim();
  const int k = X.dim() + Y.dim() - static_cast<int>(n);
  if (k < 0 || X.is_zero() || Y.is_zero()) return TropicalCycle::zero(n, std::max(k, 0));
  TropicalCycle P = product(X, Y);
  for (std::size_t i = 0; i < n; ++i) {
    P = divisor(diagonal_function(n, i), P);
    if (P.is_zero()) return TropicalCycle::zero(n, k);
  }
  std::vector<std::size_t> first(n);
  for (std::size_t i = 0; i < n; ++i) first[i] = i;
  return pushforward(IntegerAffineMap::coordinate_projection(2 * n, first), P);
}

namespace detail {

/// <a, x - εv> ≥ b (or =) as an integral constraint on (x, ε).
inline AffineConstraint displaced(const AffineConstraint& h, const QVec& v) {
  Rational av = dot(h.normal, v);
  Integer L = den(av);
  ZVec normal;
  for (const auto& a : h.normal) normal.push_back(a * L);
  normal.push_back(-num(av));
  return {normal, h.offset * L};
}

inline AffineConstraint extended(const AffineConstraint& h) {
  ZVec normal = h.normal;
  normal.push_back(0);
  return {normal, h.offset};
}

}  // namespace detail

/// lim_{ε→0+} X ∩ (Y + εv) with weights ω ω' [Z^n : Λ_σ + Λ_σ'].
/// Throws NonGeneric when some facet pair meets in the wrong dimension.
inline TropicalCycle displacement_oracle(const TropicalCycle& X, const TropicalCycle& Y, const QVec& v) {
  require(X.ambient_dim() == Y.ambient_dim() && v.size() == X.ambient_dim(), ErrorCode::DimensionMismatch,
          "displacement_oracle: dimensions differ");
  const std::size_t n = X.ambient_dim();
  const int k = X.dim() + Y.dim() - static_cast<int>(n);
  ZVec eps = zero_z(n + 1);
  eps[n] = 1;
  ZMatrix drop;
  for (std::size_t i = 0; i < n; ++i) {
    ZVec row = zero_z(n + 1);
    row[i] = 1;
    drop.push_back(row);
  }
  CellList out;
  for (const auto& a : X.cells())
    for (const auto& b : Y.cells()) {
      std::vector<AffineConstraint> in{{eps, 0}}, eq;
      for (const auto& h : a.cell.inequalities()) in.push_back(detail::extended(h));
      for (const auto& h : a.cell.equations()) eq.push_back(detail::extended(h));
      for (const auto& h : b.cell.inequalities()) in.push_back(detail::displaced(h, v));
      for (const auto& h : b.cell.equations()) eq.push_back(detail::displaced(h, v));
      auto P = Polyhedron::try_from_inequalities(n + 1, in, eq);
      if (!P || !P->range_of(eps, 0).positive) continue;
      eq.push_back({eps, 0});
      auto P0 = Polyhedron::try_from_inequalities(n + 1, in, eq);
      require(k >= 0 && P->dim() == k + 1, ErrorCode::NonGeneric, "displacement vector is not generic for this pair");
      if (!P0 || P0->dim() < k) continue;  // limit of lower dimension carries no weight
      ZMatrix gens = Lattice::saturated(a.cell.linear_span()).basis();
      const Lattice lb = Lattice::saturated(b.cell.linear_span());
      gens.insert(gens.end(), lb.basis().begin(), lb.basis().end());
      auto idx = lattice_index(Lattice::generated_by(n, gens), Lattice::saturated(Subspace::whole(n)));
      require(idx.has_value(), ErrorCode::NonGeneric, "displacement: facet spans are not transverse");
      out.push_back({P0->affine_image(drop, zero_q(n)), a.weight * b.weight * *idx});
    }
  return TropicalCycle::from_cells(n, std::max(k, 0), out);
}

/// v_t = (1, t, t^2, ...) for t = 2, 3, ...
inline QVec moment_vector(std::size_t n, int t) {
  QVec v(n);
  Rational p = 1;
  for (std::size_t i = 0; i < n; ++i, p *= t) v[i] = p;
  return v;
}

/// Oracle with the first generic vector of the moment sequence.
inline TropicalCycle displacement_oracle(const TropicalCycle& X, const TropicalCycle& Y) {
  for (int t = 2; t < 64; ++t) {
    try {
      return displacement_oracle(X, Y, moment_vector(X.ambient_dim(), t));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonGeneric) throw;
    }
  }
  fail(ErrorCode::NonGeneric, "no generic displacement vector found in the moment sequence");
}

inline Integer degree_pairing(const TropicalCycle& X, const TropicalCycle& Z) {
  require(X.ambient_dim() == Z.ambient_dim() && X.dim() + Z.dim() == static_cast<int>(X.ambient_dim()),
          ErrorCode::DimensionMismatch, "degree_pairing needs complementary dimensions");
  return degree0(stable_intersect(X, Z));
}

/// Cones over the k-subsets of {-e_1, ..., -e_n, e_1 + ... + e_n}.
inline TropicalCycle uniform_linear_fan(std::size_t n, int k) {
  require(k >= 0 && k <= static_cast<int>(n), ErrorCode::InvalidArgument, "uniform_linear_fan: bad dimension");
  if (k == static_cast<int>(n)) return TropicalCycle::whole_space(n);
  ZMatrix rays;
  for (std::size_t i = 0; i < n; ++i) {
    ZVec e = zero_z(n);
    e[i] = -1;
    rays.push_back(e);
  }
  rays.push_back(ZVec(n, Integer(1)));
  CellList cells;
  std::vector<std::size_t> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    ZMatrix gens;
    for (auto i : pick) gens.push_back(rays[i]);
    cells.push_back({Polyhedron::cone(n, gens), 1});
    int i = k - 1;
    while (i >= 0 && pick[i] == rays.size() - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return TropicalCycle::from_complex(n, k, cells);
}

/// Span of the chosen coordinate axes, weight 1.
inline TropicalCycle coordinate_subspace(std::size_t n, const std::vector<std::size_t>& axes) {
  ZMatrix lin;
  for (auto i : axes) {
    ZVec e = zero_z(n);
    e.at(i) = 1;
    lin.push_back(e);
  }
  CellList cells{{Polyhedron::from_generators(n, {zero_q(n)}, {}, lin), 1}};
  return TropicalCycle::from_complex(n, static_cast<int>(axes.size()), cells);
}

/// Deterministic test cycle of dimension k, number t of the sample family.
inline TropicalCycle test_cycle(std::size_t n, int k, int t) {
  QVec shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = Rational((t * 7 + static_cast<int>(i) * 5) % 11 - 5, 1 + (t + i) % 3);
  if (t % 2 == 1) return uniform_linear_fan(n, k).translate(shift);
  // the (t/2)-th k-subset of coordinates in cyclic order
  std::vector<std::size_t> axes;
  for (int i = 0; i < k; ++i) axes.push_back((static_cast<std::size_t>(t / 2) + i) % n);
  std::sort(axes.begin(), axes.end());
  return coordinate_subspace(n, axes).translate(shift);
}

struct NumericalSample {
  bool consistent = true;  // no test cycle separated the two cycles
  std::optional<TropicalCycle> witness;
  Integer degree_x = 0, degree_y = 0;
};

/// Compares d_X and d_Y on `trials` test cycles; a refuter only.
inline NumericalSample numerical_equiv_sample(const TropicalCycle& X, const TropicalCycle& Y, int trials) {
  require(X.ambient_dim() == Y.ambient_dim() && X.dim() == Y.dim(), ErrorCode::DimensionMismatch,
          "numerical_equiv_sample: shapes differ");
  const std::size_t n = X.ambient_dim();
  const int k = static_cast<int>(n) - X.dim();
  NumericalSample out;
  for (int t = 0; t < trials; ++t) {
    TropicalCycle Z = test_cycle(n, k, t);
    Integer dx = degree_pairing(X, Z), dy = degree_pairing(Y, Z);
    if (dx != dy) {
      out.consistent = false;
      out.witness = Z;
      out.degree_x = dx;
      out.degree_y = dy;
      return out;
    }
  }
  return out;
}

}  // namespace troplith
