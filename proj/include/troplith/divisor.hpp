#pragma once

// Divisors of PL functions, balanced graphs, fibers of families over R and
// the inverse construction for codimension-one fan cycles.

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "troplith/cycle.hpp"
#include "troplith/errors.hpp"
#include "troplith/exact_arith.hpp"
#include "troplith/pl_function.hpp"
#include "troplith/polyhedron.hpp"

namespace troplith {

/// Weight of the divisor at one ridge:
///   Σ ω(σ) φ_σ(v_σ) − φ_τ(Σ ω(σ) v_σ),
/// with φ_τ taken from the first adjacent facet.
inline Integer ridge_divisor_weight(const PLFunction& phi, const RidgeStar& rs) {
  const Subspace span = rs.ridge.linear_span();
  const std::size_t n = phi.ambient_dim();
  Integer total = 0;
  ZVec sum = zero_z(n);
  for (auto i : rs.facets) {
    const WeightedCell& c = phi.cells()[i];
    ZVec v = lattice_normal(c.cell, rs.ridge, span);
    total += c.weight * dot_z(phi.pieces()[i].linear, v);
    for (std::size_t j = 0; j < n; ++j) sum[j] += c.weight * v[j];
  }
  total -= dot_z(phi.pieces()[rs.facets.front()].linear, sum);
  return total;
}

/// φ · X on the carrier of φ.
inline TropicalCycle divisor(const PLFunction& phi) {
  const std::size_t n = phi.ambient_dim();
  if (phi.dim() == 0) return TropicalCycle::zero(n, 0);
  CellList out;
  for (const auto& rs : ridge_stars(phi.cells())) {
    Integer w = ridge_divisor_weight(phi, rs);
    if (w != 0) out.push_back({rs.ridge, w});
  }
  return TropicalCycle::from_complex(n, phi.dim() - 1, out);
}

inline TropicalCycle divisor(const TropicalPolynomial& f, const TropicalCycle& X) {
  return divisor(restrict_polynomial(f, X));
}

inline TropicalCycle divisor(const RationalFunctionExpr& r, const TropicalCycle& X) {
  return divisor(restrict_rational(r, X));
}

/// Left fold of divisor over the functions.
inline TropicalCycle divisor_chain(const std::vector<RationalFunctionExpr>& fs, const TropicalCycle& X) {
  TropicalCycle cur = X;
  for (const auto& f : fs) {
    if (cur.is_zero()) return TropicalCycle::zero(X.ambient_dim(), std::max(cur.dim() - 1, 0));
    cur = divisor(f, cur);
  }
  return cur;
}

/// max{t, p} on R^n x R as a tropical polynomial in n+1 variables.
inline TropicalPolynomial max_last_coordinate(std::size_t n, const Rational& p) {
  ZVec t = zero_z(n + 1);
  t[n] = 1;
  return TropicalPolynomial::make(n + 1, {{t, 0}, {zero_z(n + 1), p}});
}

/// Balanced graph of φ in R^n x R: graph cells plus downward cells at the
/// ridges with nonzero divisor weight.
inline TropicalCycle graph_cycle(const PLFunction& phi) {
  const std::size_t n = phi.ambient_dim();
  auto graph_map = [n](const AffinePiece& a) {
    ZMatrix A;
    for (std::size_t i = 0; i < n; ++i) {
      ZVec row = zero_z(n);
      row[i] = 1;
      A.push_back(row);
    }
    A.push_back(a.linear);
    QVec shift = zero_q(n + 1);
    shift[n] = a.constant;
    return std::make_pair(A, shift);
  };
  CellList out;
  for (std::size_t i = 0; i < phi.cells().size(); ++i) {
    auto [A, s] = graph_map(phi.pieces()[i]);
    out.push_back({phi.cells()[i].cell.affine_image(A, s), phi.cells()[i].weight});
  }
  ZVec down = zero_z(n + 1);
  down[n] = -1;
  for (const auto& rs : ridge_stars(phi.cells())) {
    Integer w = ridge_divisor_weight(phi, rs);
    if (w == 0) continue;
    auto [A, s] = graph_map(phi.pieces()[rs.facets.front()]);
    Polyhedron lifted = rs.ridge.affine_image(A, s);
    ZMatrix rays = lifted.rays();
    rays.push_back(down);
    out.push_back({Polyhedron::from_generators(n + 1, lifted.vertices(), rays, lifted.lineality()), w});
  }
  return TropicalCycle::from_complex(n + 1, phi.dim(), out);
}

/// F_p: divisor of max{t, p} on F ⊆ R^n x R, viewed in R^n.
inline TropicalCycle fiber(const TropicalCycle& F, const Rational& p) {
  require(F.ambient_dim() >= 1, ErrorCode::DimensionMismatch, "fiber needs an ambient R^n x R");
  const std::size_t n = F.ambient_dim() - 1;
  if (F.dim() == 0) return TropicalCycle::zero(n, 0);
  TropicalCycle D = divisor(max_last_coordinate(n, p), F);
  ZMatrix drop;
  for (std::size_t i = 0; i < n; ++i) {
    ZVec row = zero_z(n + 1);
    row[i] = 1;
    drop.push_back(row);
  }
  CellList out;
  for (const auto& c : D.cells()) out.push_back({c.cell.affine_image(drop, zero_q(n)), c.weight});
  return TropicalCycle::from_complex(n, F.dim() - 1, out);
}

/// (f, g) with divisor(f − g, R^n) = D for a codimension-one fan cycle D.
inline RationalFunctionExpr invert_divisor(const TropicalCycle& D) {
  const std::size_t n = D.ambient_dim();
  require(D.is_zero() || D.dim() + 1 == static_cast<int>(n), ErrorCode::InvalidArgument,
          "invert_divisor needs a codimension-one cycle");
  require(D.is_fan(), ErrorCode::InvalidArgument, "invert_divisor needs a fan cycle");
  if (D.is_zero()) return {TropicalPolynomial::constant(n), TropicalPolynomial::constant(n)};
  require(balancing_check(D).empty(), ErrorCode::NotBalanced, "invert_divisor: input is not balanced");

  std::set<AffineConstraint> functionals;
  for (const auto& c : D.cells()) {
    for (const auto& h : c.cell.inequalities()) functionals.insert({h.normal, 0});
    for (const auto& h : c.cell.equations()) functionals.insert({h.normal, 0});
  }
  CellList chambers =
      refine_by_hyperplanes({{Polyhedron::whole_space(n), 1}}, {functionals.begin(), functionals.end()});
  auto wall_weight = [&](const Polyhedron& wall) -> Integer {
    const QVec p = wall.relative_interior_point();
    for (const auto& c : D.cells())
      if (c.cell.contains(p)) return c.weight;
    return 0;
  };
  std::vector<std::optional<ZVec>> slope(chambers.size());
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(chambers.size());  // (neighbour, ridge)
  const auto ridges = ridge_stars(chambers);
  for (std::size_t r = 0; r < ridges.size(); ++r) {
    if (ridges[r].facets.size() != 2) continue;
    adj[ridges[r].facets[0]].push_back({ridges[r].facets[1], r});
    adj[ridges[r].facets[1]].push_back({ridges[r].facets[0], r});
  }
  slope[0] = zero_z(n);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    for (auto [b, r] : adj[a]) {
      const Polyhedron& wall = ridges[r].ridge;
      ZVec normal = wall.equations().front().normal;
      if (dot(normal, chambers[b].cell.relative_interior_point()) < 0)
        for (auto& x : normal) x = -x;
      ZVec next = add_vec(*slope[a], scale_vec(normal, wall_weight(wall)));
      if (!slope[b]) {
        slope[b] = next;
        queue.push_back(b);
      } else {
        require(*slope[b] == next, ErrorCode::NotBalanced, "invert_divisor: inconsistent slopes (unbalanced input)");
      }
    }
  }
  std::vector<AffinePiece> pieces;
  for (const auto& s : slope) {
    require(s.has_value(), ErrorCode::Internal, "invert_divisor: chamber graph is disconnected");
    pieces.push_back({*s, 0});
  }
  return as_quotient(PLFunction::make(n, static_cast<int>(n), std::move(chambers), std::move(pieces)));
}

}  // namespace troplith
