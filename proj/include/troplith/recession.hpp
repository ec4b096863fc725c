#pragma once

// Complete fans from hyperplane arrangements, simplicial completion by
// stellar subdivision, and recession cycles.

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "troplith/cycle.hpp"
#include "troplith/errors.hpp"
#include "troplith/exact_arith.hpp"
#include "troplith/polyhedron.hpp"

namespace troplith {

/// A fan in R^n given by its maximal cones.
struct CompleteFan {
  std::size_t ambient_dim = 0;
  std::vector<Polyhedron> maximal;

  /// All cones, closed under faces, in Polyhedron order.
  std::vector<Polyhedron> cones() const {
    std::set<Polyhedron> all;
    for (const auto& c : maximal)
      for (auto& f : c.all_faces()) all.insert(std::move(f));
    return {all.begin(), all.end()};
  }

  std::vector<Polyhedron> cones_of_dim(int k) const {
    std::set<Polyhedron> all;
    for (const auto& c : maximal)
      for (auto& f : c.faces(k)) all.insert(std::move(f));
    return {all.begin(), all.end()};
  }

  /// Pointed and generated by linearly independent rays.
  static bool is_simplicial_cone(const Polyhedron& c) {
    return c.lineality().empty() && static_cast<int>(c.rays().size()) == c.dim();
  }

  bool is_simplicial() const {
    return std::all_of(maximal.begin(), maximal.end(), is_simplicial_cone);
  }
};

struct FanAudit {
  bool full_dimensional = true;
  bool ridges_paired = true;
  bool grid_covered = true;
  bool simplicial = true;

  bool complete() const { return full_dimensional && ridges_paired && grid_covered; }
};

/// Ridge pairing plus covering of the grid {-2, -3/2, ..., 2}^n.
inline FanAudit audit(const CompleteFan& F) {
  FanAudit a;
  const std::size_t n = F.ambient_dim;
  CellList cells;
  for (const auto& c : F.maximal) {
    if (c.dim() != static_cast<int>(n) || !c.is_cone()) a.full_dimensional = false;
    cells.push_back({c, 1});
  }
  for (const auto& rs : ridge_stars(cells))
    if (rs.facets.size() != 2) a.ridges_paired = false;
  a.simplicial = F.is_simplicial();
  std::vector<int> idx(n, 0);
  for (;;) {
    QVec p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = Rational(idx[i] - 4, 2);
    if (std::none_of(F.maximal.begin(), F.maximal.end(), [&](const Polyhedron& c) { return c.contains(p); })) {
      a.grid_covered = false;
      break;
    }
    std::size_t i = 0;
    while (i < n && idx[i] == 8) idx[i++] = 0;
    if (i == n) break;
    ++idx[i];
  }
  return a;
}

/// Common refinement of the fans {f ≥ 0}, {f ≤ 0}; the empty list gives {R^n}.
inline CompleteFan arrangement_fan(std::size_t n, const std::vector<ZVec>& functionals) {
  std::vector<AffineConstraint> hyper;
  for (const auto& f : functionals) {
    require(f.size() == n, ErrorCode::DimensionMismatch, "arrangement_fan: functional has wrong length");
    if (!is_zero_vec(f)) hyper.push_back({make_primitive(f), 0});
  }
  CompleteFan F{n, {}};
  for (auto& c : refine_by_hyperplanes({{Polyhedron::whole_space(n), 1}}, hyper)) F.maximal.push_back(std::move(c.cell));
  std::sort(F.maximal.begin(), F.maximal.end());
  return F;
}

/// Normals of all constraints of the cells, as linear functionals.
inline std::vector<ZVec> defining_functionals(const CellList& cells) {
  std::set<ZVec> out;
  for (const auto& c : cells) {
    for (const auto& h : c.cell.inequalities()) out.insert(h.normal);
    for (const auto& h : c.cell.equations()) out.insert(h.normal);
  }
  return {out.begin(), out.end()};
}

/// Replaces each maximal cone containing c by the cones over its facets not
/// containing c, joined with r.
inline CompleteFan stellar_subdivision(const CompleteFan& F, const Polyhedron& c, const ZVec& r) {
  CompleteFan out{F.ambient_dim, {}};
  for (const auto& sigma : F.maximal) {
    if (!sigma.contains(c)) {
      out.maximal.push_back(sigma);
      continue;
    }
    for (const auto& G : sigma.facets()) {
      if (G.contains(c)) continue;
      ZMatrix rays = G.rays();
      rays.push_back(r);
      out.maximal.push_back(Polyhedron::cone(F.ambient_dim, rays));
    }
  }
  std::sort(out.maximal.begin(), out.maximal.end());
  return out;
}

struct SimplicialCompletion {
  CompleteFan theta;
  CellList subfan;  // cones of theta with weights representing the input
};

/// Complete simplicial fan Θ with a weighted subfan equal to F.
inline SimplicialCompletion simplicial_completion(const TropicalCycle& F) {
  require(F.is_fan(), ErrorCode::InvalidArgument, "simplicial_completion needs a fan cycle");
  const std::size_t n = F.ambient_dim();
  std::vector<ZVec> fs = defining_functionals(F.cells());
  for (std::size_t i = 0; i < n; ++i) {
    ZVec e = zero_z(n);
    e[i] = 1;
    fs.push_back(e);
  }
  CompleteFan theta = arrangement_fan(n, fs);
  for (std::size_t guard = 0;; ++guard) {
    require(guard < 4096, ErrorCode::LoopGuard, "simplicial_completion: subdivision did not terminate");
    std::optional<Polyhedron> worst;
    for (const auto& c : theta.cones())
      if (!CompleteFan::is_simplicial_cone(c) && (!worst || c.dim() < worst->dim())) worst = c;
    if (!worst) break;
    ZVec r = zero_z(n);
    for (const auto& g : worst->rays()) r = add_vec(r, g);
    theta = stellar_subdivision(theta, *worst, make_primitive(r));
  }
  SimplicialCompletion out{theta, {}};
  for (const auto& c : theta.cones_of_dim(F.dim())) {
    const QVec p = c.relative_interior_point();
    for (const auto& s : F.cells())
      if (s.cell.contains(p)) {
        out.subfan.push_back({c, s.weight});
        break;
      }
  }
  require(cycle_equal(TropicalCycle::from_complex(n, F.dim(), out.subfan), F), ErrorCode::Internal,
          "simplicial_completion: subfan does not represent the input");
  return out;
}

/// Rec(X): recession cones of full dimension, refined by a common
/// arrangement, weights summed over containing cones.
inline TropicalCycle recession_cycle(const TropicalCycle& X) {
  const std::size_t n = X.ambient_dim();
  CellList recs;
  for (const auto& c : X.cells()) {
    Polyhedron R = c.cell.recession_cone();
    if (R.dim() == X.dim()) recs.push_back({std::move(R), c.weight});
  }
  std::vector<AffineConstraint> hyper;
  for (const auto& f : defining_functionals(recs)) hyper.push_back({f, 0});
  return TropicalCycle::from_complex(n, X.dim(), refine_by_hyperplanes(recs, hyper));
}

}  // namespace troplith
