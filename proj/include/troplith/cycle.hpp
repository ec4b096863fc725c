#pragma once

// Weighted polyhedral complexes and the group of tropical cycles.
//
// A TropicalCycle always stores a canonical structure: a polyhedral complex
// without zero weights, greedily coarsened, cells sorted.  Sums and images
// of overlapping cells are brought back to a complex by `normalize_cells`,
// which splits cells along hyperplanes of the cells they meet badly.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <utility>
#include <vector>

#include "troplith/errors.hpp"
#include "troplith/exact_arith.hpp"
#include "troplith/polyhedron.hpp"

namespace troplith {

struct WeightedCell {
  Polyhedron cell;
  Integer weight;

  friend bool operator==(const WeightedCell& a, const WeightedCell& b) {
    return a.weight == b.weight && a.cell == b.cell;
  }
};

using CellList = std::vector<WeightedCell>;

/// A ridge together with the indices of the facets containing it.
struct RidgeStar {
  Polyhedron ridge;
  std::vector<std::size_t> facets;
};

struct BalancingViolation {
  Polyhedron ridge;
  QVec defect;  // weighted sum of lattice normals, reduced modulo V_ridge
};

namespace detail {

inline AffineConstraint negated(const AffineConstraint& h) {
  AffineConstraint out{h.normal, -h.offset};
  for (auto& x : out.normal) x = -x;
  return out;
}

/// <a,x> - b takes both signs on P.
inline bool cuts(const Polyhedron& P, const AffineConstraint& h) {
  auto r = P.range_of(h.normal, h.offset);
  return r.positive && r.negative;
}

/// max over P of <a,x> - b is negative.
inline bool strictly_below(const Polyhedron& P, const AffineConstraint& h) {
  auto r = P.range_of(h.normal, h.offset);
  if (r.positive) return false;
  for (const auto& v : P.vertices())
    if (h.eval(v) == 0) return false;
  return true;
}

/// False only when P and Q are certainly disjoint (separated by a facet).
inline bool may_meet(const Polyhedron& P, const Polyhedron& Q) {
  for (const auto& h : Q.inequalities())
    if (strictly_below(P, h)) return false;
  for (const auto& h : P.inequalities())
    if (strictly_below(Q, h)) return false;
  for (const auto& e : Q.equations())
    if (strictly_below(P, e) || strictly_below(P, negated(e))) return false;
  for (const auto& e : P.equations())
    if (strictly_below(Q, e) || strictly_below(Q, negated(e))) return false;
  return true;
}

/// A constraint of Q whose hyperplane cuts through P.
inline std::optional<AffineConstraint> cutting_constraint(const Polyhedron& P, const Polyhedron& Q) {
  for (const auto& h : Q.equations())
    if (cuts(P, h)) return h;
  for (const auto& h : Q.inequalities())
    if (cuts(P, h)) return h;
  return std::nullopt;
}

/// Smallest face of P containing the point c of P.
inline Polyhedron minimal_face(const Polyhedron& P, const QVec& c) {
  std::vector<AffineConstraint> tight, loose;
  for (const auto& h : P.inequalities()) (h.eval(c) == 0 ? tight : loose).push_back(h);
  if (tight.empty()) return P;
  QMatrix verts;
  for (const auto& v : P.vertices())
    if (std::all_of(tight.begin(), tight.end(), [&](const AffineConstraint& h) { return h.eval(v) == 0; }))
      verts.push_back(v);
  ZMatrix rays;
  for (const auto& r : P.rays())
    if (std::all_of(tight.begin(), tight.end(), [&](const AffineConstraint& h) { return dot_z(h.normal, r) == 0; }))
      rays.push_back(r);
  return Polyhedron::finalize(P.ambient_dim(), verts, rays, P.lineality(), loose);
}

/// A hyperplane of one cell that must cut the other so that the two meet
/// in a common face; `first` tells which cell is to be split.
struct Conflict {
  bool first;
  AffineConstraint hyperplane;
};

inline std::optional<Conflict> find_conflict(const Polyhedron& P, const Polyhedron& Q) {
  if (!may_meet(P, Q)) return std::nullopt;
  auto hp = cutting_constraint(P, Q);
  auto hq = cutting_constraint(Q, P);
  // no hyperplane of one cuts the other: P ∩ Q is a face of both
  if (!hp && !hq) return std::nullopt;
  auto I = intersect(P, Q);
  if (!I) return std::nullopt;
  const QVec c = I->relative_interior_point();
  Polyhedron fp = minimal_face(P, c);
  if (fp != *I) {
    auto h = cutting_constraint(fp, Q);
    require(h.has_value(), ErrorCode::Internal, "find_conflict: no cutting hyperplane");
    return Conflict{true, *h};
  }
  Polyhedron fq = minimal_face(Q, c);
  if (fq != *I) {
    auto h = cutting_constraint(fq, P);
    require(h.has_value(), ErrorCode::Internal, "find_conflict: no cutting hyperplane");
    return Conflict{false, *h};
  }
  return std::nullopt;
}

inline std::pair<Polyhedron, Polyhedron> split(const Polyhedron& P, const AffineConstraint& h) {
  auto a = intersect_halfspace(P, h);
  auto b = intersect_halfspace(P, negated(h));
  require(a && b, ErrorCode::Internal, "split: a cutting hyperplane produced an empty side");
  return {std::move(*a), std::move(*b)};
}

/// P and Q meet in a common face (or not at all).
inline bool compatible(const Polyhedron& P, const Polyhedron& Q) { return !find_conflict(P, Q); }

}  // namespace detail

/// Turns a list of equidimensional weighted cells into a polyhedral complex
/// carrying the same weight function; equal cells are merged and zero
/// weights dropped.
inline CellList normalize_cells(const CellList& input) {
  std::map<Polyhedron, Integer> placed;
  std::deque<WeightedCell> queue(input.begin(), input.end());
  while (!queue.empty()) {
    WeightedCell item = std::move(queue.front());
    queue.pop_front();
    if (auto it = placed.find(item.cell); it != placed.end()) {
      it->second += item.weight;
      continue;
    }
    bool resolved = false;
    for (auto it = placed.begin(); it != placed.end(); ++it) {
      auto conflict = detail::find_conflict(item.cell, it->first);
      if (!conflict) continue;
      if (conflict->first) {
        auto [a, b] = detail::split(item.cell, conflict->hyperplane);
        queue.push_front({std::move(b), item.weight});
        queue.push_front({std::move(a), item.weight});
      } else {
        auto [a, b] = detail::split(it->first, conflict->hyperplane);
        Integer wy = it->second;
        placed.erase(it);
        queue.push_front(std::move(item));
        queue.push_back({std::move(a), wy});
        queue.push_back({std::move(b), wy});
      }
      resolved = true;
      break;
    }
    if (!resolved) placed.emplace(std::move(item.cell), std::move(item.weight));
  }
  CellList out;
  for (auto& [c, w] : placed)
    if (w != 0) out.push_back({c, w});
  return out;
}

/// Splits every cell along each hyperplane <a,x> = b that cuts it.  Cutting a
/// complex by a global arrangement keeps it a complex.
inline CellList refine_by_hyperplanes(const CellList& cells, const std::vector<AffineConstraint>& hyperplanes) {
  CellList current = cells;
  for (const auto& h : hyperplanes) {
    CellList next;
    for (auto& c : current) {
      if (detail::cuts(c.cell, h)) {
        auto [a, b] = detail::split(c.cell, h);
        next.push_back({std::move(a), c.weight});
        next.push_back({std::move(b), c.weight});
      } else {
        next.push_back(std::move(c));
      }
    }
    current = std::move(next);
  }
  return current;
}

inline std::vector<RidgeStar> ridge_stars(const CellList& cells) {
  std::map<Polyhedron, std::vector<std::size_t>> m;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (auto& f : cells[i].cell.facets()) m[std::move(f)].push_back(i);
  std::vector<RidgeStar> out;
  for (auto& [r, idx] : m) out.push_back({r, idx});
  return out;
}

/// Canonical lift of the primitive normal of facet over ridge.
inline ZVec lattice_normal(const Polyhedron& facet, const Polyhedron& ridge, const Subspace& ridge_span) {
  return quotient_primitive(sub_vec(facet.relative_interior_point(), ridge.relative_interior_point()), ridge_span);
}

inline bool is_complex(const CellList& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      if (!detail::compatible(cells[i].cell, cells[j].cell)) return false;
  return true;
}

/// Assumes `cells` is a complex.
inline std::vector<BalancingViolation> balancing_violations(const CellList& cells) {
  std::vector<BalancingViolation> out;
  if (cells.empty()) return out;
  const std::size_t n = cells.front().cell.ambient_dim();
  for (const auto& rs : ridge_stars(cells)) {
    const Subspace span = rs.ridge.linear_span();
    QVec sum = zero_q(n);
    for (auto i : rs.facets) {
      ZVec v = lattice_normal(cells[i].cell, rs.ridge, span);
      for (std::size_t j = 0; j < n; ++j) sum[j] += cells[i].weight * v[j];
    }
    QVec defect = span.reduce(sum);
    if (!is_zero_vec(defect)) out.push_back({rs.ridge, defect});
  }
  return out;
}

/// Merges pairs of facets across ridges with exactly two neighbours when the
/// weights and spans agree and the union is convex.  A merge is taken only if
/// the union still meets every other cell in common faces.
inline CellList coarsen(CellList cells) {
  std::sort(cells.begin(), cells.end(),
            [](const WeightedCell& a, const WeightedCell& b) { return a.cell < b.cell; });
  for (;;) {
    bool merged_any = false;
    std::vector<bool> consumed(cells.size(), false);
    CellList merged;
    for (const auto& rs : ridge_stars(cells)) {
      if (rs.facets.size() != 2) continue;
      const std::size_t i = rs.facets[0], j = rs.facets[1];
      if (consumed[i] || consumed[j]) continue;
      const WeightedCell& a = cells[i];
      const WeightedCell& b = cells[j];
      if (a.weight != b.weight) continue;
      if (!(a.cell.linear_span() == b.cell.linear_span())) continue;
      QMatrix verts = a.cell.vertices();
      verts.insert(verts.end(), b.cell.vertices().begin(), b.cell.vertices().end());
      ZMatrix rays = a.cell.rays();
      rays.insert(rays.end(), b.cell.rays().begin(), b.cell.rays().end());
      Polyhedron hull = Polyhedron::from_generators(a.cell.ambient_dim(), verts, rays, a.cell.lineality());
      // the facet inequality of a that is tight on the ridge separates a from b
      std::optional<AffineConstraint> sep;
      for (const auto& h : a.cell.inequalities()) {
        bool tight = std::all_of(rs.ridge.vertices().begin(), rs.ridge.vertices().end(),
                                 [&](const QVec& v) { return h.eval(v) == 0; });
        if (tight && rs.ridge.range_of(h.normal, h.offset).positive == false &&
            rs.ridge.range_of(h.normal, h.offset).negative == false) {
          sep = h;
          break;
        }
      }
      if (!sep) continue;
      auto pa = intersect_halfspace(hull, *sep);
      auto pb = intersect_halfspace(hull, detail::negated(*sep));
      if (!pa || !pb || *pa != a.cell || *pb != b.cell) continue;
      bool ok = true;
      for (std::size_t k = 0; k < cells.size() && ok; ++k)
        if (k != i && k != j && !consumed[k] && !detail::compatible(hull, cells[k].cell)) ok = false;
      for (std::size_t k = 0; k < merged.size() && ok; ++k)
        if (!detail::compatible(hull, merged[k].cell)) ok = false;
      if (!ok) continue;
      consumed[i] = consumed[j] = true;
      merged.push_back({std::move(hull), a.weight});
      merged_any = true;
    }
    if (!merged_any) break;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (!consumed[k]) merged.push_back(std::move(cells[k]));
    cells = std::move(merged);
    std::sort(cells.begin(), cells.end(),
              [](const WeightedCell& a, const WeightedCell& b) { return a.cell < b.cell; });
  }
  return cells;
}

class TropicalCycle {
 public:
  TropicalCycle() = default;

  static TropicalCycle zero(std::size_t n, int d) {
    TropicalCycle c;
    c.n_ = n;
    c.d_ = d;
    return c;
  }

  /// From cells that already form a complex (checked when `check_complex`).
  static TropicalCycle from_complex(std::size_t n, int d, const CellList& cells, bool check_complex = false) {
    check_cells(n, d, cells);
    std::map<Polyhedron, Integer> merged;
    for (const auto& c : cells) merged[c.cell] += c.weight;
    CellList list;
    for (auto& [p, w] : merged)
      if (w != 0) list.push_back({p, w});
    if (check_complex && !is_complex(list)) fail(ErrorCode::NotAComplex, "cells do not meet in common faces");
    return canonical(n, d, std::move(list));
  }

  /// From arbitrary (possibly overlapping) weighted cells of dimension d.
  static TropicalCycle from_cells(std::size_t n, int d, const CellList& cells) {
    check_cells(n, d, cells);
    return canonical(n, d, normalize_cells(cells));
  }

  static TropicalCycle whole_space(std::size_t n, const Integer& weight = 1) {
    return from_complex(n, static_cast<int>(n), {{Polyhedron::whole_space(n), weight}});
  }

  std::size_t ambient_dim() const { return n_; }
  int dim() const { return d_; }
  const CellList& cells() const { return cells_; }
  bool is_zero() const { return cells_.empty(); }

  bool is_fan() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const WeightedCell& c) { return c.cell.is_cone(); });
  }

  TropicalCycle translate(const QVec& v) const {
    CellList out;
    for (const auto& c : cells_) out.push_back({c.cell.translate(v), c.weight});
    return from_complex(n_, d_, out);
  }

  TropicalCycle scaled(const Integer& m) const {
    if (m == 0) return zero(n_, d_);
    TropicalCycle c = *this;
    for (auto& x : c.cells_) x.weight *= m;
    return c;
  }

  TropicalCycle negated() const { return scaled(-1); }

  /// Point reflection x -> -x.
  TropicalCycle reflected() const {
    CellList out;
    for (const auto& c : cells_) out.push_back({c.cell.negate(), c.weight});
    return from_complex(n_, d_, out);
  }

  friend bool operator==(const TropicalCycle& a, const TropicalCycle& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.cells_ == b.cells_;
  }

 private:
  static void check_cells(std::size_t n, int d, const CellList& cells) {
    require(d >= 0 && d <= static_cast<int>(n), ErrorCode::InvalidArgument, "cycle dimension out of range");
    for (const auto& c : cells) {
      require(c.cell.ambient_dim() == n, ErrorCode::DimensionMismatch, "cell ambient dimension differs");
      require(c.cell.dim() == d, ErrorCode::DimensionMismatch, "cell dimension differs from the cycle dimension");
    }
  }

  static TropicalCycle canonical(std::size_t n, int d, CellList cells) {
    TropicalCycle c;
    c.n_ = n;
    c.d_ = d;
    CellList nz;
    for (auto& x : cells)
      if (x.weight != 0) nz.push_back(std::move(x));
    c.cells_ = coarsen(std::move(nz));
#ifndef NDEBUG
    require(balancing_violations(c.cells_).empty(), ErrorCode::NotBalanced, "constructed cycle is not balanced");
#endif
    return c;
  }

  std::size_t n_ = 0;
  int d_ = 0;
  CellList cells_;
};

using FanCycle = TropicalCycle;

inline std::vector<BalancingViolation> balancing_check(const TropicalCycle& X) {
  return balancing_violations(X.cells());
}

/// Checks the complex condition first; NOT_A_COMPLEX otherwise.
inline std::vector<BalancingViolation> balancing_check(const CellList& structure) {
  if (!is_complex(structure)) fail(ErrorCode::NotAComplex, "cells do not meet in common faces");
  return balancing_violations(structure);
}

inline bool is_balanced(const TropicalCycle& X) { return balancing_check(X).empty(); }

inline void require_compatible(const TropicalCycle& X, const TropicalCycle& Y, const char* what) {
  require(X.ambient_dim() == Y.ambient_dim(), ErrorCode::DimensionMismatch, std::string(what) + ": ambient mismatch");
  require(X.dim() == Y.dim(), ErrorCode::DimensionMismatch, std::string(what) + ": dimension mismatch");
}

inline TropicalCycle add(const TropicalCycle& X, const TropicalCycle& Y) {
  require_compatible(X, Y, "add");
  if (X.is_zero()) return Y;
  if (Y.is_zero()) return X;
  CellList all = X.cells();
  all.insert(all.end(), Y.cells().begin(), Y.cells().end());
  return TropicalCycle::from_cells(X.ambient_dim(), X.dim(), all);
}

inline TropicalCycle subtract(const TropicalCycle& X, const TropicalCycle& Y) { return add(X, Y.negated()); }

inline TropicalCycle scalar_multiple(const TropicalCycle& X, const Integer& m) { return X.scaled(m); }

inline TropicalCycle sum(std::size_t n, int d, const std::vector<TropicalCycle>& parts) {
  CellList all;
  for (const auto& p : parts) {
    require(p.ambient_dim() == n && p.dim() == d, ErrorCode::DimensionMismatch, "sum: summand shape differs");
    all.insert(all.end(), p.cells().begin(), p.cells().end());
  }
  return TropicalCycle::from_cells(n, d, all);
}

/// Equality of cycles; structural fast path, otherwise X - Y must vanish.
inline bool cycle_equal(const TropicalCycle& X, const TropicalCycle& Y) {
  if (X.ambient_dim() != Y.ambient_dim()) return false;
  if (X.is_zero() && Y.is_zero()) return true;
  if (X.dim() != Y.dim()) return false;
  if (X == Y) return true;
  return subtract(X, Y).is_zero();
}

inline TropicalCycle product(const TropicalCycle& X, const TropicalCycle& Y) {
  const std::size_t n = X.ambient_dim() + Y.ambient_dim();
  const int d = X.dim() + Y.dim();
  CellList out;
  for (const auto& a : X.cells())
    for (const auto& b : Y.cells()) out.push_back({cartesian_product(a.cell, b.cell), a.weight * b.weight});
  return TropicalCycle::from_complex(n, d, out);
}

inline Integer degree0(const TropicalCycle& X) {
  require(X.dim() == 0, ErrorCode::DimensionMismatch, "degree0 needs a 0-dimensional cycle");
  Integer s = 0;
  for (const auto& c : X.cells()) s += c.weight;
  return s;
}

/// Refines A along the cells of B (whose support must contain |A|);
/// weights come from A.
inline CellList common_refinement(const TropicalCycle& A, const CellList& B) {
  std::set<AffineConstraint> hyper;
  for (const auto& c : B) {
    for (const auto& h : c.cell.inequalities()) hyper.insert(h);
    for (const auto& h : c.cell.equations()) hyper.insert(h);
  }
  CellList out = refine_by_hyperplanes(A.cells(), {hyper.begin(), hyper.end()});
  for (const auto& piece : out) {
    const QVec p = piece.cell.relative_interior_point();
    bool inside = std::any_of(B.begin(), B.end(), [&](const WeightedCell& c) { return c.cell.contains(p); });
    require(inside, ErrorCode::InvalidArgument, "common_refinement: support of A is not inside support of B");
  }
  return out;
}

/// P ⊆ ∪ cells.  Refines P along every cell meeting it; each piece is then
/// inside a cell as soon as its relative interior point is.
inline bool covered_by(const Polyhedron& P, const CellList& cells) {
  std::set<AffineConstraint> hyper;
  CellList near;
  for (const auto& c : cells) {
    if (!detail::may_meet(P, c.cell)) continue;
    near.push_back(c);
    for (const auto& h : c.cell.inequalities()) hyper.insert(h);
    for (const auto& h : c.cell.equations()) hyper.insert(h);
  }
  for (const auto& piece : refine_by_hyperplanes({{P, 1}}, {hyper.begin(), hyper.end()})) {
    const QVec p = piece.cell.relative_interior_point();
    if (std::none_of(near.begin(), near.end(), [&](const WeightedCell& c) { return c.cell.contains(p); }))
      return false;
  }
  return true;
}

inline bool support_contains(const TropicalCycle& X, const QVec& p) {
  return std::any_of(X.cells().begin(), X.cells().end(), [&](const WeightedCell& c) { return c.cell.contains(p); });
}

inline std::ostream& operator<<(std::ostream& os, const TropicalCycle& X) {
  os << "cycle(n=" << X.ambient_dim() << ", d=" << X.dim() << ")[";
  for (const auto& c : X.cells()) os << "\n  " << c.weight << " * " << c.cell;
  return os << "]";
}

}  // namespace troplith
