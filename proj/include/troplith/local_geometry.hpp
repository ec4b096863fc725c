#pragma once

// Local fans at points, lineality and splitting dimensions, and the skeleta
// cut out by the local profile.
//
// The splitting dimension has no known decision procedure beyond curves.
// spldim answers exactly when dim F <= 1, when F is a sum of weighted linear
// spaces, or when the certified lower bound meets the upper bound; otherwise
// it reports Unknown together with the best certified lower bound.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "troplith/cycle.hpp"
#include "troplith/errors.hpp"
#include "troplith/exact_arith.hpp"
#include "troplith/polyhedron.hpp"

namespace troplith {

/// Cone of directions u with p + εu ∈ P for small ε > 0; requires p ∈ P.
inline Polyhedron tangent_cone(const Polyhedron& P, const QVec& p) {
  const std::size_t n = P.ambient_dim();
  ZMatrix rays = P.rays();
  for (const auto& v : P.vertices()) {
    QVec d = sub_vec(v, p);
    if (!is_zero_vec(d)) rays.push_back(make_primitive(clear_denominators(d)));
  }
  return Polyhedron::from_generators(n, {zero_q(n)}, rays, P.lineality());
}

/// Star_X(p); the zero fan when p ∉ |X|.
inline TropicalCycle star(const TropicalCycle& X, const QVec& p) {
  require(p.size() == X.ambient_dim(), ErrorCode::DimensionMismatch, "star: point has wrong length");
  CellList cells;
  for (const auto& c : X.cells())
    if (c.cell.contains(p)) cells.push_back({tangent_cone(c.cell, p), c.weight});
  return TropicalCycle::from_complex(X.ambient_dim(), X.dim(), cells);
}

/// Every face of every cell, each once, in Polyhedron order.
inline std::vector<Polyhedron> all_faces(const TropicalCycle& X) {
  std::set<Polyhedron> s;
  for (const auto& c : X.cells())
    for (auto& f : c.cell.all_faces()) s.insert(std::move(f));
  return {s.begin(), s.end()};
}

/// F + w = F for every basis vector w of V.
inline bool invariant_under(const TropicalCycle& F, const Subspace& V) {
  for (const auto& w : V.basis())
    if (!cycle_equal(F.translate(w), F)) return false;
  return true;
}

/// LinSp(F) = {p : Star_F(p) = F}; nullopt for the zero fan.
///
/// The set is a linear space that is a union of relatively open faces, so it
/// is the span of the largest face whose star is F.
inline std::optional<Subspace> lineality_space(const TropicalCycle& F) {
  require(F.is_fan(), ErrorCode::InvalidArgument, "lineality_space needs a fan cycle");
  const std::size_t n = F.ambient_dim();
  if (F.is_zero()) return std::nullopt;
  Subspace V = F.cells().front().cell.poly_lineality();
  for (const auto& c : F.cells()) V = subspace_intersect(V, c.cell.poly_lineality());
  if (!invariant_under(F, V)) V = Subspace::span(n, ZMatrix{});
  std::vector<Polyhedron> faces = all_faces(F);
  std::stable_sort(faces.begin(), faces.end(),
                   [](const Polyhedron& a, const Polyhedron& b) { return a.dim() > b.dim(); });
  for (const auto& tau : faces) {
    if (tau.dim() <= V.dim()) break;
    if (cycle_equal(star(F, tau.relative_interior_point()), F)) {
      V = tau.linear_span();
      break;
    }
  }
  require(invariant_under(F, V), ErrorCode::Internal, "lineality_space: verification failed");
  return V;
}

/// nullopt stands for infinity.
inline std::optional<int> lindim(const TropicalCycle& F) {
  auto V = lineality_space(F);
  if (!V) return std::nullopt;
  return static_cast<int>(V->dim());
}

struct SplitDim {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Unknown;
  int value = 0;        // exact value when Finite
  int lower = 0;        // certified lower bound
  int upper = 0;        // upper bound
  std::vector<TropicalCycle> certificate;  // summands of lineality >= lower, re-summing to F

  bool known() const { return kind != Kind::Unknown; }
};

namespace detail {

/// F as a sum of weighted linear spaces, or nullopt.
inline std::optional<std::vector<TropicalCycle>> linear_peeling(const TropicalCycle& F) {
  const std::size_t n = F.ambient_dim();
  std::vector<TropicalCycle> parts;
  TropicalCycle G = F;
  for (std::size_t guard = 0; !G.is_zero(); ++guard) {
    if (guard > F.cells().size()) return std::nullopt;
    const WeightedCell& c = G.cells().front();
    Subspace V = c.cell.linear_span();
    CellList whole{{Polyhedron::from_generators(n, {zero_q(n)}, {}, V.integer_basis()), c.weight}};
    TropicalCycle L = TropicalCycle::from_complex(n, F.dim(), whole);
    G = subtract(G, L);
    for (const auto& d : G.cells())
      if (d.cell.linear_span() == V) return std::nullopt;
    parts.push_back(std::move(L));
  }
  return parts;
}

/// Greedy peeling of stars at relative interior points of k-dimensional
/// faces; each star is invariant under the span of its face.
inline std::optional<std::vector<TropicalCycle>> star_peeling(const TropicalCycle& F, int k) {
  std::vector<TropicalCycle> parts;
  TropicalCycle G = F;
  const std::size_t budget = 2 * F.cells().size() + 4;
  for (std::size_t step = 0; !G.is_zero(); ++step) {
    if (step >= budget || G.cells().size() > 4 * F.cells().size() + 8) return std::nullopt;
    std::optional<TropicalCycle> S;
    for (const auto& tau : all_faces(G)) {
      if (tau.dim() != k) continue;
      S = star(G, tau.relative_interior_point());
      break;
    }
    if (!S) return std::nullopt;
    auto l = lindim(*S);
    if (!l || *l < k) return std::nullopt;
    G = subtract(G, *S);
    parts.push_back(std::move(*S));
  }
  return parts;
}

inline bool resums_to(const std::vector<TropicalCycle>& parts, const TropicalCycle& F) {
  return cycle_equal(sum(F.ambient_dim(), F.dim(), parts), F);
}

}  // namespace detail

inline SplitDim spldim(const TropicalCycle& F) {
  require(F.is_fan(), ErrorCode::InvalidArgument, "spldim needs a fan cycle");
  SplitDim out;
  if (F.is_zero()) {
    out.kind = SplitDim::Kind::Infinite;
    return out;
  }
  const int d = F.dim();
  const int l = *lindim(F);
  auto finite = [&](int v, std::vector<TropicalCycle> cert) {
    require(detail::resums_to(cert, F), ErrorCode::Internal, "spldim: certificate does not re-sum");
    out.kind = SplitDim::Kind::Finite;
    out.value = out.lower = out.upper = v;
    out.certificate = std::move(cert);
    return out;
  };
  if (l == d) return finite(d, {F});
  if (auto parts = detail::linear_peeling(F)) return finite(d, std::move(*parts));
  // not a sum of d-dimensional linear spaces
  if (l == d - 1) return finite(l, {F});
  out.lower = l;
  out.upper = d - 1;
  out.certificate = {F};
  for (int k = d - 1; k > l; --k) {
    if (auto parts = detail::star_peeling(F, k); parts && detail::resums_to(*parts, F)) {
      if (k == d - 1) return finite(k, std::move(*parts));
      out.lower = k;
      out.certificate = std::move(*parts);
      break;
    }
  }
  out.kind = SplitDim::Kind::Unknown;
  return out;
}

struct LocalProfile {
  QVec point;
  std::optional<int> l;  // nullopt = infinity
  SplitDim s;
};

inline LocalProfile profile(const TropicalCycle& X, const QVec& p) {
  TropicalCycle S = star(X, p);
  return {p, lindim(S), spldim(S)};
}

/// Faces of X with their profiles at a relative interior point.
struct FaceProfile {
  Polyhedron face;
  LocalProfile profile;
};

inline std::vector<FaceProfile> face_profiles(const TropicalCycle& X) {
  std::vector<FaceProfile> out;
  for (auto& f : all_faces(X)) {
    LocalProfile pr = profile(X, f.relative_interior_point());
    out.push_back({std::move(f), std::move(pr)});
  }
  return out;
}

namespace detail {

/// Drops faces contained in another kept face.
inline std::vector<Polyhedron> maximal_only(std::vector<Polyhedron> faces) {
  std::vector<Polyhedron> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool inside = false;
    for (std::size_t j = 0; j < faces.size() && !inside; ++j)
      inside = j != i && faces[j].dim() > faces[i].dim() && faces[j].contains(faces[i]);
    if (!inside) out.push_back(faces[i]);
  }
  return out;
}

/// s ≤ k decided from the oracle answer, or ORACLE_INCOMPLETE.
inline bool split_at_most(const SplitDim& s, int k) {
  if (s.kind == SplitDim::Kind::Infinite) return false;
  if (s.kind == SplitDim::Kind::Finite) return s.value <= k;
  if (s.lower > k) return false;
  if (s.upper <= k) return true;
  fail(ErrorCode::OracleIncomplete, "splitting dimension undecided: certified " + std::to_string(s.lower) +
                                        " <= s <= " + std::to_string(s.upper));
}

}  // namespace detail

/// X^{(k)} = {p : l(p) ≤ k} as the maximal faces it contains.
inline std::vector<Polyhedron> skeleton_l(const TropicalCycle& X, int k) {
  std::vector<Polyhedron> keep;
  for (const auto& fp : face_profiles(X))
    if (fp.profile.l && *fp.profile.l <= k) keep.push_back(fp.face);
  return detail::maximal_only(std::move(keep));
}

/// X^{[k]} = {p : s(p) ≤ k}; ORACLE_INCOMPLETE when some profile is undecided.
inline std::vector<Polyhedron> skeleton_s(const TropicalCycle& X, int k) {
  std::vector<Polyhedron> keep;
  for (const auto& fp : face_profiles(X))
    if (detail::split_at_most(fp.profile.s, k)) keep.push_back(fp.face);
  return detail::maximal_only(std::move(keep));
}

/// Equality of finite unions of polyhedra as point sets.
inline bool same_point_set(const std::vector<Polyhedron>& A, const std::vector<Polyhedron>& B) {
  CellList a, b;
  for (const auto& P : A) a.push_back({P, 1});
  for (const auto& P : B) b.push_back({P, 1});
  for (const auto& P : A)
    if (!covered_by(P, b)) return false;
  for (const auto& P : B)
    if (!covered_by(P, a)) return false;
  return true;
}

/// Tangent cones at p of the members containing p.
inline std::vector<Polyhedron> star_of_set(const std::vector<Polyhedron>& S, const QVec& p) {
  std::vector<Polyhedron> out;
  for (const auto& P : S)
    if (P.contains(p)) out.push_back(tangent_cone(P, p));
  return out;
}

/// Star_X(p)^{[k]} = Star_{X^{[k]}}(p), and likewise for (k).
inline bool star_compatibility_check(const TropicalCycle& X, const QVec& p, int k) {
  TropicalCycle S = star(X, p);
  bool s_ok = same_point_set(skeleton_s(S, k), star_of_set(skeleton_s(X, k), p));
  bool l_ok = same_point_set(skeleton_l(S, k), star_of_set(skeleton_l(X, k), p));
  return s_ok && l_ok;
}

}  // namespace troplith
