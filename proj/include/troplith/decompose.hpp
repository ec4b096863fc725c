#pragma once

// Decomposition of a cycle into translated fan cycles, the equivalence
// decider through recession fans, and explicit bounded-equivalence witnesses.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "troplith/affine_map.hpp"
#include "troplith/cycle.hpp"
#include "troplith/divisor.hpp"
#include "troplith/errors.hpp"
#include "troplith/exact_arith.hpp"
#include "troplith/local_geometry.hpp"
#include "troplith/morphism.hpp"
#include "troplith/pl_function.hpp"
#include "troplith/recession.hpp"
#include "troplith/stable_intersection.hpp"

namespace troplith {

/// point + direction, with point reduced modulo direction.
struct AffineSubspace {
  Subspace direction;
  QVec point;

  static AffineSubspace through(const Polyhedron& P) {
    Subspace V = P.linear_span();
    return {V, V.reduce(P.vertices().front())};
  }

  Polyhedron as_polyhedron() const {
    return Polyhedron::from_generators(point.size(), {point}, {}, direction.integer_basis());
  }

  friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
    return a.direction == b.direction && a.point == b.point;
  }
  friend bool operator<(const AffineSubspace& a, const AffineSubspace& b) {
    return std::tie(a.point, a.direction) < std::tie(b.point, b.direction);
  }
};

struct SplittingLocus {
  int s = 0;
  std::vector<AffineSubspace> subspaces;  // sorted; the step works on the first
  std::vector<Polyhedron> cells;          // s-cells of X^{[s]}
};

/// s = min s_X and X^{[s]} as a union of affine s-spaces.
inline SplittingLocus minimal_splitting_locus(const TropicalCycle& X) {
  require(!X.is_zero(), ErrorCode::InvalidArgument, "minimal_splitting_locus of the zero cycle");
  auto profiles = face_profiles(X);
  int s_min = X.dim() + 1;
  for (const auto& fp : profiles)
    if (fp.profile.s.kind == SplitDim::Kind::Finite) s_min = std::min(s_min, fp.profile.s.value);
  for (const auto& fp : profiles)
    if (fp.profile.s.kind == SplitDim::Kind::Unknown && fp.profile.s.lower < s_min)
      fail(ErrorCode::OracleIncomplete, "splitting dimension undecided at a face of dimension " +
                                            std::to_string(fp.face.dim()) + ": certified " +
                                            std::to_string(fp.profile.s.lower) + " <= s <= " +
                                            std::to_string(fp.profile.s.upper));
  require(s_min <= X.dim(), ErrorCode::Internal, "minimal_splitting_locus: no finite profile");
  SplittingLocus out{s_min, {}, {}};
  CellList in_locus;
  for (const auto& fp : profiles) {
    if (fp.profile.s.kind != SplitDim::Kind::Finite || fp.profile.s.value != s_min) continue;
    in_locus.push_back({fp.face, 1});
    if (fp.face.dim() != s_min) continue;
    out.cells.push_back(fp.face);
    AffineSubspace W = AffineSubspace::through(fp.face);
    if (std::find(out.subspaces.begin(), out.subspaces.end(), W) == out.subspaces.end()) out.subspaces.push_back(W);
  }
  std::sort(out.subspaces.begin(), out.subspaces.end());
  for (const auto& W : out.subspaces)
    require(covered_by(W.as_polyhedron(), in_locus), ErrorCode::Internal,
            "minimal_splitting_locus: locus is not a union of affine subspaces");
  return out;
}

struct StarStep {
  TropicalCycle rest;
  TropicalCycle fan;
  QVec point;
};

/// X - (Star_X(p) + p) for p in the relative interior of the smallest s-cell
/// of the first subspace of the locus.
inline StarStep subtract_star_step(const TropicalCycle& X, const SplittingLocus& locus) {
  require(!locus.subspaces.empty(), ErrorCode::InvalidArgument, "subtract_star_step: empty locus");
  const AffineSubspace& W = locus.subspaces.front();
  const Polyhedron Wp = W.as_polyhedron();
  std::optional<Polyhedron> cell;
  for (const auto& c : locus.cells)
    if (Wp.contains(c) && (!cell || c < *cell)) cell = c;
  require(cell.has_value(), ErrorCode::Internal, "subtract_star_step: subspace without s-cell");
  QVec p = cell->relative_interior_point();
  TropicalCycle F = star(X, p);
  TropicalCycle rest = subtract(X, F.translate(p));
  require(!support_contains(rest, p), ErrorCode::Internal, "subtract_star_step: point survived the subtraction");
  return {std::move(rest), std::move(F), std::move(p)};
}

struct DecompositionWitness {
  struct Summand {
    TropicalCycle fan;
    QVec point;
  };
  std::vector<Summand> summands;
  TropicalCycle target;

  TropicalCycle resum() const {
    std::vector<TropicalCycle> parts;
    for (const auto& s : summands) parts.push_back(s.fan.translate(s.point));
    return sum(target.ambient_dim(), target.dim(), parts);
  }

  bool verify() const {
    for (const auto& s : summands)
      if (s.fan.is_zero() || !s.fan.is_fan()) return false;
    return cycle_equal(resum(), target);
  }
};

/// X = Σ (F_i + p_i) by repeated star subtraction along the splitting locus.
inline DecompositionWitness decompose(const TropicalCycle& X) {
  DecompositionWitness w{{}, X};
  const std::size_t d1 = static_cast<std::size_t>(X.dim()) + 1;
  const std::size_t guard = std::max<std::size_t>(1, X.cells().size() * d1 * d1);
  TropicalCycle cur = X;
  std::optional<SplittingLocus> expected;  // previous locus minus the used subspace
  for (std::size_t iter = 0; !cur.is_zero(); ++iter) {
    require(iter < guard, ErrorCode::LoopGuard, "decompose: iteration guard exceeded");
    SplittingLocus locus = minimal_splitting_locus(cur);
    if (expected) {
      bool decreased = locus.s > expected->s;
      if (locus.s == expected->s) {
        decreased = true;
        for (const auto& W : locus.subspaces)
          if (std::find(expected->subspaces.begin(), expected->subspaces.end(), W) == expected->subspaces.end())
            decreased = false;
      }
      require(decreased, ErrorCode::Internal, "decompose: splitting locus did not shrink");
    }
    StarStep step = subtract_star_step(cur, locus);
    w.summands.push_back({std::move(step.fan), std::move(step.point)});
    cur = std::move(step.rest);
    locus.subspaces.erase(locus.subspaces.begin());
    expected = std::move(locus);
  }
  require(w.verify(), ErrorCode::Internal, "decompose: witness does not re-sum to the input");
  return w;
}

enum class Verdict { Equivalent, NotEquivalent, Unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "EQUIVALENT";
    case Verdict::NotEquivalent: return "NOT_EQUIVALENT";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

struct EquivalenceReport {
  Verdict verdict = Verdict::Unknown;
  TropicalCycle rec_x, rec_y;
  std::optional<NumericalSample> sample;  // distinguishing test cycle, when found
};

/// Bounded equivalence on R^n: equal recession cycles.
inline EquivalenceReport recession_equiv(const TropicalCycle& X, const TropicalCycle& Y, int sample_trials = 20) {
  require(X.ambient_dim() == Y.ambient_dim() && X.dim() == Y.dim(), ErrorCode::DimensionMismatch,
          "recession_equiv: shapes differ");
  EquivalenceReport r;
  r.rec_x = recession_cycle(X);
  r.rec_y = recession_cycle(Y);
  r.verdict = cycle_equal(r.rec_x, r.rec_y) ? Verdict::Equivalent : Verdict::NotEquivalent;
  if (r.verdict == Verdict::NotEquivalent && sample_trials > 0) {
    NumericalSample s = numerical_equiv_sample(X, Y, sample_trials);
    if (!s.consistent) r.sample = std::move(s);
  }
  return r;
}

/// f_*(φ · Y) = claim with φ bounded.
struct BoundedEquivWitness {
  IntegerAffineMap f;
  TropicalCycle Y;
  RationalFunctionExpr phi;
  TropicalCycle claim;

  bool verify() const {
    if (!is_bounded(restrict_rational(phi, Y))) return false;
    return cycle_equal(pushforward(f, divisor(phi, Y)), claim);
  }
};

/// Witnesses X_{i-1} ∼ X_{i-1} + v_i e_i chaining X to X + v.
inline std::vector<BoundedEquivWitness> translation_witness(const TropicalCycle& X, const QVec& v) {
  const std::size_t n = X.ambient_dim();
  require(v.size() == n, ErrorCode::DimensionMismatch, "translation_witness: vector has wrong length");
  std::vector<BoundedEquivWitness> out;
  TropicalCycle cur = X;
  const TropicalCycle line = TropicalCycle::whole_space(1);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    const Rational mu = v[i];
    ZVec t = zero_z(n + 1), none = zero_z(n + 1);
    t[n] = 1;
    // max{0, t} - max{0, t - μ}: 0, then t, then μ
    RationalFunctionExpr phi{TropicalPolynomial::make(n + 1, {{none, 0}, {t, 0}}),
                             TropicalPolynomial::make(n + 1, {{none, 0}, {t, -mu}})};
    ZMatrix A;
    for (std::size_t r = 0; r < n; ++r) {
      ZVec row = zero_z(n + 1);
      row[r] = 1;
      if (r == i) row[n] = 1;
      A.push_back(row);
    }
    QVec step = zero_q(n);
    step[i] = mu;
    TropicalCycle next = cur.translate(step);
    BoundedEquivWitness w{IntegerAffineMap::make(n + 1, A, zero_q(n)), product(cur, line), phi, subtract(cur, next)};
    require(w.verify(), ErrorCode::Internal, "translation_witness: claim failed verification");
    out.push_back(std::move(w));
    cur = std::move(next);
  }
  return out;
}

/// π_*((max{t,p} - max{t,q}) · F) = F_p - F_q for F in R^n x R.
inline bool family_fibers_check(const TropicalCycle& F, const Rational& p, const Rational& q) {
  require(F.ambient_dim() >= 1, ErrorCode::DimensionMismatch, "family_fibers_check needs R^n x R");
  const std::size_t n = F.ambient_dim() - 1;
  RationalFunctionExpr phi{max_last_coordinate(n, p), max_last_coordinate(n, q)};
  std::vector<std::size_t> keep(n);
  for (std::size_t i = 0; i < n; ++i) keep[i] = i;
  TropicalCycle lhs = pushforward(IntegerAffineMap::coordinate_projection(n + 1, keep), divisor(phi, F));
  TropicalCycle rhs = subtract(fiber(F, p), fiber(F, q));
  return cycle_equal(lhs, rhs);
}

/// Rec(X · Y) = Rec(X) · Rec(Y).
inline bool bezout_check(const TropicalCycle& X, const TropicalCycle& Y) {
  return cycle_equal(recession_cycle(stable_intersect(X, Y)),
                     stable_intersect(recession_cycle(X), recession_cycle(Y)));
}

}  // namespace troplith
