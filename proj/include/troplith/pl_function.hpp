#pragma once

// Piecewise integer-affine functions on cycles and their max-plus forms.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "troplith/affine_map.hpp"
#include "troplith/cycle.hpp"
#include "troplith/errors.hpp"
#include "troplith/exact_arith.hpp"
#include "troplith/polyhedron.hpp"

namespace troplith {

struct AffinePiece {
  ZVec linear;
  Rational constant;

  Rational eval(const QVec& x) const { return dot(linear, x) + constant; }

  friend bool operator==(const AffinePiece& a, const AffinePiece& b) {
    return a.linear == b.linear && a.constant == b.constant;
  }
  friend bool operator<(const AffinePiece& a, const AffinePiece& b) {
    return std::tie(a.linear, a.constant) < std::tie(b.linear, b.constant);
  }
};

inline AffinePiece operator+(const AffinePiece& a, const AffinePiece& b) {
  return {add_vec(a.linear, b.linear), a.constant + b.constant};
}
inline AffinePiece operator-(const AffinePiece& a) { return {scale_vec(a.linear, Integer(-1)), -a.constant}; }

struct TropicalTerm {
  ZVec exponent;
  Rational coefficient;
};

/// x -> max over terms of <exponent, x> + coefficient.
class TropicalPolynomial {
 public:
  TropicalPolynomial() = default;

  static TropicalPolynomial make(std::size_t n, std::vector<TropicalTerm> terms) {
    require(!terms.empty(), ErrorCode::InvalidArgument, "tropical polynomial without terms");
    std::set<ZVec> seen;
    for (const auto& t : terms) {
      require(t.exponent.size() == n, ErrorCode::DimensionMismatch, "term exponent has wrong length");
      require(seen.insert(t.exponent).second, ErrorCode::InvalidArgument, "duplicate exponent in tropical polynomial");
    }
    TropicalPolynomial p;
    p.n_ = n;
    p.terms_ = std::move(terms);
    return p;
  }

  static TropicalPolynomial constant(std::size_t n, const Rational& c = 0) { return make(n, {{zero_z(n), c}}); }

  std::size_t ambient_dim() const { return n_; }
  const std::vector<TropicalTerm>& terms() const { return terms_; }

  Rational eval(const QVec& x) const {
    Rational best = terms_.front().coefficient + dot(terms_.front().exponent, x);
    for (const auto& t : terms_) best = std::max(best, t.coefficient + dot(t.exponent, x));
    return best;
  }

  /// Maximizing term at x with ties broken by the lexicographically smallest exponent.
  const TropicalTerm& argmax(const QVec& x) const {
    const TropicalTerm* best = nullptr;
    Rational val;
    for (const auto& t : terms_) {
      Rational v = t.coefficient + dot(t.exponent, x);
      if (!best || v > val || (v == val && t.exponent < best->exponent)) {
        best = &t;
        val = v;
      }
    }
    return *best;
  }

  /// Tie hyperplanes <e_i - e_j, x> = c_j - c_i, primitive and deduplicated.
  std::vector<AffineConstraint> tie_hyperplanes() const {
    std::set<AffineConstraint> out;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      for (std::size_t j = i + 1; j < terms_.size(); ++j) {
        ZVec a = sub_vec(terms_[i].exponent, terms_[j].exponent);
        Rational b = terms_[j].coefficient - terms_[i].coefficient;
        Integer g = content(a);
        for (auto& x : a) x /= g;
        b /= g;
        auto lead = std::find_if(a.begin(), a.end(), [](const Integer& x) { return x != 0; });
        if (*lead < 0) {
          for (auto& x : a) x = -x;
          b = -b;
        }
        out.insert({a, b});
      }
    return {out.begin(), out.end()};
  }

 private:
  std::size_t n_ = 0;
  std::vector<TropicalTerm> terms_;
};

/// numerator - denominator.
struct RationalFunctionExpr {
  TropicalPolynomial numerator;
  TropicalPolynomial denominator;

  Rational eval(const QVec& x) const { return numerator.eval(x) - denominator.eval(x); }
};

/// A function on the support of a weighted complex, affine on each cell.
class PLFunction {
 public:
  PLFunction() = default;

  /// `cells` must form a complex; continuity is checked when `check`.
  static PLFunction make(std::size_t n, int d, CellList cells, std::vector<AffinePiece> pieces, bool check = false) {
    require(cells.size() == pieces.size(), ErrorCode::InvalidArgument, "one affine piece per cell expected");
    for (const auto& c : cells)
      require(c.cell.dim() == d && c.cell.ambient_dim() == n, ErrorCode::DimensionMismatch, "carrier cell shape");
    for (const auto& p : pieces) require(p.linear.size() == n, ErrorCode::DimensionMismatch, "linear part length");
    PLFunction f;
    f.n_ = n;
    f.d_ = d;
    f.cells_ = std::move(cells);
    f.pieces_ = std::move(pieces);
    if (check) {
      require(is_complex(f.cells_), ErrorCode::NotAComplex, "PL function carrier is not a complex");
      require(f.is_continuous(), ErrorCode::InvalidArgument, "PL function pieces disagree on a shared face");
    }
    return f;
  }

  static PLFunction affine_on(const TropicalCycle& X, const AffinePiece& piece) {
    return make(X.ambient_dim(), X.dim(), X.cells(), std::vector<AffinePiece>(X.cells().size(), piece));
  }

  std::size_t ambient_dim() const { return n_; }
  int dim() const { return d_; }
  const CellList& cells() const { return cells_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }

  /// The weighted carrier as a cycle.
  TropicalCycle carrier() const { return TropicalCycle::from_complex(n_, d_, cells_); }

  std::optional<std::size_t> locate(const QVec& x) const {
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i].cell.contains(x)) return i;
    return std::nullopt;
  }

  Rational eval(const QVec& x) const {
    auto i = locate(x);
    require(i.has_value(), ErrorCode::InvalidArgument, "eval: point outside the support");
    return pieces_[*i].eval(x);
  }

  bool is_continuous() const {
    for (std::size_t i = 0; i < cells_.size(); ++i)
      for (std::size_t j = i + 1; j < cells_.size(); ++j) {
        auto I = intersect(cells_[i].cell, cells_[j].cell);
        if (!I) continue;
        const AffinePiece &a = pieces_[i], &b = pieces_[j];
        for (const auto& v : I->vertices())
          if (a.eval(v) != b.eval(v)) return false;
        for (const auto& r : I->rays())
          if (dot_z(a.linear, r) != dot_z(b.linear, r)) return false;
        for (const auto& l : I->lineality())
          if (dot_z(a.linear, l) != dot_z(b.linear, l)) return false;
      }
    return true;
  }

 private:
  std::size_t n_ = 0;
  int d_ = 0;
  CellList cells_;
  std::vector<AffinePiece> pieces_;
};

namespace detail {

inline std::vector<AffineConstraint> merge_hyperplanes(std::vector<AffineConstraint> a,
                                                       const std::vector<AffineConstraint>& b) {
  std::set<AffineConstraint> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return {s.begin(), s.end()};
}

}  // namespace detail

inline PLFunction restrict_polynomial(const TropicalPolynomial& f, const TropicalCycle& X) {
  require(f.ambient_dim() == X.ambient_dim(), ErrorCode::DimensionMismatch, "restrict_polynomial: ambient mismatch");
  CellList cells = refine_by_hyperplanes(X.cells(), f.tie_hyperplanes());
  std::vector<AffinePiece> pieces;
  for (const auto& c : cells) {
    const TropicalTerm& t = f.argmax(c.cell.relative_interior_point());
    pieces.push_back({t.exponent, t.coefficient});
  }
  return PLFunction::make(X.ambient_dim(), X.dim(), std::move(cells), std::move(pieces));
}

inline PLFunction restrict_rational(const RationalFunctionExpr& r, const TropicalCycle& X) {
  require(r.numerator.ambient_dim() == X.ambient_dim() && r.denominator.ambient_dim() == X.ambient_dim(),
          ErrorCode::DimensionMismatch, "restrict_rational: ambient mismatch");
  CellList cells = refine_by_hyperplanes(
      X.cells(), detail::merge_hyperplanes(r.numerator.tie_hyperplanes(), r.denominator.tie_hyperplanes()));
  std::vector<AffinePiece> pieces;
  for (const auto& c : cells) {
    const QVec p = c.cell.relative_interior_point();
    const TropicalTerm& a = r.numerator.argmax(p);
    const TropicalTerm& b = r.denominator.argmax(p);
    pieces.push_back({sub_vec(a.exponent, b.exponent), a.coefficient - b.coefficient});
  }
  return PLFunction::make(X.ambient_dim(), X.dim(), std::move(cells), std::move(pieces));
}

/// φ ∘ f on X; requires f(|X|) ⊆ support of φ.
inline PLFunction pullback(const PLFunction& phi, const IntegerAffineMap& f, const TropicalCycle& X) {
  require(f.domain_dim == X.ambient_dim() && f.codomain_dim() == phi.ambient_dim(), ErrorCode::DimensionMismatch,
          "pullback: dimensions do not match");
  CellList cells;
  std::vector<AffinePiece> pieces;
  for (const auto& sigma : X.cells()) {
    for (std::size_t k = 0; k < phi.cells().size(); ++k) {
      auto [in, eq] = phi.cells()[k].cell.preimage_constraints(f.matrix, f.shift);
      in.insert(in.end(), sigma.cell.inequalities().begin(), sigma.cell.inequalities().end());
      eq.insert(eq.end(), sigma.cell.equations().begin(), sigma.cell.equations().end());
      auto piece = Polyhedron::try_from_inequalities(X.ambient_dim(), in, eq);
      if (!piece || piece->dim() != X.dim()) continue;
      const AffinePiece& a = phi.pieces()[k];
      cells.push_back({std::move(*piece), sigma.weight});
      pieces.push_back({f.pull_linear(a.linear), dot(a.linear, f.shift) + a.constant});
    }
  }
  PLFunction out = PLFunction::make(X.ambient_dim(), X.dim(), std::move(cells), std::move(pieces));
  require(cycle_equal(out.carrier(), X), ErrorCode::InvalidArgument, "pullback: f(|X|) is not inside the support");
  return out;
}

/// Pointwise sum; both functions must live on the same weighted support.
inline PLFunction add(const PLFunction& a, const PLFunction& b) {
  require(a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim(), ErrorCode::DimensionMismatch,
          "PL add: shape mismatch");
  CellList cells;
  std::vector<AffinePiece> pieces;
  for (std::size_t i = 0; i < a.cells().size(); ++i)
    for (std::size_t j = 0; j < b.cells().size(); ++j) {
      auto I = intersect(a.cells()[i].cell, b.cells()[j].cell);
      if (!I || I->dim() != a.dim()) continue;
      cells.push_back({std::move(*I), a.cells()[i].weight});
      pieces.push_back(a.pieces()[i] + b.pieces()[j]);
    }
  PLFunction out = PLFunction::make(a.ambient_dim(), a.dim(), std::move(cells), std::move(pieces));
  require(cycle_equal(out.carrier(), a.carrier()) && cycle_equal(a.carrier(), b.carrier()),
          ErrorCode::InvalidArgument, "PL add: carriers differ");
  return out;
}

inline PLFunction negate(const PLFunction& a) {
  std::vector<AffinePiece> pieces;
  for (const auto& p : a.pieces()) pieces.push_back(-p);
  return PLFunction::make(a.ambient_dim(), a.dim(), a.cells(), std::move(pieces));
}

inline PLFunction subtract(const PLFunction& a, const PLFunction& b) { return add(a, negate(b)); }

inline PLFunction scale(const PLFunction& a, const Integer& m) {
  std::vector<AffinePiece> pieces;
  for (const auto& p : a.pieces()) pieces.push_back({scale_vec(p.linear, m), p.constant * m});
  return PLFunction::make(a.ambient_dim(), a.dim(), a.cells(), std::move(pieces));
}

/// Linear part vanishes on every recession direction of its cell.
inline bool is_bounded(const PLFunction& phi) {
  for (std::size_t i = 0; i < phi.cells().size(); ++i) {
    const auto& P = phi.cells()[i].cell;
    const auto& a = phi.pieces()[i].linear;
    for (const auto& r : P.rays())
      if (dot_z(a, r) != 0) return false;
    for (const auto& l : P.lineality())
      if (dot_z(a, l) != 0) return false;
  }
  return true;
}

namespace detail {

/// Rational solution of <a, r_i> = values_i for the rays of a simplicial
/// full-dimensional cone.
inline QVec interpolate(const ZMatrix& rays, const std::vector<Rational>& values, std::size_t n) {
  require(rays.size() == n && rank_z(rays, n) == n, ErrorCode::NotSimplicial,
          "cone is not full-dimensional simplicial");
  // solve R a = values by elimination on the augmented matrix
  QMatrix aug;
  for (std::size_t i = 0; i < n; ++i) {
    QVec row = to_q(rays[i]);
    row.push_back(values[i]);
    aug.push_back(std::move(row));
  }
  RowEchelon e = rref(aug, n + 1);
  QVec a(n);
  for (std::size_t i = 0; i < e.rows.size(); ++i) a[e.pivots[i]] = e.rows[i][n];
  return a;
}

inline ZMatrix cone_rays_checked(const Polyhedron& cone, std::size_t n) {
  require(cone.is_cone() && cone.lineality().empty() && cone.dim() == static_cast<int>(n),
          ErrorCode::NotSimplicial, "expected a full-dimensional pointed cone");
  require(cone.rays().size() == n, ErrorCode::NotSimplicial, "cone is not simplicial");
  return cone.rays();
}

}  // namespace detail

/// The function linear on each maximal cone of a complete simplicial fan with
/// prescribed values on the primitive ray generators.
inline PLFunction pl_from_ray_values(std::size_t n, const std::vector<Polyhedron>& maximal_cones,
                                     const std::map<ZVec, Rational>& values) {
  CellList cells;
  std::vector<AffinePiece> pieces;
  for (const auto& cone : maximal_cones) {
    ZMatrix rays = detail::cone_rays_checked(cone, n);
    std::vector<Rational> vals;
    for (const auto& r : rays) {
      auto it = values.find(r);
      require(it != values.end(), ErrorCode::InvalidArgument, "pl_from_ray_values: missing ray value");
      vals.push_back(it->second);
    }
    QVec a = detail::interpolate(rays, vals, n);
    ZVec lin;
    for (const auto& x : a) {
      require(is_integer(x), ErrorCode::NotIntegral, "interpolated linear part is not integral");
      lin.push_back(num(x));
    }
    cells.push_back({cone, 1});
    pieces.push_back({std::move(lin), 0});
  }
  return PLFunction::make(n, static_cast<int>(n), std::move(cells), std::move(pieces));
}

/// Smallest positive a such that the interpolation of a on `ray` and 0 on all
/// other rays has integral linear parts.
inline Integer integral_indicator_value(std::size_t n, const std::vector<Polyhedron>& maximal_cones, const ZVec& ray) {
  Integer l = 1;
  for (const auto& cone : maximal_cones) {
    ZMatrix rays = detail::cone_rays_checked(cone, n);
    std::vector<Rational> vals;
    for (const auto& r : rays) vals.push_back(r == ray ? Rational(1) : Rational(0));
    for (const auto& x : detail::interpolate(rays, vals, n)) l = lcm_int(l, den(x));
  }
  return l;
}

/// Writes a PL function on R^n as f - g with f, g tropical polynomials.
///
/// g is a sum of multiples of max(h_H, 0) over the hyperplanes H carrying
/// concave ridges of φ, chosen so that φ + g is convex across every ridge.
inline RationalFunctionExpr as_quotient(const PLFunction& phi) {
  const std::size_t n = phi.ambient_dim();
  require(phi.dim() == static_cast<int>(n), ErrorCode::Unsupported, "as_quotient needs a carrier equal to R^n");
  for (const auto& c : phi.cells())
    require(c.weight == phi.cells().front().weight, ErrorCode::Unsupported, "as_quotient: carrier is not R^n");
  require(!phi.cells().empty() && balancing_violations(phi.cells()).empty(), ErrorCode::Unsupported,
          "as_quotient: carrier is not R^n");

  std::map<AffineConstraint, Integer> jump;  // hyperplane -> multiple M_H
  for (const auto& rs : ridge_stars(phi.cells())) {
    require(rs.facets.size() == 2, ErrorCode::Unsupported, "as_quotient: ridge without two neighbours");
    AffineConstraint h = rs.ridge.equations().front();
    std::size_t pos = rs.facets[0], neg = rs.facets[1];
    if (h.eval(phi.cells()[pos].cell.relative_interior_point()) < 0) std::swap(pos, neg);
    ZVec diff = sub_vec(phi.pieces()[pos].linear, phi.pieces()[neg].linear);
    std::size_t k = 0;
    while (h.normal[k] == 0) ++k;
    Integer lambda = diff[k] / h.normal[k];
    require(diff == scale_vec(h.normal, lambda), ErrorCode::InvalidArgument, "as_quotient: discontinuous function");
    if (lambda < 0) {
      Integer& m = jump[h];
      m = std::max(m, Integer(-lambda));
    }
  }
  std::vector<AffineConstraint> walls;
  for (const auto& [h, m] : jump) walls.push_back(h);
  CellList cells = refine_by_hyperplanes(phi.cells(), walls);
  std::map<ZVec, Rational> f_terms, g_terms;
  std::vector<std::pair<QVec, Rational>> samples;
  for (const auto& c : cells) {
    const QVec p = c.cell.relative_interior_point();
    AffinePiece g{zero_z(n), 0};
    for (const auto& [h, m] : jump)
      if (h.eval(p) > 0) g = g + AffinePiece{scale_vec(h.normal, m), -h.offset * m};
    AffinePiece f = g + phi.pieces()[*phi.locate(p)];
    for (int i = 0; i < 2; ++i) {
      auto& terms = i == 0 ? f_terms : g_terms;
      const AffinePiece& piece = i == 0 ? f : g;
      auto it = terms.find(piece.linear);
      if (it == terms.end())
        terms.emplace(piece.linear, piece.constant);
      else
        it->second = std::max(it->second, piece.constant);
    }
    samples.push_back({p, phi.eval(p)});
  }
  auto to_poly = [n](const std::map<ZVec, Rational>& terms) {
    std::vector<TropicalTerm> t;
    for (const auto& [e, c] : terms) t.push_back({e, c});
    return TropicalPolynomial::make(n, std::move(t));
  };
  RationalFunctionExpr out{to_poly(f_terms), to_poly(g_terms)};
  for (const auto& [p, v] : samples)
    require(out.eval(p) == v, ErrorCode::Internal, "as_quotient: convexification failed");
  return out;
}

}  // namespace troplith
