#pragma once

// Push-forward along integer affine maps and the projection formula.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "troplith/affine_map.hpp"
#include "troplith/cycle.hpp"
#include "troplith/divisor.hpp"
#include "troplith/errors.hpp"
#include "troplith/exact_arith.hpp"
#include "troplith/pl_function.hpp"

namespace troplith {

/// |Λ_{f(σ)} / f(Λ_σ)|, or nullopt when f contracts σ.
inline std::optional<Integer> pushforward_index(const IntegerAffineMap& f, const Polyhedron& sigma,
                                                const Polyhedron& image) {
  if (image.dim() != sigma.dim()) return std::nullopt;
  const std::size_t m = f.codomain_dim();
  ZMatrix gens;
  const Lattice lat = Lattice::saturated(sigma.linear_span());
  for (const auto& b : lat.basis()) gens.push_back(f.apply_linear(b));
  return lattice_index(Lattice::generated_by(m, gens), Lattice::saturated(image.linear_span()));
}

inline TropicalCycle pushforward(const IntegerAffineMap& f, const TropicalCycle& Z) {
  require(f.domain_dim == Z.ambient_dim(), ErrorCode::DimensionMismatch, "pushforward: map domain differs");
  const std::size_t m = f.codomain_dim();
  CellList out;
  for (const auto& c : Z.cells()) {
    Polyhedron image = c.cell.affine_image(f.matrix, f.shift);
    auto idx = pushforward_index(f, c.cell, image);
    if (!idx) continue;
    out.push_back({std::move(image), c.weight * *idx});
  }
  return TropicalCycle::from_cells(m, Z.dim(), out);
}

/// Push-forward with the codomain check f(|Z|) ⊆ |Y|.
inline TropicalCycle pushforward(const IntegerAffineMap& f, const TropicalCycle& Z, const TropicalCycle& Y) {
  require(f.codomain_dim() == Y.ambient_dim(), ErrorCode::DimensionMismatch, "pushforward: codomain differs");
  CellList target;
  for (const auto& c : Y.cells()) target.push_back({c.cell, 1});
  for (const auto& c : Z.cells())
    require(covered_by(c.cell.affine_image(f.matrix, f.shift), target), ErrorCode::InvalidArgument,
            "pushforward: image leaves the codomain support");
  return pushforward(f, Z);
}

/// Restriction of f to Z; the map data are unchanged.
inline IntegerAffineMap restrict(const IntegerAffineMap& f, const TropicalCycle& Z) {
  require(f.domain_dim == Z.ambient_dim(), ErrorCode::DimensionMismatch, "restrict: map domain differs");
  return f;
}

/// φ ∘ f as a rational function expression on the domain.
inline TropicalPolynomial pullback(const TropicalPolynomial& p, const IntegerAffineMap& f) {
  require(p.ambient_dim() == f.codomain_dim(), ErrorCode::DimensionMismatch, "pullback: dimensions differ");
  std::map<ZVec, Rational> terms;
  for (const auto& t : p.terms()) {
    ZVec e = f.pull_linear(t.exponent);
    Rational c = t.coefficient + dot(t.exponent, f.shift);
    auto it = terms.find(e);
    if (it == terms.end())
      terms.emplace(e, c);
    else
      it->second = std::max(it->second, c);
  }
  std::vector<TropicalTerm> out;
  for (const auto& [e, c] : terms) out.push_back({e, c});
  return TropicalPolynomial::make(f.domain_dim, std::move(out));
}

inline RationalFunctionExpr pullback(const RationalFunctionExpr& r, const IntegerAffineMap& f) {
  return {pullback(r.numerator, f), pullback(r.denominator, f)};
}

/// f_*(f^*φ · Z) = φ · f_*Z.
inline bool projection_formula_check(const IntegerAffineMap& f, const RationalFunctionExpr& phi,
                                     const TropicalCycle& Z) {
  TropicalCycle lhs = pushforward(f, divisor(pullback(phi, f), Z));
  TropicalCycle rhs = divisor(phi, pushforward(f, Z));
  return cycle_equal(lhs, rhs);
}

}  // namespace troplith
