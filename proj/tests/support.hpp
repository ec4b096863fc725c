#pragma once

// Cycle builders and random corpora shared by the test binaries.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "troplith/troplith.hpp"

namespace troplith::testing {

inline Polyhedron ray_cell(const QVec& apex, const ZVec& dir) {
  return Polyhedron::from_generators(apex.size(), {apex}, {dir}, {});
}

inline Polyhedron segment_cell(const QVec& a, const QVec& b) {
  return Polyhedron::from_generators(a.size(), {a, b}, {}, {});
}

inline Polyhedron line_cell(const QVec& p, const ZVec& dir) {
  return Polyhedron::from_generators(p.size(), {p}, {}, {dir});
}

/// Fan curve with the given rays and weights, translated to `apex`.
inline TropicalCycle fan_curve(const QVec& apex, const ZMatrix& rays, const std::vector<long>& weights) {
  CellList cells;
  for (std::size_t i = 0; i < rays.size(); ++i) cells.push_back({ray_cell(apex, rays[i]), Integer(weights[i])});
  return TropicalCycle::from_cells(apex.size(), 1, cells);
}

/// Standard tropical line with vertex p: rays (1,1), (-1,0), (0,-1).
inline TropicalCycle tropical_line(const QVec& p = {0, 0}) {
  return fan_curve(p, {{1, 1}, {-1, 0}, {0, -1}}, {1, 1, 1});
}

/// Tropical line in R^n: rays -e_1, ..., -e_n, e_1 + ... + e_n.
inline TropicalCycle tropical_line_n(std::size_t n, const QVec& p) {
  ZMatrix rays;
  ZVec last = zero_z(n);
  for (std::size_t i = 0; i < n; ++i) {
    ZVec e = zero_z(n);
    e[i] = -1;
    rays.push_back(e);
    last[i] = 1;
  }
  rays.push_back(last);
  return fan_curve(p, rays, std::vector<long>(n + 1, 1));
}

/// Vertical line x = 1 plus the tropical line with vertex (3,0).
inline TropicalCycle line_with_vertical() {
  CellList cells{{line_cell({1, 0}, {0, 1}), 1}};
  const TropicalCycle line = tropical_line({3, 0});
  for (const auto& c : line.cells()) cells.push_back(c);
  return TropicalCycle::from_cells(2, 1, cells);
}

inline TropicalCycle five_vertex_curve() {
  CellList cells{
      {segment_cell({0, 0}, {0, -1}), 1},   {segment_cell({0, -1}, {1, -2}), 1}, {segment_cell({1, -2}, {2, -2}), 1},
      {ray_cell({0, 0}, {-1, 0}), 1},       {ray_cell({0, 0}, {1, 1}), 1},       {ray_cell({0, -1}, {-1, 0}), 1},
      {ray_cell({1, -2}, {0, -1}), 1},      {ray_cell({2, -2}, {0, -1}), 1},     {ray_cell({2, -2}, {1, 1}), 1},
  };
  return TropicalCycle::from_complex(2, 1, cells, true);
}

inline Rational random_rational(std::mt19937& rng, int range = 3, int max_den = 2) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline QVec random_point(std::mt19937& rng, std::size_t n, int range = 3, int max_den = 2) {
  QVec p(n);
  for (auto& x : p) x = random_rational(rng, range, max_den);
  return p;
}

inline ZVec random_direction(std::mt19937& rng, std::size_t n, int range = 2) {
  std::uniform_int_distribution<int> d(-range, range);
  for (;;) {
    ZVec v(n);
    for (auto& x : v) x = d(rng);
    if (!is_zero_vec(v)) return make_primitive(v);
  }
}

/// Random balanced fan curve: k random rays plus one balancing ray.
inline TropicalCycle random_fan_curve(std::mt19937& rng, std::size_t n, const QVec& apex, int k = 2) {
  ZMatrix rays;
  std::vector<long> weights;
  ZVec total = zero_z(n);
  std::uniform_int_distribution<int> w(1, 2);
  for (int i = 0; i < k; ++i) {
    ZVec r = random_direction(rng, n);
    long wt = w(rng);
    rays.push_back(r);
    weights.push_back(wt);
    for (std::size_t j = 0; j < n; ++j) total[j] += wt * r[j];
  }
  if (!is_zero_vec(total)) {
    Integer g = content(total);
    ZVec back = make_primitive(total);
    for (auto& x : back) x = -x;
    rays.push_back(back);
    weights.push_back(static_cast<long>(g));
  }
  return fan_curve(apex, rays, weights);
}

/// Random curve: sum of a few translated random fan curves.
inline TropicalCycle random_curve(std::mt19937& rng, std::size_t n, int parts = 2) {
  std::vector<TropicalCycle> pieces;
  for (int i = 0; i < parts; ++i) pieces.push_back(random_fan_curve(rng, n, random_point(rng, n), 2));
  return sum(n, 1, pieces);
}

/// k distinct random exponents in [-range, range]^n with random coefficients.
inline TropicalPolynomial random_polynomial(std::mt19937& rng, std::size_t n, int k, int range = 2) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<TropicalTerm> terms;
  std::set<ZVec> seen;
  while (static_cast<int>(terms.size()) < k) {
    ZVec e(n);
    for (auto& x : e) x = d(rng);
    if (seen.insert(e).second) terms.push_back({e, random_rational(rng)});
  }
  return TropicalPolynomial::make(n, terms);
}

/// All exponents of total degree <= deg with nonnegative entries, random coefficients.
inline TropicalPolynomial random_dense_polynomial(std::mt19937& rng, std::size_t n, int deg) {
  std::vector<TropicalTerm> terms;
  std::vector<ZVec> stack{zero_z(n)};
  std::set<ZVec> seen{zero_z(n)};
  while (!stack.empty()) {
    ZVec e = stack.back();
    stack.pop_back();
    terms.push_back({e, random_rational(rng, 4, 3)});
    Integer total = 0;
    for (const auto& x : e) total += x;
    if (total == deg) continue;
    for (std::size_t i = 0; i < n; ++i) {
      ZVec f = e;
      f[i] += 1;
      if (seen.insert(f).second) stack.push_back(f);
    }
  }
  return TropicalPolynomial::make(n, terms);
}

/// Tropical product: exponents add, coefficients add, max over coincidences.
inline TropicalPolynomial tropical_mul(const TropicalPolynomial& a, const TropicalPolynomial& b) {
  std::map<ZVec, Rational> m;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      ZVec e = add_vec(s.exponent, t.exponent);
      Rational c = s.coefficient + t.coefficient;
      auto it = m.find(e);
      if (it == m.end())
        m.emplace(e, c);
      else
        it->second = std::max(it->second, c);
    }
  std::vector<TropicalTerm> terms;
  for (auto& [e, c] : m) terms.push_back({e, c});
  return TropicalPolynomial::make(a.ambient_dim(), terms);
}

/// Tropical hypersurface of a random polynomial with k terms.
inline TropicalCycle random_hypersurface(std::mt19937& rng, std::size_t n, int k = 3, int range = 1) {
  for (;;) {
    auto D = divisor(random_polynomial(rng, n, k, range), TropicalCycle::whole_space(n));
    if (!D.is_zero()) return D;
  }
}

/// Random fan hypersurface: all coefficients zero.
inline TropicalCycle random_fan_hypersurface(std::mt19937& rng, std::size_t n, int k = 3, int range = 1) {
  for (;;) {
    auto f = random_polynomial(rng, n, k, range);
    std::vector<TropicalTerm> terms = f.terms();
    for (auto& t : terms) t.coefficient = 0;
    auto D = divisor(TropicalPolynomial::make(n, terms), TropicalCycle::whole_space(n));
    if (!D.is_zero()) return D;
  }
}

}  // namespace troplith::testing
