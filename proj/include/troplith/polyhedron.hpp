#pragma once

// Exact rational polyhedra with both descriptions kept in canonical form.
//
// Conversions between the generator and the inequality description use the
// double description method on integer vectors (desk scale: ambient
// dimension <= 8, a few dozen constraints).  Every constructed polyhedron is
// non-empty and canonical, so structural equality is set equality.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "troplith/errors.hpp"
#include "troplith/exact_arith.hpp"

namespace troplith {

/// <normal, x> >= offset for inequalities, <normal, x> = offset for equations.
struct AffineConstraint {
  IntVec normal;
  Rational offset;

  Rational eval(const QVec& x) const { return dot(normal, x) - offset; }

  friend bool operator==(const AffineConstraint& a, const AffineConstraint& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
  friend bool operator<(const AffineConstraint& a, const AffineConstraint& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  }
};

namespace detail {

struct ConeGenerators {
  ZMatrix rays;
  ZMatrix lineality;
};

inline ZVec primitive_or_zero(const ZVec& v) { return make_primitive(v); }

/// Extreme rays and lineality of {y : A y >= 0, E y = 0} in Q^d.
inline ConeGenerators double_description(const ZMatrix& ineqs, const ZMatrix& eqs, std::size_t d) {
  using Bits = boost::dynamic_bitset<>;
  const std::size_t m = ineqs.size();

  ConeGenerators out;
  {
    QMatrix eq_q;
    for (const auto& e : eqs) eq_q.push_back(to_q(e));
    for (const auto& v : nullspace(eq_q, d)) out.lineality.push_back(make_primitive(clear_denominators(v)));
  }
  ZMatrix& lin = out.lineality;
  const long space_dim = static_cast<long>(lin.size());
  ZMatrix rays;
  std::vector<Bits> zeros;

  for (std::size_t k = 0; k < m; ++k) {
    const ZVec& a = ineqs[k];
    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot_z(a, lin[i]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < lin.size()) {
      ZVec l0 = lin[pivot];
      Integer al0 = dot_z(a, l0);
      if (al0 < 0) {
        for (auto& x : l0) x = -x;
        al0 = -al0;
      }
      ZMatrix new_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pivot) continue;
        Integer al = dot_z(a, lin[i]);
        ZVec l = lin[i];
        if (al != 0) {
          for (std::size_t j = 0; j < d; ++j) l[j] = al0 * l[j] - al * l0[j];
          l = make_primitive(std::move(l));
        }
        new_lin.push_back(std::move(l));
      }
      for (std::size_t i = 0; i < rays.size(); ++i) {
        Integer ar = dot_z(a, rays[i]);
        if (ar != 0) {
          for (std::size_t j = 0; j < d; ++j) rays[i][j] = al0 * rays[i][j] - ar * l0[j];
          rays[i] = make_primitive(std::move(rays[i]));
        }
        zeros[i].resize(m);
        zeros[i].set(k);
      }
      Bits z(m);
      for (std::size_t j = 0; j < k; ++j) z.set(j);
      rays.push_back(std::move(l0));
      zeros.push_back(std::move(z));
      lin = std::move(new_lin);
      continue;
    }

    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot_z(a, rays[i]);
      if (val[i] > 0)
        pos.push_back(i);
      else if (val[i] < 0)
        neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) zeros[i].set(k);
      continue;
    }
    const long need = space_dim - static_cast<long>(lin.size()) - 2;
    ZMatrix next_rays;
    std::vector<Bits> next_zeros;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      Bits z = zeros[i];
      if (val[i] == 0) z.set(k);
      next_rays.push_back(rays[i]);
      next_zeros.push_back(std::move(z));
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = zeros[p] & zeros[q];
        if (static_cast<long>(common.count()) < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(zeros[r])) adjacent = false;
        }
        if (!adjacent) continue;
        ZVec nr(d);
        for (std::size_t j = 0; j < d; ++j) nr[j] = val[p] * rays[q][j] - val[q] * rays[p][j];
        common.set(k);
        next_rays.push_back(make_primitive(std::move(nr)));
        next_zeros.push_back(std::move(common));
      }
    }
    rays = std::move(next_rays);
    zeros = std::move(next_zeros);
  }
  out.rays = std::move(rays);
  return out;
}

/// Positive scalar turning the rational vector into a primitive integer vector.
inline Rational primitive_scale(const QVec& a) {
  Integer l = 1;
  for (const auto& x : a) l = lcm_int(l, den(x));
  Integer g = 0;
  for (const auto& x : a) g = gcd_int(g, num(x * l));
  if (g == 0) return 1;
  return Rational(l, g);
}

}  // namespace detail

class Polyhedron {
 public:
  Polyhedron() = default;

  // -- construction -------------------------------------------------------

  static Polyhedron from_generators(std::size_t n, const QMatrix& vertices, const ZMatrix& rays,
                                    const ZMatrix& lineality) {
    require(!vertices.empty(), ErrorCode::Empty, "from_generators: no vertices");
    check_lengths(n, vertices, rays, lineality);
    // H-description via the polar cone in (a, c): a.v + c >= 0, a.r >= 0, a.l = 0
    ZMatrix rows, eq_rows;
    for (const auto& v : vertices) {
      QVec h(v);
      h.push_back(1);
      rows.push_back(clear_denominators(h));
    }
    for (const auto& r : rays) {
      ZVec h(r);
      h.push_back(0);
      rows.push_back(std::move(h));
    }
    for (const auto& l : lineality) {
      ZVec h(l);
      h.push_back(0);
      eq_rows.push_back(std::move(h));
    }
    detail::ConeGenerators polar = detail::double_description(rows, eq_rows, n + 1);
    std::vector<AffineConstraint> candidates;
    QMatrix normals;
    for (const auto& g : polar.rays) {
      ZVec a(g.begin(), g.end() - 1);
      normals.push_back(to_q(a));
      candidates.push_back({a, Rational(-g.back())});
    }
    for (const auto& g : polar.lineality) {
      ZVec a(g.begin(), g.end() - 1);
      normals.push_back(to_q(a));
    }
    // lineality of P: orthogonal to every valid normal
    ZMatrix lin;
    for (const auto& v : nullspace(normals, n)) lin.push_back(make_primitive(clear_denominators(v)));
    return finalize(n, vertices, rays, lin, candidates);
  }

  static std::optional<Polyhedron> try_from_inequalities(std::size_t n, const std::vector<AffineConstraint>& ineqs,
                                                         const std::vector<AffineConstraint>& eqs) {
    auto homog = [n](const AffineConstraint& c) {
      require(c.normal.size() == n, ErrorCode::DimensionMismatch, "constraint normal has wrong length");
      QVec h = to_q(c.normal);
      h.push_back(-c.offset);
      return clear_denominators(h);
    };
    ZMatrix rows, eq_rows;
    ZVec t = zero_z(n + 1);
    t[n] = 1;
    rows.push_back(t);
    for (const auto& c : ineqs) rows.push_back(homog(c));
    for (const auto& c : eqs) eq_rows.push_back(homog(c));
    detail::ConeGenerators cone = detail::double_description(rows, eq_rows, n + 1);
    QMatrix vertices;
    ZMatrix rays, lin;
    for (const auto& g : cone.rays) {
      if (g[n] > 0) {
        QVec v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = Rational(g[j], g[n]);
        vertices.push_back(std::move(v));
      } else {
        ZVec r(g.begin(), g.end() - 1);
        rays.push_back(make_primitive(std::move(r)));
      }
    }
    for (const auto& g : cone.lineality) lin.push_back(make_primitive(ZVec(g.begin(), g.end() - 1)));
    if (vertices.empty()) return std::nullopt;
    std::vector<AffineConstraint> candidates(ineqs);
    for (const auto& e : eqs) {
      candidates.push_back(e);
      AffineConstraint neg{e.normal, -e.offset};
      for (auto& x : neg.normal) x = -x;
      candidates.push_back(std::move(neg));
    }
    return finalize(n, vertices, rays, lin, candidates);
  }

  static Polyhedron from_inequalities(std::size_t n, const std::vector<AffineConstraint>& ineqs,
                                      const std::vector<AffineConstraint>& eqs) {
    auto p = try_from_inequalities(n, ineqs, eqs);
    if (!p) fail(ErrorCode::Empty, "from_inequalities: the system is infeasible");
    return std::move(*p);
  }

  static Polyhedron whole_space(std::size_t n) {
    ZMatrix lin(n, zero_z(n));
    for (std::size_t i = 0; i < n; ++i) lin[i][i] = 1;
    return finalize(n, {zero_q(n)}, {}, lin, {});
  }

  static Polyhedron point(const QVec& p) { return finalize(p.size(), {p}, {}, {}, {}); }

  /// Cone generated by rays and lineality (apex 0).  Needs an H-description,
  /// so this goes through from_generators.
  static Polyhedron cone(std::size_t n, const ZMatrix& rays, const ZMatrix& lineality = {}) {
    return from_generators(n, {zero_q(n)}, rays, lineality);
  }

  // -- accessors ------------------------------------------------------------

  std::size_t ambient_dim() const { return n_; }
  int dim() const { return dim_; }
  const QMatrix& vertices() const { return vertices_; }
  const ZMatrix& rays() const { return rays_; }
  const ZMatrix& lineality() const { return lineality_; }
  const std::vector<AffineConstraint>& inequalities() const { return ineqs_; }
  const std::vector<AffineConstraint>& equations() const { return eqs_; }

  bool is_bounded() const { return rays_.empty() && lineality_.empty(); }
  bool is_cone() const {
    auto zero_offset = [](const AffineConstraint& c) { return c.offset == 0; };
    return std::all_of(ineqs_.begin(), ineqs_.end(), zero_offset) &&
           std::all_of(eqs_.begin(), eqs_.end(), zero_offset);
  }

  bool contains(const QVec& x) const {
    require(x.size() == n_, ErrorCode::DimensionMismatch, "contains: point has wrong length");
    for (const auto& c : eqs_)
      if (c.eval(x) != 0) return false;
    for (const auto& c : ineqs_)
      if (c.eval(x) < 0) return false;
    return true;
  }

  bool contains(const Polyhedron& other) const {
    for (const auto& v : other.vertices_)
      if (!contains(v)) return false;
    for (const auto& r : other.rays_)
      if (!contains_direction(r)) return false;
    for (const auto& l : other.lineality_) {
      if (!contains_direction(l)) return false;
      ZVec neg(l);
      for (auto& x : neg) x = -x;
      if (!contains_direction(neg)) return false;
    }
    return true;
  }

  /// True when v is in the recession cone.
  bool contains_direction(const ZVec& v) const {
    for (const auto& c : eqs_)
      if (dot_z(c.normal, v) != 0) return false;
    for (const auto& c : ineqs_)
      if (dot_z(c.normal, v) < 0) return false;
    return true;
  }

  /// Average of the vertices plus the sum of the rays.
  QVec relative_interior_point() const {
    QVec p = zero_q(n_);
    for (const auto& v : vertices_)
      for (std::size_t j = 0; j < n_; ++j) p[j] += v[j];
    for (auto& x : p) x /= static_cast<long>(vertices_.size());
    for (const auto& r : rays_)
      for (std::size_t j = 0; j < n_; ++j) p[j] += r[j];
    return p;
  }

  bool in_relative_interior(const QVec& x) const {
    if (!contains(x)) return false;
    for (const auto& c : ineqs_)
      if (c.eval(x) == 0) return false;
    return true;
  }

  /// Linear space parallel to the affine hull.
  Subspace linear_span() const {
    QMatrix dirs;
    for (std::size_t i = 1; i < vertices_.size(); ++i) dirs.push_back(sub_vec(vertices_[i], vertices_[0]));
    for (const auto& r : rays_) dirs.push_back(to_q(r));
    for (const auto& l : lineality_) dirs.push_back(to_q(l));
    return Subspace::span(n_, dirs);
  }

  std::pair<Subspace, QVec> affine_span() const { return {linear_span(), vertices_.front()}; }

  Subspace poly_lineality() const { return Subspace::span(n_, lineality_); }

  /// Rec(P) = {v : x + R>=0 v ⊆ P}; the H-description is P's with offsets zeroed.
  Polyhedron recession_cone() const {
    std::vector<AffineConstraint> cand;
    for (const auto& c : ineqs_) cand.push_back({c.normal, Rational(0)});
    return finalize(n_, {zero_q(n_)}, rays_, lineality_, cand);
  }

  Polyhedron translate(const QVec& v) const {
    require(v.size() == n_, ErrorCode::DimensionMismatch, "translate: vector has wrong length");
    QMatrix verts;
    for (const auto& x : vertices_) verts.push_back(add_vec(x, v));
    std::vector<AffineConstraint> cand;
    for (const auto& c : ineqs_) cand.push_back({c.normal, c.offset + dot(c.normal, v)});
    return finalize(n_, verts, rays_, lineality_, cand);
  }

  Polyhedron negate() const {
    QMatrix verts;
    for (const auto& x : vertices_) verts.push_back(scale_vec(x, Rational(-1)));
    ZMatrix rays;
    for (const auto& r : rays_) rays.push_back(scale_vec(r, Integer(-1)));
    std::vector<AffineConstraint> cand;
    for (const auto& c : ineqs_) cand.push_back({scale_vec(c.normal, Integer(-1)), c.offset});
    return finalize(n_, verts, rays, lineality_, cand);
  }

  /// Face cut out by turning inequality i into an equation.
  Polyhedron facet_of(std::size_t i) const {
    const AffineConstraint& h = ineqs_.at(i);
    QMatrix verts;
    for (const auto& v : vertices_)
      if (h.eval(v) == 0) verts.push_back(v);
    ZMatrix rays;
    for (const auto& r : rays_)
      if (dot_z(h.normal, r) == 0) rays.push_back(r);
    std::vector<AffineConstraint> cand;
    for (std::size_t j = 0; j < ineqs_.size(); ++j)
      if (j != i) cand.push_back(ineqs_[j]);
    return finalize(n_, verts, rays, lineality_, cand);
  }

  std::vector<Polyhedron> facets() const {
    std::vector<Polyhedron> out;
    for (std::size_t i = 0; i < ineqs_.size(); ++i) out.push_back(facet_of(i));
    return out;
  }

  /// All k-dimensional faces, sorted; faces(dim) == {*this}.
  std::vector<Polyhedron> faces(int k) const {
    if (k > dim_ || k < static_cast<int>(lineality_.size())) return {};
    std::set<Polyhedron> level{*this};
    for (int d = dim_; d > k; --d) {
      std::set<Polyhedron> next;
      for (const auto& f : level)
        for (auto& g : f.facets()) next.insert(std::move(g));
      level = std::move(next);
    }
    return {level.begin(), level.end()};
  }

  /// Every face of every dimension, this polyhedron included.
  std::vector<Polyhedron> all_faces() const {
    std::vector<Polyhedron> out;
    std::set<Polyhedron> level{*this};
    while (!level.empty()) {
      out.insert(out.end(), level.begin(), level.end());
      std::set<Polyhedron> next;
      for (const auto& f : level)
        for (auto& g : f.facets()) next.insert(std::move(g));
      level = std::move(next);
    }
    return out;
  }

  /// Image under x -> A x + shift.
  Polyhedron affine_image(const ZMatrix& A, const QVec& shift) const {
    const std::size_t m = A.size();
    auto apply = [&](const QVec& x) {
      QVec y(shift);
      for (std::size_t i = 0; i < m; ++i) y[i] += dot(A[i], x);
      return y;
    };
    auto apply_z = [&](const ZVec& x) {
      ZVec y = zero_z(m);
      for (std::size_t i = 0; i < m; ++i) y[i] = dot_z(A[i], x);
      return y;
    };
    QMatrix verts;
    for (const auto& v : vertices_) verts.push_back(apply(v));
    ZMatrix rays, lin;
    for (const auto& r : rays_) {
      ZVec y = apply_z(r);
      if (!is_zero_vec(y)) rays.push_back(make_primitive(y));
    }
    for (const auto& l : lineality_) {
      ZVec y = apply_z(l);
      if (!is_zero_vec(y)) lin.push_back(make_primitive(y));
    }
    return from_generators(m, verts, rays, lin);
  }

  /// Constraints describing {x : A x + shift ∈ this}.
  std::pair<std::vector<AffineConstraint>, std::vector<AffineConstraint>> preimage_constraints(
      const ZMatrix& A, const QVec& shift) const {
    const std::size_t cols = A.empty() ? 0 : A[0].size();
    auto pull = [&](const AffineConstraint& c) {
      ZVec a = zero_z(cols);
      for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) a[j] += c.normal[i] * A[i][j];
      return AffineConstraint{a, c.offset - dot(c.normal, shift)};
    };
    std::vector<AffineConstraint> in, eq;
    for (const auto& c : ineqs_) in.push_back(pull(c));
    for (const auto& c : eqs_) eq.push_back(pull(c));
    return {in, eq};
  }

  /// Sign information of the affine function <a,x> - b over the polyhedron.
  struct Range {
    bool positive = false;  // attains a value > 0
    bool negative = false;  // attains a value < 0
  };

  Range range_of(const ZVec& a, const Rational& b) const {
    Range r;
    for (const auto& v : vertices_) {
      Rational val = dot(a, v) - b;
      if (val > 0) r.positive = true;
      if (val < 0) r.negative = true;
    }
    for (const auto& ray : rays_) {
      Integer s = dot_z(a, ray);
      if (s > 0) r.positive = true;
      if (s < 0) r.negative = true;
    }
    for (const auto& l : lineality_)
      if (dot_z(a, l) != 0) r.positive = r.negative = true;
    return r;
  }

  friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
    return a.n_ == b.n_ && a.vertices_ == b.vertices_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }
  friend bool operator!=(const Polyhedron& a, const Polyhedron& b) { return !(a == b); }
  friend bool operator<(const Polyhedron& a, const Polyhedron& b) {
    return std::tie(a.n_, a.dim_, a.vertices_, a.rays_, a.lineality_) <
           std::tie(b.n_, b.dim_, b.vertices_, b.rays_, b.lineality_);
  }

  /// Builds the canonical polyhedron from a (possibly redundant) generator
  /// set together with a (possibly redundant) list of valid inequalities that
  /// cut out the set inside its affine hull.  lineality must span exactly the
  /// lineality space.
  static Polyhedron finalize(std::size_t n, const QMatrix& vertices, const ZMatrix& rays, const ZMatrix& lineality,
                             const std::vector<AffineConstraint>& candidates) {
    require(!vertices.empty(), ErrorCode::Empty, "polyhedron without vertices");
    Polyhedron p;
    p.n_ = n;
    const QMatrix dirs = direction_rows(n, vertices, rays, lineality);
    const Subspace span = Subspace::span(n, dirs);
    p.dim_ = static_cast<int>(span.dim());

    // equations: complement of the direction space through the first vertex
    const Subspace lin_space = Subspace::span(n, lineality);
    p.lineality_ = Lattice::saturated(lin_space).basis();
    ZMatrix eq_normals = span.orthogonal_complement();
    {
      // canonical: reduced echelon on (a, -b) then primitive in the a-part
      QMatrix rows;
      for (const auto& a : eq_normals) {
        QVec r = to_q(a);
        r.push_back(-dot(a, vertices[0]));
        rows.push_back(std::move(r));
      }
      RowEchelon e = rref(rows, n + 1);
      for (auto& r : e.rows) {
        Rational s = detail::primitive_scale(QVec(r.begin(), r.end() - 1));
        AffineConstraint c;
        for (std::size_t j = 0; j < n; ++j) c.normal.push_back(num(r[j] * s));
        c.offset = -r[n] * s;
        p.eqs_.push_back(std::move(c));
      }
    }
    const Subspace eq_space = [&] {
      QMatrix rows;
      for (const auto& c : p.eqs_) {
        QVec r = to_q(c.normal);
        r.push_back(-c.offset);
        rows.push_back(std::move(r));
      }
      return Subspace::span(n + 1, rows);
    }();

    // facets among the candidates
    std::set<AffineConstraint> facets;
    for (const auto& c : candidates) {
      QMatrix tight_v;
      for (const auto& v : vertices)
        if (c.eval(v) == 0) tight_v.push_back(v);
      if (tight_v.empty() || tight_v.size() == vertices.size()) {
        // never tight, or tight everywhere on the vertices
        if (tight_v.empty()) continue;
        bool all_rays = std::all_of(rays.begin(), rays.end(), [&](const ZVec& r) { return dot_z(c.normal, r) == 0; });
        if (all_rays) continue;
      }
      ZMatrix tight_r;
      for (const auto& r : rays)
        if (dot_z(c.normal, r) == 0) tight_r.push_back(r);
      const int fdim = static_cast<int>(rank(direction_rows(n, tight_v, tight_r, lineality), n));
      if (fdim != p.dim_ - 1) continue;
      QVec row = to_q(c.normal);
      row.push_back(-c.offset);
      row = eq_space.reduce(row);
      QVec a(row.begin(), row.end() - 1);
      if (is_zero_vec(a)) continue;
      Rational s = detail::primitive_scale(a);
      AffineConstraint canon;
      for (std::size_t j = 0; j < n; ++j) canon.normal.push_back(num(a[j] * s));
      canon.offset = -row[n] * s;
      facets.insert(std::move(canon));
    }
    p.ineqs_.assign(facets.begin(), facets.end());

    // irredundant generators, reduced modulo the lineality space
    const long lindim = static_cast<long>(p.lineality_.size());
    auto tight_rank = [&](auto&& is_tight) {
      QMatrix normals;
      for (const auto& c : p.eqs_) normals.push_back(to_q(c.normal));
      for (const auto& c : p.ineqs_)
        if (is_tight(c)) normals.push_back(to_q(c.normal));
      return static_cast<long>(rank(normals, n));
    };
    std::set<QVec> verts;
    for (const auto& v : vertices) {
      if (tight_rank([&](const AffineConstraint& c) { return c.eval(v) == 0; }) != static_cast<long>(n) - lindim)
        continue;
      verts.insert(lin_space.reduce(v));
    }
    std::set<ZVec> ext_rays;
    for (const auto& r : rays) {
      if (lin_space.contains(r)) continue;
      if (tight_rank([&](const AffineConstraint& c) { return dot_z(c.normal, r) == 0; }) !=
          static_cast<long>(n) - lindim - 1)
        continue;
      ext_rays.insert(make_primitive(clear_denominators(lin_space.reduce(to_q(r)))));
    }
    p.vertices_.assign(verts.begin(), verts.end());
    p.rays_.assign(ext_rays.begin(), ext_rays.end());
    require(!p.vertices_.empty(), ErrorCode::Internal, "finalize lost every vertex");
    return p;
  }

 private:
  static void check_lengths(std::size_t n, const QMatrix& v, const ZMatrix& r, const ZMatrix& l) {
    for (const auto& x : v) require(x.size() == n, ErrorCode::DimensionMismatch, "vertex has wrong length");
    for (const auto& x : r) require(x.size() == n, ErrorCode::DimensionMismatch, "ray has wrong length");
    for (const auto& x : l) require(x.size() == n, ErrorCode::DimensionMismatch, "lineality vector has wrong length");
  }

  static QMatrix direction_rows(std::size_t n, const QMatrix& vertices, const ZMatrix& rays, const ZMatrix& lin) {
    QMatrix dirs;
    for (std::size_t i = 1; i < vertices.size(); ++i) dirs.push_back(sub_vec(vertices[i], vertices[0]));
    for (const auto& r : rays) dirs.push_back(to_q(r));
    for (const auto& l : lin) dirs.push_back(to_q(l));
    (void)n;
    return dirs;
  }

  std::size_t n_ = 0;
  int dim_ = -1;
  QMatrix vertices_;
  ZMatrix rays_;
  ZMatrix lineality_;
  std::vector<AffineConstraint> ineqs_;
  std::vector<AffineConstraint> eqs_;
};

using Cone = Polyhedron;

inline std::ostream& operator<<(std::ostream& os, const Polyhedron& P) {
  os << "conv{";
  for (std::size_t i = 0; i < P.vertices().size(); ++i) os << (i ? " " : "") << P.vertices()[i];
  os << "} + cone{";
  for (std::size_t i = 0; i < P.rays().size(); ++i) os << (i ? " " : "") << to_q(P.rays()[i]);
  os << "} + span{";
  for (std::size_t i = 0; i < P.lineality().size(); ++i) os << (i ? " " : "") << to_q(P.lineality()[i]);
  return os << "}";
}

inline std::optional<Polyhedron> intersect(const Polyhedron& P, const Polyhedron& Q) {
  require(P.ambient_dim() == Q.ambient_dim(), ErrorCode::DimensionMismatch, "intersect: ambient mismatch");
  std::vector<AffineConstraint> in(P.inequalities()), eq(P.equations());
  in.insert(in.end(), Q.inequalities().begin(), Q.inequalities().end());
  eq.insert(eq.end(), Q.equations().begin(), Q.equations().end());
  return Polyhedron::try_from_inequalities(P.ambient_dim(), in, eq);
}

/// P ∩ {<a,x> >= b}
inline std::optional<Polyhedron> intersect_halfspace(const Polyhedron& P, const AffineConstraint& h) {
  std::vector<AffineConstraint> in(P.inequalities());
  in.push_back(h);
  return Polyhedron::try_from_inequalities(P.ambient_dim(), in, P.equations());
}

inline Polyhedron cartesian_product(const Polyhedron& P, const Polyhedron& Q) {
  const std::size_t n = P.ambient_dim(), m = Q.ambient_dim();
  QMatrix verts;
  for (const auto& a : P.vertices())
    for (const auto& b : Q.vertices()) {
      QVec v(a);
      v.insert(v.end(), b.begin(), b.end());
      verts.push_back(std::move(v));
    }
  auto lift_first = [&](const ZVec& r) {
    ZVec v(r);
    v.resize(n + m, Integer(0));
    return v;
  };
  auto lift_second = [&](const ZVec& r) {
    ZVec v = zero_z(n);
    v.insert(v.end(), r.begin(), r.end());
    return v;
  };
  ZMatrix rays, lin;
  for (const auto& r : P.rays()) rays.push_back(lift_first(r));
  for (const auto& r : Q.rays()) rays.push_back(lift_second(r));
  for (const auto& l : P.lineality()) lin.push_back(lift_first(l));
  for (const auto& l : Q.lineality()) lin.push_back(lift_second(l));
  std::vector<AffineConstraint> cand;
  for (const auto& c : P.inequalities()) cand.push_back({lift_first(c.normal), c.offset});
  for (const auto& c : Q.inequalities()) cand.push_back({lift_second(c.normal), c.offset});
  return Polyhedron::finalize(n + m, verts, rays, lin, cand);
}

inline Polyhedron translate(const Polyhedron& P, const QVec& v) { return P.translate(v); }
inline Polyhedron recession_cone(const Polyhedron& P) { return P.recession_cone(); }
inline int dim(const Polyhedron& P) { return P.dim(); }
inline std::vector<Polyhedron> faces(const Polyhedron& P, int k) { return P.faces(k); }

}  // namespace troplith
