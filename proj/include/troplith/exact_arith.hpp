#pragma once

// Exact scalars, integer normal forms and lattice/subspace computations.
// Nothing in here ever touches floating point.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "troplith/errors.hpp"

namespace troplith {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Scalar = Rational;

using QVec = std::vector<Rational>;
using ZVec = std::vector<Integer>;
using IntVec = ZVec;
using QMatrix = std::vector<QVec>;
using ZMatrix = std::vector<ZVec>;

// ---------------------------------------------------------------------------
// scalar helpers

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

inline int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }
inline int sign(const Integer& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

/// Floor division for arbitrary-precision integers (b != 0).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline bool is_integer(const Rational& q) { return den(q) == 1; }

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer p(text.substr(0, slash));
    Integer q(text.substr(slash + 1));
    require(q != 0, ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
    return Rational(p, q);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
  }
}

inline std::string format_rational(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

// ---------------------------------------------------------------------------
// vector helpers

inline QVec to_q(const ZVec& v) { return QVec(v.begin(), v.end()); }

inline QVec zero_q(std::size_t n) { return QVec(n, Rational(0)); }
inline ZVec zero_z(std::size_t n) { return ZVec(n, Integer(0)); }

inline QVec unit_q(std::size_t n, std::size_t i) {
  QVec v = zero_q(n);
  v[i] = 1;
  return v;
}

template <class T>
bool is_zero_vec(const std::vector<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return x == 0; });
}

template <class T, class U>
Rational dot(const std::vector<T>& a, const std::vector<U>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * Rational(b[i]);
  return s;
}

inline Integer dot_z(const ZVec& a, const ZVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
std::vector<T> add_vec(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <class T>
std::vector<T> sub_vec(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

template <class T, class S>
std::vector<T> scale_vec(const std::vector<T>& a, const S& s) {
  std::vector<T> r(a);
  for (auto& x : r) x *= s;
  return r;
}

inline Integer content(const ZVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd_int(g, x);
  return g;
}

/// Divides by the gcd of the entries (zero vectors are returned unchanged).
inline ZVec make_primitive(ZVec v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Smallest positive integer multiple of a rational vector that is integral.
inline ZVec clear_denominators(const QVec& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm_int(l, den(x));
  ZVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = num(v[i] * l);
  return r;
}

/// Primitive integer vector positively proportional to v.
inline IntVec primitive_vector(const QVec& v) {
  require(!is_zero_vec(v), ErrorCode::InvalidArgument, "primitive_vector of the zero vector");
  return make_primitive(clear_denominators(v));
}

inline IntVec primitive_vector(const ZVec& v) { return primitive_vector(to_q(v)); }

// ---------------------------------------------------------------------------
// rational linear algebra

struct RowEchelon {
  QMatrix rows;                     // nonzero rows of the reduced echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form over Q of the given rows (ncols columns).
inline RowEchelon rref(QMatrix m, std::size_t ncols) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

inline std::size_t rank(const QMatrix& m, std::size_t ncols) { return rref(m, ncols).rows.size(); }

inline std::size_t rank_z(const ZMatrix& m, std::size_t ncols) {
  QMatrix q;
  q.reserve(m.size());
  for (const auto& row : m) q.push_back(to_q(row));
  return rank(q, ncols);
}

/// Basis of {x : row . x = 0 for all rows}.
inline QMatrix nullspace(const QMatrix& rows, std::size_t ncols) {
  RowEchelon e = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  QMatrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    QVec v = zero_q(ncols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves sum_i c_i * basis[i] = target; nullopt when target is outside the span.
inline std::optional<QVec> coordinates(const QMatrix& basis, const QVec& target) {
  const std::size_t k = basis.size();
  const std::size_t n = target.size();
  // Columns are the basis vectors; augmented with the target.
  QMatrix m(n, QVec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = target[i];
  }
  RowEchelon e = rref(m, k + 1);
  QVec c = zero_q(k);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == k) return std::nullopt;
    c[e.pivots[i]] = e.rows[i][k];
  }
  return c;
}

/// Determinant of a square integer matrix (fraction-free elimination).
inline Integer determinant(ZMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int s = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return s * m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// integer normal forms

struct HermiteResult {
  ZMatrix H;  // row Hermite normal form
  ZMatrix U;  // unimodular, H = U * M
};

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot), zero rows last.
inline HermiteResult hermite_form(const ZMatrix& M) {
  const std::size_t m = M.size();
  const std::size_t n = m == 0 ? 0 : M[0].size();
  ZMatrix H = M;
  ZMatrix U(m, zero_z(m));
  for (std::size_t i = 0; i < m; ++i) U[i][i] = 1;

  auto row_combine = [&](std::size_t a, std::size_t b, const Integer& p, const Integer& q, const Integer& r,
                         const Integer& s) {
    // (row_a, row_b) <- (p*row_a + q*row_b, r*row_a + s*row_b)
    for (std::size_t j = 0; j < n; ++j) {
      Integer x = H[a][j], y = H[b][j];
      H[a][j] = p * x + q * y;
      H[b][j] = r * x + s * y;
    }
    for (std::size_t j = 0; j < m; ++j) {
      Integer x = U[a][j], y = U[b][j];
      U[a][j] = p * x + q * y;
      U[b][j] = r * x + s * y;
    }
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on column c among rows r..m-1.
    for (std::size_t i = r + 1; i < m; ++i) {
      if (H[i][c] == 0) continue;
      Integer a = H[r][c], b = H[i][c];
      // extended gcd: g = x*a + y*b
      Integer old_r = a, cur_r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
      while (cur_r != 0) {
        Integer q = old_r / cur_r;
        Integer tmp = old_r - q * cur_r;
        old_r = cur_r;
        cur_r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
        tmp = old_t - q * cur_t;
        old_t = cur_t;
        cur_t = tmp;
      }
      Integer g = old_r;
      // [x y; -b/g a/g] has determinant (x*a + y*b)/g = 1
      row_combine(r, i, old_s, old_t, -b / g, a / g);
    }
    if (H[r][c] == 0) continue;
    if (H[r][c] < 0) {
      for (auto& x : H[r]) x = -x;
      for (auto& x : U[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer f = floor_div(H[i][c], H[r][c]);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) H[i][j] -= f * H[r][j];
      for (std::size_t j = 0; j < m; ++j) U[i][j] -= f * U[r][j];
    }
    ++r;
  }
  return {std::move(H), std::move(U)};
}

/// Elementary divisors d1 | d2 | ... (min(rows, cols) entries, zeros last).
inline std::vector<Integer> smith_diagonal(const ZMatrix& M) {
  ZMatrix A = M;
  const std::size_t m = A.size();
  const std::size_t n = m == 0 ? 0 : A[0].size();
  const std::size_t k = std::min(m, n);
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < k; ++t) {
    // find a nonzero entry with minimal absolute value in the trailing block
    bool done = false;
    while (!done) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (A[i][j] != 0 && (pi == m || abs_int(A[i][j]) < abs_int(A[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) {
        while (diag.size() < k) diag.push_back(0);
        return diag;
      }
      std::swap(A[t], A[pi]);
      for (auto& row : A) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Integer q = A[i][t] / A[t][t];
        if (q != 0)
          for (std::size_t j = t; j < n; ++j) A[i][j] -= q * A[t][j];
        if (A[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Integer q = A[t][j] / A[t][t];
        if (q != 0)
          for (std::size_t i = t; i < m; ++i) A[i][j] -= q * A[i][t];
        if (A[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: the pivot must divide the whole trailing block
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A[i][j] % A[t][t] != 0) {
            bad_row = i;
            break;
          }
      if (bad_row != m) {
        for (std::size_t j = t; j < n; ++j) A[t][j] += A[bad_row][j];
        continue;
      }
      done = true;
    }
    diag.push_back(abs_int(A[t][t]));
  }
  return diag;
}

// ---------------------------------------------------------------------------
// subspaces and lattices

/// Linear subspace of Q^n with a canonical reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const QMatrix& vectors) {
    Subspace s(ambient_dim);
    for (const auto& v : vectors)
      require(v.size() == ambient_dim, ErrorCode::DimensionMismatch, "subspace generator has wrong length");
    RowEchelon e = rref(vectors, ambient_dim);
    s.basis_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace span(std::size_t ambient_dim, const ZMatrix& vectors) {
    QMatrix q;
    for (const auto& v : vectors) q.push_back(to_q(v));
    return span(ambient_dim, q);
  }

  static Subspace whole(std::size_t n) {
    QMatrix id;
    for (std::size_t i = 0; i < n; ++i) id.push_back(unit_q(n, i));
    return span(n, id);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const QMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const QVec& v) const {
    require(v.size() == ambient_, ErrorCode::DimensionMismatch, "vector length differs from subspace ambient");
    // reduce against the echelon basis
    QVec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Rational f = r[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_[i][j];
    }
    return is_zero_vec(r);
  }
  bool contains(const ZVec& v) const { return contains(to_q(v)); }

  bool contains(const Subspace& other) const {
    require(other.ambient_ == ambient_, ErrorCode::DimensionMismatch, "subspace ambient dimensions differ");
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const QVec& v) { return contains(v); });
  }

  /// Canonical representative of v modulo this subspace (pivot coordinates zeroed).
  QVec reduce(const QVec& v) const {
    QVec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Rational f = r[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_[i][j];
    }
    return r;
  }

  /// Integer rows spanning the orthogonal complement.
  ZMatrix orthogonal_complement() const {
    ZMatrix out;
    for (const auto& v : nullspace(basis_, ambient_)) out.push_back(make_primitive(clear_denominators(v)));
    return out;
  }

  /// Basis rows scaled to primitive integer vectors.
  ZMatrix integer_basis() const {
    ZMatrix out;
    for (const auto& v : basis_) out.push_back(make_primitive(clear_denominators(v)));
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    return a.basis_ < b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), ErrorCode::DimensionMismatch, "subspace_sum: ambient mismatch");
  QMatrix all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), ErrorCode::DimensionMismatch, "subspace_intersect: ambient mismatch");
  const std::size_t n = a.ambient_dim();
  // intersection = complement of (a^perp + b^perp)
  QMatrix rows;
  for (const auto& v : a.orthogonal_complement()) rows.push_back(to_q(v));
  for (const auto& v : b.orthogonal_complement()) rows.push_back(to_q(v));
  return Subspace::span(n, nullspace(rows, n));
}

inline bool subspace_contains(const Subspace& big, const Subspace& small) { return big.contains(small); }

/// Sublattice of Z^n with its basis in row Hermite normal form.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Lattice generated_by(std::size_t ambient_dim, const ZMatrix& generators) {
    Lattice l(ambient_dim);
    if (generators.empty()) return l;
    HermiteResult h = hermite_form(generators);
    for (auto& row : h.H)
      if (!is_zero_vec(row)) l.basis_.push_back(std::move(row));
    return l;
  }

  /// V ∩ Z^n for a rational subspace V.
  static Lattice saturated(const Subspace& V) {
    const std::size_t n = V.ambient_dim();
    if (V.dim() == 0) return Lattice(n);
    if (V.dim() == n) {
      ZMatrix id(n, zero_z(n));
      for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
      return generated_by(n, id);
    }
    // integer kernel of the complement rows C: left kernel of C^T
    ZMatrix C = V.orthogonal_complement();
    ZMatrix CT(n, zero_z(C.size()));
    for (std::size_t i = 0; i < C.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) CT[j][i] = C[i][j];
    HermiteResult h = hermite_form(CT);
    ZMatrix kernel;
    for (std::size_t i = 0; i < n; ++i)
      if (is_zero_vec(h.H[i])) kernel.push_back(h.U[i]);
    return generated_by(n, kernel);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const ZMatrix& basis() const { return basis_; }

  Subspace span() const { return Subspace::span(ambient_, basis_); }

  /// Canonical representative of v modulo the lattice (HNF reduction).
  ZVec reduce(ZVec v) const {
    for (const auto& row : basis_) {
      std::size_t p = 0;
      while (row[p] == 0) ++p;
      Integer f = floor_div(v[p], row[p]);
      if (f == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * row[j];
    }
    return v;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  ZMatrix basis_;
};

/// Order of sup/sub; nullopt stands for an infinite quotient (rank drop).
inline std::optional<Integer> lattice_index(const Lattice& sub, const Lattice& sup) {
  require(sub.ambient_dim() == sup.ambient_dim(), ErrorCode::DimensionMismatch, "lattice_index: ambient mismatch");
  const Subspace big = sup.span();
  for (const auto& v : sub.basis())
    require(big.contains(v), ErrorCode::InvalidArgument, "lattice_index: sub is not inside span(sup)");
  if (sub.rank() < sup.rank()) return std::nullopt;
  if (sup.rank() == 0) return Integer(1);
  QMatrix sup_q;
  for (const auto& v : sup.basis()) sup_q.push_back(to_q(v));
  ZMatrix coords;
  for (const auto& v : sub.basis()) {
    auto c = coordinates(sup_q, to_q(v));
    ZVec row;
    for (const auto& x : *c) {
      require(is_integer(x), ErrorCode::InvalidArgument, "lattice_index: sub is not a sublattice of sup");
      row.push_back(num(x));
    }
    coords.push_back(std::move(row));
  }
  Integer prod = 1;
  for (const auto& d : smith_diagonal(coords)) prod *= d;
  return prod;
}

/// gcd of the maximal minors of the columns (or rows) spanning a full-rank
/// family; equals the index of the generated lattice in its saturation.
inline Integer saturation_index(std::size_t ambient_dim, const ZMatrix& generators) {
  Lattice gen = Lattice::generated_by(ambient_dim, generators);
  Lattice sat = Lattice::saturated(gen.span());
  auto idx = lattice_index(gen, sat);
  return idx ? *idx : Integer(0);
}

/// Solves g . x = 1 for primitive g; returns x.
inline ZVec unit_combination(const ZVec& g) {
  ZVec x = zero_z(g.size());
  Integer d = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    if (d == 0) {
      d = g[i];
      x[i] = 1;
      continue;
    }
    Integer old_r = d, cur_r = g[i], old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
    while (cur_r != 0) {
      Integer q = old_r / cur_r;
      Integer tmp = old_r - q * cur_r;
      old_r = cur_r;
      cur_r = tmp;
      tmp = old_s - q * cur_s;
      old_s = cur_s;
      cur_s = tmp;
      tmp = old_t - q * cur_t;
      old_t = cur_t;
      cur_t = tmp;
    }
    for (std::size_t j = 0; j < i; ++j) x[j] *= old_s;
    x[i] = old_t;
    d = old_r;
  }
  if (d < 0) {
    for (auto& e : x) e = -e;
    d = -d;
  }
  require(d == 1, ErrorCode::Internal, "unit_combination: vector is not primitive");
  return x;
}

/// Integer representative of the primitive generator of the ray spanned by the
/// class of v in Z^n / (V ∩ Z^n), reduced modulo the Hermite basis of V ∩ Z^n.
inline IntVec quotient_primitive(const QVec& v, const Subspace& V) {
  require(v.size() == V.ambient_dim(), ErrorCode::DimensionMismatch, "quotient_primitive: length mismatch");
  require(!V.contains(v), ErrorCode::InvalidArgument, "quotient_primitive: vector lies in the subspace");
  const std::size_t n = V.ambient_dim();
  Lattice L = Lattice::saturated(V);
  if (L.rank() == 0) return primitive_vector(v);
  QMatrix ext = V.basis();
  ext.push_back(v);
  Lattice big = Lattice::saturated(Subspace::span(n, ext));
  QMatrix big_q;
  for (const auto& b : big.basis()) big_q.push_back(to_q(b));
  // coordinates of L's basis in the basis of big
  QMatrix lcoords;
  for (const auto& b : L.basis()) lcoords.push_back(*coordinates(big_q, to_q(b)));
  QMatrix ker = nullspace(lcoords, big_q.size());
  ZVec g = make_primitive(clear_denominators(ker.at(0)));
  QVec cv = *coordinates(big_q, v);
  if (dot(g, cv) < 0)
    for (auto& e : g) e = -e;
  ZVec x = unit_combination(g);
  ZVec w = zero_z(n);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) w[j] += x[i] * big.basis()[i][j];
  return L.reduce(std::move(w));
}

inline IntVec quotient_primitive(const ZVec& v, const Subspace& V) { return quotient_primitive(to_q(v), V); }

inline std::ostream& operator<<(std::ostream& os, const QVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << format_rational(v[i]);
  return os << ')';
}

}  // namespace troplith
