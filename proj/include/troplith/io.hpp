#pragma once

// JSON documents for cycles, functions, maps, witnesses and reports.
// Rationals travel as strings "p/q"; integers as JSON numbers when they fit
// in 64 bits and as decimal strings otherwise.  Structural problems raise
// MALFORMED_INPUT; geometric ones (not a complex, unbalanced) raise their own
// codes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "troplith/affine_map.hpp"
#include "troplith/cycle.hpp"
#include "troplith/decompose.hpp"
#include "troplith/errors.hpp"
#include "troplith/exact_arith.hpp"
#include "troplith/local_geometry.hpp"
#include "troplith/pl_function.hpp"
#include "troplith/polyhedron.hpp"

namespace troplith::io {

using json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

// ---------------------------------------------------------------------------
// scalars

inline json to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(z);
  return z.str();
}

inline json to_json(const Rational& q) { return format_rational(q); }

inline Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  fail(ErrorCode::Malformed, "expected an integer, got " + j.dump());
}

inline Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
    }
  }
  fail(ErrorCode::Malformed, "expected a rational string, got " + j.dump());
}

inline json to_json(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline json to_json(const ZVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

template <class T>
json to_json_list(const std::vector<T>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::Malformed, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) fail(ErrorCode::Malformed, std::string("field '") + key + "' must be an array");
  return a;
}

inline std::size_t nat_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_number_integer() || a.get<std::int64_t>() < 0)
    fail(ErrorCode::Malformed, std::string("field '") + key + "' must be a natural number");
  return static_cast<std::size_t>(a.get<std::int64_t>());
}

inline QVec qvec_from(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) fail(ErrorCode::Malformed, "expected a vector of length " + std::to_string(n));
  QVec v;
  for (const auto& x : j) v.push_back(rational_from(x));
  return v;
}

inline ZVec zvec_from(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) fail(ErrorCode::Malformed, "expected a vector of length " + std::to_string(n));
  ZVec v;
  for (const auto& x : j) v.push_back(integer_from(x));
  return v;
}

/// Comma separated rationals, as given on the command line.
inline QVec parse_point(const std::string& text) {
  QVec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(parse_rational(item));
    } catch (const Error&) {
      fail(ErrorCode::InvalidArgument, "malformed coordinate '" + item + "'");
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// cycles

inline json to_json(const Polyhedron& P) {
  return {{"vertices", to_json_list(P.vertices())},
          {"rays", to_json_list(P.rays())},
          {"lineality", to_json_list(P.lineality())}};
}

inline json to_json(const Polyhedron& P, const Integer& weight) {
  json j = to_json(P);
  j["weight"] = to_json(weight);
  return j;
}

inline json to_json(const TropicalCycle& X, const std::optional<std::string>& name = std::nullopt) {
  json cells = json::array();
  for (const auto& c : X.cells()) cells.push_back(to_json(c.cell, c.weight));
  json j = {{"format_version", kFormatVersion}, {"ambient_dim", X.ambient_dim()}, {"dim", X.dim()}, {"cells", cells}};
  if (name) j["name"] = *name;
  return j;
}

struct CycleDocument {
  std::size_t ambient_dim = 0;
  int dim = 0;
  CellList cells;  // as written in the file
  std::optional<std::string> name;
};

inline CycleDocument cycle_document_from(const json& j) {
  CycleDocument doc;
  const json& version = field(j, "format_version");
  if (!version.is_string()) fail(ErrorCode::Malformed, "format_version must be a string");
  doc.ambient_dim = nat_field(j, "ambient_dim");
  doc.dim = static_cast<int>(nat_field(j, "dim"));
  const std::size_t n = doc.ambient_dim;
  for (const auto& c : array_field(j, "cells")) {
    ZMatrix R, L;
    QMatrix V;
    for (const auto& v : array_field(c, "vertices")) V.push_back(qvec_from(v, n));
    for (const auto& r : array_field(c, "rays")) R.push_back(zvec_from(r, n));
    for (const auto& l : array_field(c, "lineality")) L.push_back(zvec_from(l, n));
    if (V.empty()) fail(ErrorCode::Malformed, "a cell needs at least one vertex");
    doc.cells.push_back({Polyhedron::from_generators(n, V, R, L), integer_from(field(c, "weight"))});
  }
  if (j.contains("name") && j.at("name").is_string()) doc.name = j.at("name").get<std::string>();
  return doc;
}

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<BalancingViolation> violations;

  bool ok() const { return errors.empty() && violations.empty(); }
};

/// Checks shape, the complex property and balancing of a document.
inline ValidationReport validate(const CycleDocument& doc) {
  ValidationReport r;
  if (doc.dim > static_cast<int>(doc.ambient_dim)) r.errors.push_back("dim exceeds ambient_dim");
  for (std::size_t i = 0; i < doc.cells.size(); ++i)
    if (doc.cells[i].cell.dim() != doc.dim)
      r.errors.push_back("cell " + std::to_string(i) + " has dimension " + std::to_string(doc.cells[i].cell.dim()));
  if (!r.errors.empty()) return r;
  if (!is_complex(doc.cells)) {
    r.errors.push_back("cells do not form a polyhedral complex");
    return r;
  }
  r.violations = balancing_violations(doc.cells);
  return r;
}

inline json to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& b : r.violations) v.push_back({{"ridge", to_json(b.ridge)}, {"defect", to_json(b.defect)}});
  return {{"valid", r.ok()}, {"errors", r.errors}, {"violations", v}};
}

/// Parses and, when asked, validates; the result is canonical.
inline TropicalCycle cycle_from(const json& j, bool check = true) {
  CycleDocument doc = cycle_document_from(j);
  if (check) {
    ValidationReport r = validate(doc);
    if (!r.errors.empty()) fail(ErrorCode::NotAComplex, r.errors.front());
    if (!r.violations.empty()) fail(ErrorCode::NotBalanced, "cycle is not balanced at " + std::to_string(r.violations.size()) + " ridge(s)");
    return TropicalCycle::from_complex(doc.ambient_dim, doc.dim, doc.cells);
  }
  for (const auto& c : doc.cells)
    require(c.cell.dim() == doc.dim, ErrorCode::DimensionMismatch, "cell dimension differs from dim");
  return TropicalCycle::from_cells(doc.ambient_dim, doc.dim, doc.cells);
}

// ---------------------------------------------------------------------------
// functions, maps, witnesses, reports

inline json to_json(const TropicalPolynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({{"exp", to_json(t.exponent)}, {"coeff", to_json(t.coefficient)}});
  return {{"ambient_dim", p.ambient_dim()}, {"terms", terms}};
}

inline TropicalPolynomial polynomial_from(const json& j) {
  const json& terms = array_field(j, "terms");
  if (terms.empty()) fail(ErrorCode::Malformed, "a tropical polynomial needs at least one term");
  const std::size_t n = j.contains("ambient_dim") ? nat_field(j, "ambient_dim") : field(terms[0], "exp").size();
  std::vector<TropicalTerm> out;
  for (const auto& t : terms) out.push_back({zvec_from(field(t, "exp"), n), rational_from(field(t, "coeff"))});
  return TropicalPolynomial::make(n, std::move(out));
}

inline json to_json(const RationalFunctionExpr& r) {
  return {{"numerator", to_json(r.numerator)}, {"denominator", to_json(r.denominator)}};
}

/// Either {"numerator", "denominator"} or a single polynomial.
inline RationalFunctionExpr function_from(const json& j) {
  if (j.is_object() && j.contains("numerator")) {
    auto num_p = polynomial_from(field(j, "numerator"));
    auto den_p = polynomial_from(field(j, "denominator"));
    require(num_p.ambient_dim() == den_p.ambient_dim(), ErrorCode::DimensionMismatch,
            "numerator and denominator live in different spaces");
    return {num_p, den_p};
  }
  auto p = polynomial_from(j);
  return {p, TropicalPolynomial::constant(p.ambient_dim())};
}

inline json to_json(const IntegerAffineMap& f) {
  return {{"domain_dim", f.domain_dim}, {"matrix", to_json_list(f.matrix)}, {"shift", to_json(f.shift)}};
}

inline IntegerAffineMap map_from(const json& j) {
  const json& rows = array_field(j, "matrix");
  std::size_t n = j.contains("domain_dim") ? nat_field(j, "domain_dim") : (rows.empty() ? 0 : rows[0].size());
  ZMatrix A;
  for (const auto& r : rows) A.push_back(zvec_from(r, n));
  QVec shift = j.contains("shift") ? qvec_from(j.at("shift"), A.size()) : zero_q(A.size());
  return IntegerAffineMap::make(n, std::move(A), std::move(shift));
}

inline json to_json(const DecompositionWitness& w) {
  json s = json::array();
  for (const auto& x : w.summands) s.push_back({{"fan", to_json(x.fan)}, {"point", to_json(x.point)}});
  return {{"summands", s}, {"target", to_json(w.target)}};
}

inline DecompositionWitness witness_from(const json& j) {
  DecompositionWitness w;
  for (const auto& s : array_field(j, "summands")) {
    TropicalCycle F = cycle_from(field(s, "fan"));
    QVec p = qvec_from(field(s, "point"), F.ambient_dim());
    w.summands.push_back({std::move(F), std::move(p)});
  }
  if (j.contains("target")) w.target = cycle_from(j.at("target"));
  return w;
}

inline json to_json(const EquivalenceReport& r) {
  json j = {{"verdict", to_string(r.verdict)},
            {"evidence", {{"recession_x", to_json(r.rec_x)}, {"recession_y", to_json(r.rec_y)}}}};
  if (r.sample && r.sample->witness)
    j["evidence"]["test_cycle"] = {{"cycle", to_json(*r.sample->witness)},
                                   {"degree_x", to_json(r.sample->degree_x)},
                                   {"degree_y", to_json(r.sample->degree_y)}};
  return j;
}

inline json to_json(const BoundedEquivWitness& w) {
  return {{"map", to_json(w.f)}, {"Y", to_json(w.Y)}, {"phi", to_json(w.phi)}, {"claim", to_json(w.claim)}};
}

inline json to_json(const SplitDim& s) {
  json j;
  switch (s.kind) {
    case SplitDim::Kind::Infinite: return {{"kind", "infinite"}};
    case SplitDim::Kind::Finite: j = {{"kind", "finite"}, {"value", s.value}}; break;
    case SplitDim::Kind::Unknown: j = {{"kind", "unknown"}, {"lower", s.lower}, {"upper", s.upper}}; break;
  }
  json cert = json::array();
  for (const auto& c : s.certificate) cert.push_back(to_json(c));
  j["certificate"] = cert;
  return j;
}

// ---------------------------------------------------------------------------
// files

inline std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  require(in.good(), ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

/// Syntax errors become MALFORMED_INPUT.
inline json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Malformed, path + ": " + e.what());
  }
}

inline TropicalCycle read_cycle(const std::string& path, bool check = true) { return cycle_from(read_json(path), check); }

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  require(out.good(), ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

}  // namespace troplith::io
