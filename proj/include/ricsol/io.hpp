#pragma once

#include "ricsol/algebra.hpp"
#include "ricsol/classify.hpp"
#include "ricsol/curvature.hpp"
#include "ricsol/derivations.hpp"
#include "ricsol/soliton.hpp"
#include "ricsol/structure.hpp"
#include "ricsol/version.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace ricsol {

using Json = nlohmann::ordered_json;

//------------------------------------------------------------------------------
// Scalar parsing with mode classification
//------------------------------------------------------------------------------

/// Tracks which scalar flavors a file uses. Integers are compatible with
/// both modes; mixing "p/q" rationals with decimal floats in one file is
/// rejected, and decimal floats are rejected outright in exact mode.
struct ScalarScan {
  bool saw_rational = false;
  bool saw_float = false;

  void check_consistent() const {
    if (saw_rational && saw_float)
      throw ParseError("file mixes exact rational and decimal float scalars");
  }
};

namespace detail {

inline bool parse_double_literal(const std::string& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;  // from_chars rejects leading '+'
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

template <class K>
K scalar_from_json(const Json& v, ScalarScan& scan) {
  if (v.is_number_integer()) {
    return frac<K>(v.get<long long>());
  }
  if (v.is_number_float()) {
    scan.saw_float = true;
    scan.check_consistent();
    if constexpr (FieldTraits<K>::exact)
      throw ParseError("exact mode accepts only integer or \"p/q\" scalars");
    else
      return v.get<double>();
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (is_rational_literal(s)) {
      if (s.find('/') != std::string::npos) {
        scan.saw_rational = true;
        scan.check_consistent();
      }
      auto r = parse_rational(s);
      if (!r) throw ParseError("malformed rational scalar \"" + s + "\"");
      return FieldTraits<K>::from_ratio(*r);
    }
    double d;
    if (parse_double_literal(s, d)) {
      scan.saw_float = true;
      scan.check_consistent();
      if constexpr (FieldTraits<K>::exact)
        throw ParseError("exact mode accepts only integer or \"p/q\" scalars, got \"" + s + "\"");
      else
        return d;
    }
    throw ParseError("unparseable scalar \"" + s + "\"");
  }
  throw ParseError("scalar must be a string or number, got " + std::string(v.type_name()));
}

inline std::size_t index_from_json(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

} // namespace detail

//------------------------------------------------------------------------------
// Algebra files
//------------------------------------------------------------------------------

/// File format:
///   { "dim": 3, "basis": ["A0","Y1","Z0"], "gram": null | [[...]],
///     "brackets": [ {"i":0, "j":1, "terms":[{"k":1, "v":"1/2"}]}, ... ] }
/// "gram": null (or absent) means the identity. "basis" is optional.
template <class K>
MetricLieAlgebra<K> algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim"))
    throw ParseError("algebra file must be an object with a \"dim\" field");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0)
    throw ParseError("\"dim\" must be a positive integer");
  const std::size_t dim = j["dim"].get<std::size_t>();

  LieAlgebra<K> g = [&] {
    if (j.contains("basis") && !j["basis"].is_null()) {
      if (!j["basis"].is_array()) throw ParseError("\"basis\" must be an array of names");
      std::vector<std::string> names;
      for (const Json& v : j["basis"]) names.push_back(v.get<std::string>());
      if (names.size() != dim)
        throw ParseError("\"basis\" lists " + std::to_string(names.size()) + " names for dim " +
                         std::to_string(dim));
      return LieAlgebra<K>(dim, std::move(names));
    }
    return LieAlgebra<K>(dim);
  }();

  ScalarScan scan;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw ParseError("\"brackets\" must be an array");
    for (const Json& entry : j["brackets"]) {
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
          !entry.contains("terms"))
        throw ParseError("each bracket entry needs \"i\", \"j\" and \"terms\"");
      std::size_t i = detail::index_from_json(entry["i"], "bracket index \"i\"");
      std::size_t jj = detail::index_from_json(entry["j"], "bracket index \"j\"");
      std::vector<BracketTerm<K>> terms;
      for (const Json& t : entry["terms"]) {
        if (!t.is_object() || !t.contains("k") || !t.contains("v"))
          throw ParseError("each bracket term needs \"k\" and \"v\"");
        terms.push_back({detail::index_from_json(t["k"], "term index \"k\""),
                         detail::scalar_from_json<K>(t["v"], scan)});
      }
      g.set_bracket(i, jj, terms);  // throws StructuralError on bad indices
    }
  }

  if (!j.contains("gram") || j["gram"].is_null())
    return MetricLieAlgebra<K>(std::move(g));

  const Json& jg = j["gram"];
  if (!jg.is_array() || jg.size() != dim)
    throw ParseError("\"gram\" must be null or a dim x dim matrix");
  Mat<K> gram(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!jg[r].is_array() || jg[r].size() != dim)
      throw ParseError("\"gram\" must be null or a dim x dim matrix");
    for (std::size_t c = 0; c < dim; ++c)
      gram(r, c) = detail::scalar_from_json<K>(jg[r][c], scan);
  }
  return MetricLieAlgebra<K>(std::move(g), std::move(gram));
}

template <class K>
MetricLieAlgebra<K> load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return algebra_from_json<K>(j);
}

template <class K>
Json algebra_to_json(const MetricLieAlgebra<K>& m) {
  const LieAlgebra<K>& g = m.algebra;
  Json j;
  j["dim"] = g.dim();
  j["basis"] = g.basis_names();
  if (m.gram == Mat<K>::identity(g.dim())) {
    j["gram"] = nullptr;
  } else {
    Json rows = Json::array();
    for (std::size_t r = 0; r < g.dim(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < g.dim(); ++c)
        row.push_back(FieldTraits<K>::to_string(m.gram(r, c)));
      rows.push_back(std::move(row));
    }
    j["gram"] = std::move(rows);
  }
  Json brackets = Json::array();
  for (const auto& [pair, terms] : g.table()) {
    Json entry;
    entry["i"] = pair.first;
    entry["j"] = pair.second;
    Json jterms = Json::array();
    for (const auto& t : terms) {
      Json jt;
      jt["k"] = t.k;
      jt["v"] = FieldTraits<K>::to_string(t.coeff);
      jterms.push_back(std::move(jt));
    }
    entry["terms"] = std::move(jterms);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  return j;
}

//------------------------------------------------------------------------------
// Report serialization (all scalars as strings; see README for schemas)
//------------------------------------------------------------------------------

namespace detail {

template <class K>
Json matrix_to_json(const Mat<K>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(FieldTraits<K>::to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string double_string(double x) { return FieldTraits<double>::to_string(x); }

} // namespace detail

template <class K>
Json validation_to_json(const ValidationReport<K>& rep) {
  Json j;
  j["ok"] = rep.ok;
  j["jacobi_max_residual"] = FieldTraits<K>::to_string(rep.max_jacobi_residual);
  j["gram_symmetric"] = rep.gram_symmetric;
  j["gram_pd"] = rep.gram_positive_definite;
  j["messages"] = rep.messages;
  return j;
}

template <class K>
Json curvature_to_json(const CurvatureReport<K>& rep) {
  Json j;
  j["ricci"] = detail::matrix_to_json(rep.ricci);
  j["scalar"] = FieldTraits<K>::to_string(rep.scalar);
  Json conn = Json::array();
  for (const Mat<K>& n : rep.connection.nabla) conn.push_back(detail::matrix_to_json(n));
  j["connection"] = std::move(conn);

  Json nonzero = Json::array();
  const RiemannTensor<K>& rie = rep.riemann;
  const std::size_t d = rie.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t l = 0; l < d; ++l) {
          const K& v = rie.at(a, b, c, l);
          bool keep;
          if constexpr (FieldTraits<K>::exact)
            keep = v != 0;
          else
            keep = std::fabs(v) > 1e-13;  // suppress arithmetic dust
          if (keep) {
            Json e;
            e["ijkl"] = {a, b, c, l};
            e["v"] = FieldTraits<K>::to_string(v);
            nonzero.push_back(std::move(e));
          }
        }
  j["riemann_nonzero"] = std::move(nonzero);
  return j;
}

template <class K>
Json derivations_to_json(const DerivationSpace<K>& space) {
  Json j;
  j["dimension"] = space.dimension;
  Json basis = Json::array();
  for (const Mat<K>& d : space.basis) basis.push_back(detail::matrix_to_json(d));
  j["basis"] = std::move(basis);
  j["max_leibniz_residual"] = FieldTraits<K>::to_string(space.max_leibniz_residual);
  return j;
}

/// "residual" is the Frobenius norm as a double; "residual_sq" carries the
/// exact squared value (rational in exact mode).
template <class K>
Json soliton_to_json(const SolitonResult<K>& res, const std::vector<std::string>& basis_names) {
  Json j;
  j["status"] = res.status == SolitonStatus::Feasible ? "feasible" : "infeasible";
  j["c"] = res.c ? Json(FieldTraits<K>::to_string(*res.c)) : Json(nullptr);
  j["D"] = res.D_matrix ? detail::matrix_to_json(*res.D_matrix) : Json(nullptr);
  j["residual"] = detail::double_string(res.residual_norm());
  j["residual_sq"] = FieldTraits<K>::to_string(res.residual_sq);
  if (res.obstruction) {
    Json o;
    o["row"] = basis_names.at(res.obstruction->row);
    o["col"] = basis_names.at(res.obstruction->col);
    o["value"] = FieldTraits<K>::to_string(res.obstruction->value);
    j["obstruction"] = std::move(o);
  } else {
    j["obstruction"] = nullptr;
  }
  return j;
}

inline Json structure_to_json(const StructureReport& rep) {
  Json j;
  j["derived_series_dims"] = rep.derived_series_dims;
  j["solvable"] = rep.solvable;
  j["triangular_basis_found"] = rep.triangular_basis_found;
  j["triangular_order"] = rep.triangular_order ? Json(*rep.triangular_order) : Json(nullptr);
  j["eigen_sample_real"] = rep.eigen_sample_real;
  j["samples_used"] = rep.samples_used;
  return j;
}

template <class K>
Json angle_to_json(const AnglePair<K>& theta) {
  Json j;
  j["radians"] = detail::double_string(theta.radians());
  j["cos"] = FieldTraits<K>::to_string(theta.cos_t);
  j["sin"] = FieldTraits<K>::to_string(theta.sin_t);
  return j;
}

template <class K>
Json classification_to_json(const ClassificationRecord<K>& rec) {
  Json j;
  j["n"] = rec.n;
  j["theta"] = angle_to_json(rec.theta);
  j["basis"] = rec.basis;
  j["ricci"] = detail::matrix_to_json(rec.ricci);
  j["soliton"] = soliton_to_json(rec.soliton, rec.basis);
  j["structure"] = structure_to_json(rec.structure);
  j["verdict_scope"] = rec.verdict_scope;
  return j;
}

//------------------------------------------------------------------------------
// Sweep manifests
//------------------------------------------------------------------------------

inline std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// The timestamp lives only in the header and is excluded from
/// reproducibility comparisons; everything else is deterministic given the
/// header parameters.
template <class K>
Json manifest_to_json(const SweepManifest<K>& sweep, const std::string& timestamp) {
  Json header;
  header["tool"] = "ricsol";
  header["version"] = kVersion;
  header["timestamp"] = timestamp;
  header["mode"] = FieldTraits<K>::mode_name;
  header["tolerance"] = FieldTraits<K>::to_string(sweep.tolerance);
  header["seed"] = sweep.seed;
  header["samples"] = sweep.samples;
  header["n_range"] = {sweep.n_min, sweep.n_max};
  Json grid;
  grid["type"] = sweep.grid.type;
  grid["steps"] = sweep.grid.points.size();
  Json points = Json::array();
  for (const AnglePair<K>& p : sweep.grid.points) points.push_back(angle_to_json(p));
  grid["points"] = std::move(points);
  header["theta_grid"] = std::move(grid);

  Json j;
  j["header"] = std::move(header);
  Json records = Json::array();
  for (const ClassificationRecord<K>& rec : sweep.records)
    records.push_back(classification_to_json(rec));
  j["records"] = std::move(records);
  return j;
}

/// Columns: n, theta (radians, double), status, residual (Frobenius norm as
/// double), c (exact "p/q" in exact mode, empty when infeasible).
template <class K>
std::string manifest_to_csv(const SweepManifest<K>& sweep) {
  std::ostringstream out;
  out << "n,theta,status,residual,c\n";
  for (const ClassificationRecord<K>& rec : sweep.records) {
    out << rec.n << ',' << detail::double_string(rec.theta.radians()) << ','
        << (rec.soliton.status == SolitonStatus::Feasible ? "feasible" : "infeasible") << ','
        << detail::double_string(rec.soliton.residual_norm()) << ',';
    if (rec.soliton.c) out << FieldTraits<K>::to_string(*rec.soliton.c);
    out << '\n';
  }
  return out.str();
}

} // namespace ricsol
