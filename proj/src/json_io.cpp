#include "framecert/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "framecert/errors.hpp"
#include "framecert/scalar.hpp"

namespace framecert {
namespace {

// ===========================================================================
// scalar entries
// ===========================================================================

Json entry_to_json(const Vector& v, std::size_t i) {
  if (v.field() == Field::Exact) return rational_to_string(v.exact_at(i));
  return v.float_at(i);
}

Rational exact_entry(const Json& e) {
  if (e.is_string()) return parse_rational(e.get<std::string>());
  if (e.is_number_integer() || e.is_number_unsigned()) {
    return parse_rational(std::to_string(e.get<std::int64_t>()));
  }
  fail(ErrorCode::ParseError, "exact entries must be \"p/q\" strings or integers");
}

double float_entry(const Json& e) {
  if (e.is_number()) return e.get<double>();
  fail(ErrorCode::ParseError, "float entries must be JSON numbers");
}

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorCode::ParseError, std::string("missing required key \"") + key + "\"");
  }
  return j.at(key);
}

std::size_t require_dim(const Json& j) {
  const Json& d = require_key(j, "dim");
  if (!d.is_number_integer() && !d.is_number_unsigned()) {
    fail(ErrorCode::ParseError, "\"dim\" must be a positive integer");
  }
  const std::int64_t dim = d.get<std::int64_t>();
  if (dim < 1) fail(ErrorCode::ParseError, "\"dim\" must be a positive integer");
  return static_cast<std::size_t>(dim);
}

Field require_field(const Json& j) {
  const Json& f = require_key(j, "field");
  if (!f.is_string()) fail(ErrorCode::ParseError, "\"field\" must be a string");
  return field_from_name(f.get<std::string>());
}

}  // namespace

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(entry_to_json(v, i));
  return arr;
}

Vector vector_from_json(const Json& j, Field field) {
  if (!j.is_array() || j.empty()) {
    fail(ErrorCode::ParseError, "vector must be a non-empty array of entries");
  }
  if (field == Field::Exact) {
    std::vector<Rational> entries;
    entries.reserve(j.size());
    for (const Json& e : j) entries.push_back(exact_entry(e));
    return Vector::from_exact(std::move(entries));
  }
  std::vector<double> entries;
  entries.reserve(j.size());
  for (const Json& e : j) entries.push_back(float_entry(e));
  return Vector::from_doubles(std::move(entries));
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i)));
  return rows;
}

Matrix matrix_from_json(const Json& j, Field field) {
  if (!j.is_array() || j.empty()) {
    fail(ErrorCode::ParseError, "matrix must be a non-empty array of rows");
  }
  std::vector<Vector> rows;
  rows.reserve(j.size());
  for (const Json& r : j) rows.push_back(vector_from_json(r, field));
  const std::size_t cols = rows.front().dim();
  Matrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != cols) fail(ErrorCode::ParseError, "matrix rows have unequal lengths");
    for (std::size_t k = 0; k < cols; ++k) {
      if (field == Field::Exact) {
        m.set(i, k, Scalar(rows[i].exact_at(k)));
      } else {
        m.set(i, k, Scalar(rows[i].float_at(k)));
      }
    }
  }
  return m;
}

Json witness_pair_to_json(const WitnessPair& pair) {
  Json j = Json::object();
  j["field"] = field_name(pair.x.field());
  j["x"] = vector_to_json(pair.x);
  j["y"] = vector_to_json(pair.y);
  j["measurement_gap"] = pair.measurement_gap;
  j["norm_gap"] = pair.norm_gap;
  j["phase_gap"] = pair.phase_gap;
  return j;
}

WitnessPair witness_pair_from_json(const Json& j) {
  Field field = Field::Float;
  if (j.contains("field")) {
    const Json& f = j.at("field");
    if (!f.is_string()) fail(ErrorCode::ParseError, "pair \"field\" must be a string");
    field = field_from_name(f.get<std::string>());
  }
  WitnessPair pair;
  pair.x = vector_from_json(require_key(j, "x"), field);
  pair.y = vector_from_json(require_key(j, "y"), field);
  pair.measurement_gap = float_entry(require_key(j, "measurement_gap"));
  pair.norm_gap = float_entry(require_key(j, "norm_gap"));
  pair.phase_gap = float_entry(require_key(j, "phase_gap"));
  return pair;
}

// ===========================================================================
// frame and subspace files
// ===========================================================================

Json frame_to_json(const Frame& f) {
  Json j = Json::object();
  j["dim"] = f.dim();
  j["field"] = field_name(f.field());
  Json vecs = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) vecs.push_back(vector_to_json(f.vec(i)));
  j["vectors"] = vecs;
  return j;
}

Frame frame_from_json(const Json& j) {
  const std::size_t dim = require_dim(j);
  const Field field = require_field(j);
  const Json& vecs = require_key(j, "vectors");
  if (!vecs.is_array() || vecs.empty()) {
    fail(ErrorCode::ParseError, "\"vectors\" must be a non-empty array");
  }
  std::vector<Vector> vectors;
  vectors.reserve(vecs.size());
  for (const Json& v : vecs) {
    Vector vec = vector_from_json(v, field);
    if (vec.dim() != dim) {
      fail(ErrorCode::ParseError, "frame vector length does not match \"dim\"");
    }
    vectors.push_back(std::move(vec));
  }
  return Frame(dim, std::move(vectors));
}

Json family_to_json(const SubspaceFamily& fam) {
  Json j = Json::object();
  j["dim"] = fam.ambient_dim();
  j["field"] = field_name(fam.field());
  Json subs = Json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const Matrix& basis = fam.member(i).basis();
    Json cols = Json::array();
    for (std::size_t c = 0; c < basis.cols(); ++c) cols.push_back(vector_to_json(basis.column(c)));
    subs.push_back(Json{{"basis", cols}});
  }
  j["subspaces"] = subs;
  return j;
}

SubspaceFamily family_from_json(const Json& j, const ToleranceConfig& tol) {
  const std::size_t dim = require_dim(j);
  const Field field = require_field(j);
  const Json& subs = require_key(j, "subspaces");
  if (!subs.is_array() || subs.empty()) {
    fail(ErrorCode::ParseError, "\"subspaces\" must be a non-empty array");
  }
  std::vector<Subspace> members;
  members.reserve(subs.size());
  for (const Json& s : subs) {
    const Json& basis = require_key(s, "basis");
    if (!basis.is_array() || basis.empty()) {
      fail(ErrorCode::ParseError, "\"basis\" must be a non-empty array of vectors");
    }
    std::vector<Vector> cols;
    cols.reserve(basis.size());
    for (const Json& c : basis) {
      Vector col = vector_from_json(c, field);
      if (col.dim() != dim) {
        fail(ErrorCode::ParseError, "basis vector length does not match \"dim\"");
      }
      cols.push_back(std::move(col));
    }
    members.emplace_back(Matrix::from_columns(cols), tol);
  }
  return SubspaceFamily(dim, std::move(members));
}

// ===========================================================================
// certificates
// ===========================================================================

Json certificate_to_json(const Certificate& cert, const std::string& inputs_digest,
                         const Json& extra_witness) {
  Json j = Json::object();
  j["verdict"] = verdict_name(cert.verdict);
  j["method"] = method_name(cert.method);
  j["arithmetic_mode"] = field_name(cert.arithmetic_mode);
  Json witness = Json::object();
  if (cert.value) witness["value"] = *cert.value;
  if (cert.subset) witness["subset"] = *cert.subset;
  if (cert.coefficients) {
    witness["coefficients_field"] = field_name(cert.coefficients->field());
    witness["coefficients"] = vector_to_json(*cert.coefficients);
  }
  if (cert.pair) witness["pair"] = witness_pair_to_json(*cert.pair);
  for (const auto& [key, val] : extra_witness.items()) witness[key] = val;
  j["witness"] = witness;
  j["assumptions"] = cert.assumptions;
  j["notes"] = cert.notes;
  j["inputs_digest"] = inputs_digest;
  j["tool_version"] = kToolVersion;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  const Json& verdict = require_key(j, "verdict");
  const Json& method = require_key(j, "method");
  const Json& mode = require_key(j, "arithmetic_mode");
  if (!verdict.is_string() || !method.is_string() || !mode.is_string()) {
    fail(ErrorCode::ParseError, "verdict, method, and arithmetic_mode must be strings");
  }
  cert.verdict = verdict_from_name(verdict.get<std::string>());
  cert.method = method_from_name(method.get<std::string>());
  cert.arithmetic_mode = field_from_name(mode.get<std::string>());
  const Json witness = j.contains("witness") ? j.at("witness") : Json::object();
  if (!witness.is_object()) fail(ErrorCode::ParseError, "\"witness\" must be an object");
  if (witness.contains("value")) {
    const Json& v = witness.at("value");
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
      fail(ErrorCode::ParseError, "witness \"value\" must be an integer");
    }
    cert.value = v.get<std::size_t>();
  }
  if (witness.contains("subset")) {
    const Json& s = witness.at("subset");
    if (!s.is_array()) fail(ErrorCode::ParseError, "witness \"subset\" must be an array");
    std::vector<std::size_t> subset;
    for (const Json& e : s) {
      if (!e.is_number_integer() && !e.is_number_unsigned()) {
        fail(ErrorCode::ParseError, "witness \"subset\" entries must be integers");
      }
      subset.push_back(e.get<std::size_t>());
    }
    cert.subset = std::move(subset);
  }
  if (witness.contains("coefficients")) {
    Field cf = cert.arithmetic_mode;
    if (witness.contains("coefficients_field")) {
      const Json& f = witness.at("coefficients_field");
      if (!f.is_string()) fail(ErrorCode::ParseError, "\"coefficients_field\" must be a string");
      cf = field_from_name(f.get<std::string>());
    }
    cert.coefficients = vector_from_json(witness.at("coefficients"), cf);
  }
  if (witness.contains("pair")) cert.pair = witness_pair_from_json(witness.at("pair"));
  if (j.contains("assumptions")) {
    for (const Json& a : j.at("assumptions")) cert.assumptions.push_back(a.get<std::string>());
  }
  if (j.contains("notes")) {
    for (const Json& n : j.at("notes")) cert.notes.push_back(n.get<std::string>());
  }
  return cert;
}

// ===========================================================================
// text helpers
// ===========================================================================

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "input is not valid JSON");
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace framecert
