#include "affine_frames/documents.hpp"

#include "affine_frames/errors.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace affine_frames {
namespace {

constexpr std::array<std::pair<ResultKind, std::string_view>, 8> kKindNames{{
    {ResultKind::frame, "frame"},
    {ResultKind::completion, "completion"},
    {ResultKind::bezout, "bezout"},
    {ResultKind::mubasis, "mubasis"},
    {ResultKind::section, "section"},
    {ResultKind::canonical, "canonical"},
    {ResultKind::sylvester, "sylvester"},
    {ResultKind::verify, "verify"},
}};

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
    const auto last_nl = text.rfind('\n', upto == 0 ? 0 : upto - 1);
    const auto column = last_nl == std::string_view::npos || upto == 0 ? upto + 1 : upto - last_nl;
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column),
                     "malformed JSON");
  }
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where.empty() ? key : where + "." + key, "missing field");
  return *it;
}

std::string child(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

std::string child(const std::string& where, const char* key) {
  return where.empty() ? std::string(key) : where + "." + key;
}

}  // namespace

PolyVector CurveDocument::to_vector() const {
  PolyVector v(n);
  for (std::size_t i = 0; i < n && i < coeffs.size(); ++i) v[i] = Polynomial(coeffs[i]);
  return v;
}

CurveDocument CurveDocument::from_vector(const PolyVector& v, std::optional<std::string> label) {
  CurveDocument doc;
  doc.n = v.size();
  doc.label = std::move(label);
  for (const auto& p : v) doc.coeffs.emplace_back(p.coeffs().begin(), p.coeffs().end());
  return doc;
}

CurveDocument curve_from_json(const Json& j, const std::string& where) {
  CurveDocument doc;
  const Json& n = member(j, "n", where);
  if (!n.is_number_integer()) throw ParseError(child(where, "n"), "n must be an integer");
  if (n.get<long long>() < 2) throw ParseError(child(where, "n"), "n must be at least 2");
  doc.n = n.get<std::size_t>();

  const std::string cw = child(where, "coeffs");
  const Json& rows = member(j, "coeffs", where);
  if (!rows.is_array()) throw ParseError(cw, "coeffs must be an array of rows");
  if (rows.size() != doc.n) {
    throw ParseError(cw, "expected " + std::to_string(doc.n) + " rows, got " + std::to_string(rows.size()));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array()) throw ParseError(child(cw, i), "row must be an array of rational strings");
    std::vector<Rational> row;
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      row.push_back(decode_rational(rows[i][k], child(child(cw, i), k)));
    }
    doc.coeffs.push_back(std::move(row));
  }
  if (auto it = j.find("label"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw ParseError(child(where, "label"), "label must be a string");
    doc.label = it->get<std::string>();
  }
  return doc;
}

CurveDocument parse_curve(std::string_view text) { return curve_from_json(parse_json(text)); }

Json curve_to_json(const CurveDocument& doc) {
  Json rows = Json::array();
  for (const auto& row : doc.coeffs) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    rows.push_back(std::move(r));
  }
  Json j{{"n", doc.n}, {"coeffs", std::move(rows)}};
  if (doc.label) j["label"] = *doc.label;
  return j;
}

std::string_view to_string(ResultKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ResultKind> parse_result_kind(std::string_view name) {
  for (const auto& [k, s] : kKindNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

std::string serialize_result(const ResultDocument& doc) {
  Json j{{"kind", std::string(to_string(doc.kind))},
         {"input", curve_to_json(doc.input)},
         {"payload", doc.payload},
         {"metadata", doc.metadata}};
  return j.dump(2) + "\n";
}

ResultDocument parse_result(std::string_view text) {
  const Json j = parse_json(text);
  ResultDocument doc;
  const Json& kind = member(j, "kind", "");
  if (!kind.is_string()) throw ParseError("kind", "kind must be a string");
  auto parsed = parse_result_kind(kind.get<std::string>());
  if (!parsed) throw ParseError("kind", "unknown result kind \"" + kind.get<std::string>() + "\"");
  doc.kind = *parsed;
  doc.input = curve_from_json(member(j, "input", ""), "input");
  doc.payload = member(j, "payload", "");
  doc.metadata = member(j, "metadata", "");
  if (!doc.payload.is_object()) throw ParseError("payload", "expected an object");
  if (!doc.metadata.is_object()) throw ParseError("metadata", "expected an object");
  return doc;
}

bool looks_like_result(std::string_view text) {
  try {
    const Json j = Json::parse(text.begin(), text.end());
    return j.is_object() && j.contains("kind");
  } catch (const Json::parse_error&) {
    return false;
  }
}

Json encode(const Rational& r) { return to_string(r); }

Json encode(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Json encode(const PolyVector& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(encode(p));
  return out;
}

Json encode(const PolyMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json encode(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json encode(Degree d) {
  if (d.is_minus_infinity()) return "-inf";
  return d.value();
}

Rational decode_rational(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "rationals must be p/q or integer strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where, e.what());
  }
}

Polynomial decode_polynomial(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "polynomial must be an array of coefficients");
  std::vector<Rational> coeffs;
  for (std::size_t k = 0; k < j.size(); ++k) coeffs.push_back(decode_rational(j[k], child(where, k)));
  return Polynomial(std::move(coeffs));
}

PolyVector decode_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "vector must be an array of polynomials");
  PolyVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = decode_polynomial(j[i], child(where, i));
  return v;
}

PolyMatrix decode_poly_matrix(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError(where, "matrix must be an array of rows");
  PolyMatrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) throw ParseError(child(where, r), "ragged matrix row");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = decode_polynomial(j[r][c], child(child(where, r), c));
  }
  return m;
}

RatMatrix decode_rat_matrix(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError(where, "matrix must be an array of rows");
  RatMatrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) throw ParseError(child(where, r), "ragged matrix row");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = decode_rational(j[r][c], child(child(where, r), c));
  }
  return m;
}

}  // namespace affine_frames
