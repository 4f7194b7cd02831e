#pragma once

#include "affine_frames/poly.hpp"
#include "affine_frames/rat_matrix.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace affine_frames {

using Json = nlohmann::json;

/// Curve or vector input: n rows of exact rational coefficients, ascending
/// powers. Rows may have different lengths; shorter rows are zero-padded.
struct CurveDocument {
  std::size_t n = 0;
  std::vector<std::vector<Rational>> coeffs;
  std::optional<std::string> label;

  PolyVector to_vector() const;
  static CurveDocument from_vector(const PolyVector& v, std::optional<std::string> label = {});

  friend bool operator==(const CurveDocument&, const CurveDocument&) = default;
};

/// Throws ParseError with a line/column or field path on malformed input.
CurveDocument parse_curve(std::string_view text);
CurveDocument curve_from_json(const Json& j, const std::string& where = "");
Json curve_to_json(const CurveDocument& doc);

enum class ResultKind { frame, completion, bezout, mubasis, section, canonical, sylvester, verify };

std::string_view to_string(ResultKind kind);
std::optional<ResultKind> parse_result_kind(std::string_view name);

/// Output of every CLI command. `input` is the document the command ran on;
/// payload and metadata hold exact rationals as strings.
struct ResultDocument {
  ResultKind kind = ResultKind::frame;
  CurveDocument input;
  Json payload = Json::object();
  Json metadata = Json::object();

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

/// Stable key order and rational formatting; ends with a newline.
std::string serialize_result(const ResultDocument& doc);
ResultDocument parse_result(std::string_view text);

/// Whether the text is a ResultDocument (has a "kind" member) rather than a curve.
bool looks_like_result(std::string_view text);

// Exact encodings shared by the payload writers and readers.
Json encode(const Rational& r);
Json encode(const Polynomial& p);
Json encode(const PolyVector& v);
Json encode(const PolyMatrix& m);
Json encode(const RatMatrix& m);
Json encode(Degree d);

Rational decode_rational(const Json& j, const std::string& where);
Polynomial decode_polynomial(const Json& j, const std::string& where);
PolyVector decode_vector(const Json& j, const std::string& where);
PolyMatrix decode_poly_matrix(const Json& j, const std::string& where);
RatMatrix decode_rat_matrix(const Json& j, const std::string& where);

}  // namespace affine_frames
