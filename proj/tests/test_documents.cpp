#include "affine_frames/commands.hpp"
#include "affine_frames/documents.hpp"
#include "affine_frames/errors.hpp"
#include "affine_frames/svg.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <regex>

using namespace affine_frames;
using namespace af_test;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

CurveDocument doc_of(const PolyVector& v) { return CurveDocument::from_vector(v); }

}  // namespace

TEST_SUITE("curve documents") {
  TEST_CASE("direct encoding") {
    const CurveDocument d = parse_curve(R"({"n":3,"coeffs":[["0","1"],["0","0","1"],["1","0","0","0","1"]]})");
    CHECK(d.n == 3);
    CHECK(d.to_vector() == PolyVector{T, tp(2), tp(4) + 1});
    CHECK_FALSE(d.label.has_value());
    CHECK(parse_curve(R"({"n":2,"coeffs":[["1/3"],["2/6","1"]],"label":"x"})").to_vector() ==
          PolyVector{q(1, 3), T + q(1, 3)});
  }

  TEST_CASE("diagnostics") {
    CHECK_THROWS_WITH_AS(parse_curve(R"({"n":2,"coeffs":[["1.5"],["1"]]})"),
                         doctest::Contains("rationals must be p/q or integer"), ParseError);
    try {
      parse_curve(R"({"n":2,"coeffs":[["1"],["0","x"]]})");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.where() == "coeffs[1][1]");
    }
    CHECK_THROWS_WITH_AS(parse_curve(R"({"n":1,"coeffs":[["1"]]})"), doctest::Contains("at least 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_curve("{\"n\":2,\n\"coeffs\": [[\"1\"],]}"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_curve(R"({"n":3,"coeffs":[["1"],["1"]]})"), doctest::Contains("expected 3 rows"),
                         ParseError);
    CHECK_THROWS_AS(parse_curve(R"({"coeffs":[]})"), ParseError);
    CHECK_THROWS_AS(parse_curve(R"({"n":2,"coeffs":[[1],["1"]]})"), ParseError);
    CHECK_THROWS_AS(parse_curve(R"([1,2])"), ParseError);
  }
}

TEST_SUITE("result documents") {
  TEST_CASE("every kind round-trips and serializes deterministically") {
    const CurveDocument curve = doc_of(eamfm_curve());
    const CurveDocument vec = doc_of(es2_vector());
    std::vector<ResultDocument> docs{run_command(Command::frame, curve)};
    for (Command c : {Command::complete, Command::bezout, Command::mubasis, Command::section, Command::canonical}) {
      docs.push_back(run_command(c, vec));
    }
    docs.push_back(run_command(Command::sylvester, doc_of(sylvester_vector()), {.dump_pivots = true}));
    docs.push_back(verify_document(docs.front()));
    for (const auto& d : docs) {
      CAPTURE(to_string(d.kind));
      const std::string text = serialize_result(d);
      CHECK(parse_result(text) == d);
      CHECK(serialize_result(parse_result(text)) == text);
    }
    CHECK(serialize_result(run_command(Command::frame, curve)) == serialize_result(docs.front()));
  }

  TEST_CASE("bad result documents") {
    CHECK_THROWS_WITH_AS(parse_result(R"({"kind":"nope","input":{},"payload":{},"metadata":{}})"),
                         doctest::Contains("unknown result kind"), ParseError);
    CHECK_THROWS_AS(parse_result(R"({"kind":"frame","payload":{},"metadata":{}})"), ParseError);
    CHECK(looks_like_result(R"({"kind":"frame"})"));
    CHECK_FALSE(looks_like_result(R"({"n":2})"));
  }
}

TEST_SUITE("commands") {
  TEST_CASE("frame reproduces the golden matrix") {
    const ResultDocument d = run_command(Command::frame, doc_of(eamfm_curve()));
    CHECK(d.kind == ResultKind::frame);
    CHECK(decode_poly_matrix(d.payload["F"], "F") == eamfm_golden_F());
    CHECK(d.metadata["degree"] == 5);
    CHECK(d.metadata["determinant"] == Json::array({"1"}));
  }

  TEST_CASE("section gives (L, 1/3)") {
    const ResultDocument d = run_command(Command::section, doc_of(es2_vector()));
    CHECK(decode_rat_matrix(d.payload["L"], "L") == es_golden_L());
    CHECK(d.payload["s"] == "1/3");
    CHECK(d.payload["profile"]["k"] == 2);
  }

  TEST_CASE("sylvester --dump-pivots") {
    const ResultDocument d = run_command(Command::sylvester, doc_of(sylvester_vector()), {.dump_pivots = true});
    CHECK(d.payload["basic_nonpivots"] == Json::array({8, 9}));
    CHECK(d.payload["nonpivots"] == Json::array({8, 9, 11, 12, 14, 15}));
    CHECK_FALSE(run_command(Command::sylvester, doc_of(sylvester_vector())).payload.contains("pivots"));
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(run_command(Command::frame, doc_of({T, tp(2), tp(3)})), Rejection);
    CHECK_THROWS_AS(run_command(Command::bezout, doc_of({T, tp(2)})), Rejection);
    CHECK_THROWS_AS(run_command(Command::section, doc_of({T, 1})), Rejection);
    CHECK_THROWS_AS(run_command(Command::sylvester, doc_of(PolyVector(2))), Rejection);
    CHECK_THROWS_AS(run_command(Command::verify, doc_of(es2_vector())), std::invalid_argument);
    CHECK(parse_command("complete") == Command::complete);
    CHECK_FALSE(parse_command("frames").has_value());
  }

  TEST_CASE("verify passes on fresh results and catches tampering") {
    const CurveDocument vec = doc_of(es2_vector());
    for (Command c : {Command::complete, Command::bezout, Command::mubasis, Command::section, Command::canonical,
                      Command::sylvester}) {
      const ResultDocument d = run_command(c, vec, {.dump_pivots = true});
      const ResultDocument v = verify_document(d);
      CAPTURE(to_string(c));
      CHECK(v.metadata["passed"] == true);
      CHECK(verify_document(v).metadata["passed"] == true);
    }
    ResultDocument frame = run_command(Command::frame, doc_of(eamfm_curve()));
    CHECK(verify_document(frame).metadata["passed"] == true);

    frame.payload["F"][0][1] = Json::array({"1"});
    const ResultDocument bad = verify_document(frame);
    CHECK(bad.metadata["passed"] == false);
    CHECK(bad.payload["checks"]["unit_determinant"] == false);
    CHECK(bad.payload["checks"]["frame_replay"] == false);

    ResultDocument section = run_command(Command::section, vec);
    section.payload["s"] = "1/4";
    CHECK(verify_document(section).payload["checks"]["replay"] == false);

    ResultDocument bezout = run_command(Command::bezout, vec);
    bezout.payload["b"][0] = Json::array({"7"});
    CHECK(verify_document(bezout).payload["checks"]["scalar_product_is_one"] == false);

    ResultDocument broken = run_command(Command::bezout, vec);
    broken.payload.erase("b");
    CHECK_THROWS_AS(verify_document(broken), ParseError);
  }
}

TEST_SUITE("svg") {
  const CurveDocument cubic = doc_of({T, tp(3) + tp(2) + 1});

  TEST_CASE("planar cubic with three frames") {
    const ResultDocument frame = run_command(Command::frame, cubic);
    const std::string svg = plot_svg(cubic, frame, {.params = {-1, 0, 1}});
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count(svg, "<polyline") == 1);
    CHECK(count(svg, "<g class=\"frame\"") == 3);
    CHECK(count(svg, "class=\"frame-arrow\"") == 6);
    CHECK(count(svg, "data-column=\"1\"") == 3);
    CHECK(count(svg, "data-column=\"2\"") == 3);
    CHECK(svg == plot_svg(cubic, frame, {.params = {-1, 0, 1}}));
    // Only attribute coordinates are fractional decimals.
    CHECK(std::regex_search(svg, std::regex("x1=\"-?[0-9]+\\.[0-9]{3}\"")));
  }

  TEST_CASE("projection of a space curve") {
    const CurveDocument curve = doc_of(eamfm_curve());
    const ResultDocument frame = run_command(Command::frame, curve);
    const std::string xy = plot_svg(curve, frame, {.params = {0, q(1, 2)}, .axis_x = 0, .axis_y = 1});
    const std::string xz = plot_svg(curve, frame, {.params = {0, q(1, 2)}, .axis_x = 0, .axis_y = 2});
    CHECK(count(xy, "class=\"frame-arrow\"") == 6);
    CHECK(xy.find("projection axes 0,1") != std::string::npos);
    CHECK(xy != xz);
    CHECK(xy.find("data-t=\"1/2\"") != std::string::npos);
  }

  TEST_CASE("errors") {
    const ResultDocument frame = run_command(Command::frame, cubic);
    CHECK_THROWS_WITH_AS(plot_svg(cubic, frame, {}), doctest::Contains("empty parameter list"), std::invalid_argument);
    CHECK_THROWS_AS(plot_svg(doc_of({T, tp(3)}), frame, {.params = {0}}), DimensionMismatch);
    CHECK_THROWS_AS(plot_svg(cubic, run_command(Command::sylvester, cubic), {.params = {0}}), DimensionMismatch);
    CHECK_THROWS_AS(plot_svg(cubic, frame, {.params = {0}, .axis_x = 1, .axis_y = 1}), std::invalid_argument);
    CHECK_THROWS_AS(plot_svg(cubic, frame, {.params = {0}, .axis_x = 0, .axis_y = 2}), std::invalid_argument);
  }
}
