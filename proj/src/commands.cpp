#include "affine_frames/commands.hpp"

#include "affine_frames/bezout_mu.hpp"
#include "affine_frames/completion.hpp"
#include "affine_frames/equivariance.hpp"
#include "affine_frames/errors.hpp"
#include "affine_frames/frames.hpp"
#include "affine_frames/sylvester.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <utility>

namespace affine_frames {
namespace {

constexpr std::array<std::pair<Command, std::string_view>, 9> kCommandNames{{
    {Command::frame, "frame"},
    {Command::complete, "complete"},
    {Command::bezout, "bezout"},
    {Command::mubasis, "mubasis"},
    {Command::section, "section"},
    {Command::canonical, "canonical"},
    {Command::sylvester, "sylvester"},
    {Command::verify, "verify"},
    {Command::plot, "plot"},
}};

Json encode_section(const GroupElement& g) { return Json{{"L", encode(g.L())}, {"s", encode(g.s())}}; }

GroupElement decode_section(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("L") || !j.contains("s")) throw ParseError(where, "section needs L and s");
  return GroupElement(decode_rat_matrix(j["L"], where + ".L"), decode_rational(j["s"], where + ".s"));
}

Json encode_indices(const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(x);
  return out;
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "." + key, "missing field");
  return *it;
}

ResultDocument make_result(ResultKind kind, const CurveDocument& input) {
  ResultDocument doc;
  doc.kind = kind;
  doc.input = input;
  return doc;
}

ResultDocument run_frame(const CurveDocument& input) {
  const GenericCurve curve(input.to_vector());
  const FrameResult r = eamfm(curve);
  ResultDocument doc = make_result(ResultKind::frame, input);
  doc.payload = Json{{"F", encode(r.F)},
                     {"tangent", encode(derivative(curve))},
                     {"canonical_tangent", encode(r.canonical_tangent)},
                     {"section", encode_section(r.section)}};
  doc.metadata = Json{{"degree", encode(degree_matrix(r.F))},
                      {"curve_degree", encode(degree_vector(curve.curve()))},
                      {"bezout_degree", r.bezout_degree},
                      {"determinant", encode(determinant(r.F))}};
  return doc;
}

ResultDocument run_complete(const CurveDocument& input) {
  const PolyVector v = input.to_vector();
  require_regular(v);
  const Completion c = minimal_matrix_completion(v);
  ResultDocument doc = make_result(ResultKind::completion, input);
  doc.payload = Json{{"M", encode(c.M)}};
  doc.metadata = Json{{"degree", encode(degree_matrix(c.M))},
                      {"vector_degree", encode(degree_vector(v))},
                      {"bezout_degree", c.bezout_degree},
                      {"determinant", encode(determinant(c.M))}};
  return doc;
}

ResultDocument run_bezout(const CurveDocument& input) {
  const PolyVector v = input.to_vector();
  require_regular(v);
  const BezoutVector b = minimal_bezout(v);
  ResultDocument doc = make_result(ResultKind::bezout, input);
  doc.payload = Json{{"b", encode(b.b)}};
  doc.metadata = Json{{"degree", b.degree},
                      {"vector_degree", encode(degree_vector(v))},
                      {"scalar_product", encode(scalar_product(v, b.b))}};
  return doc;
}

ResultDocument run_mubasis(const CurveDocument& input) {
  const PolyVector v = input.to_vector();
  require_regular(v);
  const MuBasis mu = mu_basis(v);
  ResultDocument doc = make_result(ResultKind::mubasis, input);
  Json elements = Json::array();
  for (const auto& u : mu.elements) elements.push_back(encode(u));
  doc.payload = Json{{"elements", std::move(elements)}, {"lambda", encode(mu.lambda)}};
  const auto degs = mu.degrees();
  Json degrees = Json::array();
  for (int d : degs) degrees.push_back(d);
  doc.metadata = Json{{"degrees", std::move(degrees)},
                      {"degree_sum", std::accumulate(degs.begin(), degs.end(), 0)},
                      {"vector_degree", encode(degree_vector(v))}};
  return doc;
}

ResultDocument run_section(const CurveDocument& input) {
  const PolyVector v = input.to_vector();
  require_regular(v);
  const GroupElement rho = es(v);
  const PivotProfile profile = pivot_profile(v);
  ResultDocument doc = make_result(ResultKind::section, input);
  doc.payload = encode_section(rho);
  doc.payload["profile"] = Json{{"indices", encode_indices(profile.indices)},
                                {"k", profile.k},
                                {"det_vbar", encode(profile.det_vbar)}};
  doc.metadata = Json{{"vector_degree", encode(degree_vector(v))}, {"determinant", encode(rho.L().determinant())}};
  return doc;
}

ResultDocument run_canonical(const CurveDocument& input) {
  const PolyVector v = input.to_vector();
  require_regular(v);
  const GroupElement rho = es(v);
  ResultDocument doc = make_result(ResultKind::canonical, input);
  doc.payload = Json{{"canonical", encode(apply_group(rho.inverse(), v))}, {"section", encode_section(rho)}};
  doc.metadata = Json{{"vector_degree", encode(degree_vector(v))}};
  return doc;
}

ResultDocument run_sylvester(const CurveDocument& input, const CommandOptions& options) {
  const PolyVector v = input.to_vector();
  const SylvesterSystem sys(v);
  ResultDocument doc = make_result(ResultKind::sylvester, input);
  doc.payload = Json{{"n", sys.n()}, {"d", sys.d()}, {"A", encode(sys.A())}, {"rank", sys.rank()}};
  if (options.dump_pivots) {
    doc.payload["pivots"] = encode_indices(sys.pivots());
    doc.payload["nonpivots"] = encode_indices(sys.nonpivots());
    doc.payload["basic_nonpivots"] = encode_indices(sys.basic_nonpivots());
    doc.payload["rref"] = encode(sys.rref());
  }
  doc.metadata = Json{{"rows", sys.A().rows()}, {"cols", sys.A().cols()}, {"full_rank", sys.rank() == 2 * sys.d() + 1}};
  return doc;
}

// Each check runs in isolation; an exception while checking counts as a failure.
class Checks {
 public:
  void add(const char* name, const std::function<bool()>& predicate) {
    bool ok = false;
    try {
      ok = predicate();
    } catch (const std::exception&) {
      ok = false;
    }
    results_[name] = ok;
  }
  const Json& results() const { return results_; }

 private:
  Json results_ = Json::object();
};

Json verify_frame(const ResultDocument& doc) {
  const PolyVector c = doc.input.to_vector();
  const PolyMatrix F = decode_poly_matrix(field(doc.payload, "F", "payload"), "payload.F");
  const PolyVector reduced = decode_vector(field(doc.payload, "canonical_tangent", "payload"), "payload.canonical_tangent");
  const Json& section_json = field(doc.payload, "section", "payload");
  const PolyVector tangent = derivative(c);
  Checks checks;
  checks.add("input_generic", [&] { return check_generic(c).generic(); });
  checks.add("tangent_replay", [&] {
    return decode_vector(field(doc.payload, "tangent", "payload"), "payload.tangent") == tangent;
  });
  const CompletionReport report = verify_completion(F, tangent);
  checks.add("first_column_is_tangent", [&] { return report.shape_ok && report.first_column_ok; });
  checks.add("unit_determinant", [&] { return report.unit_determinant; });
  checks.add("minimal_degree", [&] { return report.minimal; });
  checks.add("section_replay", [&] { return decode_section(section_json, "payload.section") == es(tangent); });
  checks.add("canonical_tangent_replay", [&] {
    return apply_group(decode_section(section_json, "payload.section").inverse(), tangent) == reduced;
  });
  checks.add("canonical_shape", [&] { return has_canonical_shape(reduced); });
  checks.add("frame_replay", [&] {
    const GroupElement rho = decode_section(section_json, "payload.section");
    return apply_group(rho, minimal_matrix_completion(reduced).M) == F;
  });
  checks.add("metadata_consistent", [&] {
    return doc.metadata.at("degree") == encode(degree_matrix(F)) &&
           doc.metadata.at("determinant") == encode(determinant(F)) &&
           doc.metadata.at("bezout_degree") == bezout_degree_oracle(tangent);
  });
  return checks.results();
}

Json verify_completion_doc(const ResultDocument& doc) {
  const PolyVector v = doc.input.to_vector();
  const PolyMatrix M = decode_poly_matrix(field(doc.payload, "M", "payload"), "payload.M");
  const CompletionReport report = verify_completion(M, v);
  Checks checks;
  checks.add("input_regular", [&] { return check_regular(v).regular(); });
  checks.add("first_column_is_input", [&] { return report.shape_ok && report.first_column_ok; });
  checks.add("unit_determinant", [&] { return report.unit_determinant; });
  checks.add("minimal_degree", [&] { return report.minimal; });
  checks.add("metadata_consistent", [&] {
    return doc.metadata.at("degree") == encode(degree_matrix(M)) &&
           doc.metadata.at("determinant") == encode(determinant(M)) &&
           doc.metadata.at("bezout_degree") == bezout_degree_oracle(v);
  });
  return checks.results();
}

Json verify_bezout_doc(const ResultDocument& doc) {
  const PolyVector v = doc.input.to_vector();
  const PolyVector b = decode_vector(field(doc.payload, "b", "payload"), "payload.b");
  Checks checks;
  checks.add("input_regular", [&] { return check_regular(v).regular(); });
  checks.add("scalar_product_is_one", [&] { return b.size() == v.size() && scalar_product(v, b) == Polynomial(1); });
  checks.add("minimal_degree", [&] { return degree_vector(b) == Degree(bezout_degree_oracle(v)); });
  checks.add("replay", [&] { return minimal_bezout(v).b == b; });
  checks.add("metadata_consistent", [&] { return doc.metadata.at("degree") == encode(degree_vector(b)); });
  return checks.results();
}

Json verify_mubasis_doc(const ResultDocument& doc) {
  const PolyVector v = doc.input.to_vector();
  const Json& elements_json = field(doc.payload, "elements", "payload");
  if (!elements_json.is_array()) throw ParseError("payload.elements", "expected an array");
  std::vector<PolyVector> elements;
  for (std::size_t i = 0; i < elements_json.size(); ++i) {
    elements.push_back(decode_vector(elements_json[i], "payload.elements[" + std::to_string(i) + "]"));
  }
  const Rational lambda = decode_rational(field(doc.payload, "lambda", "payload"), "payload.lambda");
  Checks checks;
  checks.add("input_regular", [&] { return check_regular(v).regular(); });
  checks.add("count_is_n_minus_one", [&] { return elements.size() + 1 == v.size(); });
  checks.add("syzygies", [&] {
    for (const auto& u : elements) {
      if (u.size() != v.size() || !scalar_product(v, u).is_zero()) return false;
    }
    return true;
  });
  checks.add("degree_sum", [&] {
    Degree sum = 0;
    for (const auto& u : elements) sum = sum + degree_vector(u);
    return sum == degree_vector(v);
  });
  checks.add("degree_ordered", [&] {
    for (std::size_t i = 1; i < elements.size(); ++i) {
      if (degree_vector(elements[i - 1]) > degree_vector(elements[i])) return false;
    }
    return true;
  });
  checks.add("outer_product_proportional", [&] { return lambda != 0 && outer_product(elements) == lambda * v; });
  checks.add("replay", [&] {
    const MuBasis mu = mu_basis(v);
    return mu.elements == elements && mu.lambda == lambda;
  });
  return checks.results();
}

Json verify_section_doc(const ResultDocument& doc) {
  const PolyVector v = doc.input.to_vector();
  Checks checks;
  checks.add("input_regular", [&] { return check_regular(v).regular(); });
  checks.add("unit_determinant", [&] {
    return decode_rat_matrix(field(doc.payload, "L", "payload"), "payload.L").determinant() == 1;
  });
  checks.add("replay", [&] { return decode_section(doc.payload, "payload") == es(v); });
  checks.add("canonical_shape", [&] {
    return has_canonical_shape(apply_group(decode_section(doc.payload, "payload").inverse(), v));
  });
  checks.add("profile_replay", [&] {
    const PivotProfile p = pivot_profile(v);
    const Json& stored = field(doc.payload, "profile", "payload");
    return stored.at("indices") == encode_indices(p.indices) && stored.at("k") == p.k &&
           stored.at("det_vbar") == encode(p.det_vbar);
  });
  return checks.results();
}

Json verify_canonical_doc(const ResultDocument& doc) {
  const PolyVector v = doc.input.to_vector();
  const PolyVector w = decode_vector(field(doc.payload, "canonical", "payload"), "payload.canonical");
  const Json& section_json = field(doc.payload, "section", "payload");
  Checks checks;
  checks.add("input_regular", [&] { return check_regular(v).regular(); });
  checks.add("same_orbit", [&] { return apply_group(decode_section(section_json, "payload.section"), w) == v; });
  checks.add("canonical_shape", [&] { return has_canonical_shape(w); });
  checks.add("section_of_canonical_is_identity", [&] { return es(w) == GroupElement::identity(v.size()); });
  checks.add("replay", [&] { return canonical(v) == w; });
  return checks.results();
}

Json verify_sylvester_doc(const ResultDocument& doc) {
  const PolyVector v = doc.input.to_vector();
  const SylvesterSystem sys(v);
  const Json& p = doc.payload;
  Checks checks;
  checks.add("matrix_replay", [&] { return decode_rat_matrix(field(p, "A", "payload"), "payload.A") == sys.A(); });
  checks.add("rank_replay", [&] { return field(p, "rank", "payload") == sys.rank(); });
  checks.add("commutation", [&] {
    // flat(A h#) = <v, h> on a fixed dense h.
    std::vector<Rational> h(sys.A().cols());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = static_cast<long>(i + 1);
    const auto lhs = sys.apply(h);
    const Polynomial rhs = scalar_product(v, flat(h, sys.n(), sys.d()));
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (lhs[i] != rhs.coeff(static_cast<int>(i))) return false;
    }
    return true;
  });
  if (p.contains("pivots")) {
    checks.add("pivots_replay", [&] {
      return p.at("pivots") == encode_indices(sys.pivots()) && p.at("nonpivots") == encode_indices(sys.nonpivots()) &&
             p.at("basic_nonpivots") == encode_indices(sys.basic_nonpivots());
    });
    checks.add("rref_replay", [&] { return decode_rat_matrix(p.at("rref"), "payload.rref") == sys.rref(); });
    checks.add("pivot_periodicity", [&] {
      const auto& q = sys.nonpivots();
      const std::size_t cols = sys.A().cols();
      for (auto x : q) {
        if (x + sys.n() <= cols && std::find(q.begin(), q.end(), x + sys.n()) == q.end()) return false;
      }
      return true;
    });
    if (sys.rank() == 2 * sys.d() + 1) {
      checks.add("basic_count_is_n_minus_one", [&] { return sys.basic_nonpivots().size() + 1 == sys.n(); });
    }
  }
  return checks.results();
}

Json verify_any(const ResultDocument& doc);

Json verify_verify_doc(const ResultDocument& doc) {
  const Json& target = field(doc.payload, "target", "payload");
  ResultDocument inner;
  const auto kind = parse_result_kind(target.at("kind").get<std::string>());
  if (!kind || *kind == ResultKind::verify) throw ParseError("payload.target.kind", "not a verifiable kind");
  inner.kind = *kind;
  inner.input = doc.input;
  inner.payload = target.at("payload");
  inner.metadata = target.at("metadata");
  Checks checks;
  checks.add("checks_replay", [&] { return verify_any(inner) == field(doc.payload, "checks", "payload"); });
  return checks.results();
}

Json verify_any(const ResultDocument& doc) {
  switch (doc.kind) {
    case ResultKind::frame: return verify_frame(doc);
    case ResultKind::completion: return verify_completion_doc(doc);
    case ResultKind::bezout: return verify_bezout_doc(doc);
    case ResultKind::mubasis: return verify_mubasis_doc(doc);
    case ResultKind::section: return verify_section_doc(doc);
    case ResultKind::canonical: return verify_canonical_doc(doc);
    case ResultKind::sylvester: return verify_sylvester_doc(doc);
    case ResultKind::verify: return verify_verify_doc(doc);
  }
  throw std::logic_error("unhandled result kind");
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [cmd, s] : kCommandNames) {
    if (s == name) return cmd;
  }
  return std::nullopt;
}

std::string_view to_string(Command cmd) {
  for (const auto& [c, s] : kCommandNames) {
    if (c == cmd) return s;
  }
  return "unknown";
}

ResultDocument run_command(Command cmd, const CurveDocument& input, const CommandOptions& options) {
  if (input.n < 2 || input.coeffs.size() != input.n) throw Rejection("input must have n >= 2 rows");
  switch (cmd) {
    case Command::frame: return run_frame(input);
    case Command::complete: return run_complete(input);
    case Command::bezout: return run_bezout(input);
    case Command::mubasis: return run_mubasis(input);
    case Command::section: return run_section(input);
    case Command::canonical: return run_canonical(input);
    case Command::sylvester: return run_sylvester(input, options);
    case Command::verify:
    case Command::plot: break;
  }
  throw std::invalid_argument(std::string(to_string(cmd)) + " does not take a curve document");
}

ResultDocument verify_document(const ResultDocument& stored) {
  const Json checks = verify_any(stored);
  bool passed = !checks.empty();
  for (const auto& [name, ok] : checks.items()) passed = passed && ok.get<bool>();
  ResultDocument doc = make_result(ResultKind::verify, stored.input);
  doc.payload = Json{{"checks", checks},
                     {"target", Json{{"kind", std::string(to_string(stored.kind))},
                                     {"payload", stored.payload},
                                     {"metadata", stored.metadata}}}};
  doc.metadata = Json{{"target_kind", std::string(to_string(stored.kind))}, {"passed", passed}};
  return doc;
}

}  // namespace affine_frames
