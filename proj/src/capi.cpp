#include "affine_frames/affine_frames.h"

#include "affine_frames/commands.hpp"
#include "affine_frames/errors.hpp"
#include "affine_frames/svg.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <variant>

struct af_document {
  std::variant<affine_frames::CurveDocument, affine_frames::ResultDocument> content;
};

namespace {

using namespace affine_frames;

thread_local std::string g_last_error;

af_status fail(af_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
af_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const Rejection& e) {
    return fail(AF_ERR_REJECTED, e.what());
  } catch (const ParseError& e) {
    return fail(AF_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(AF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(AF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(AF_ERR_INTERNAL, "unknown error");
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::vector<Rational> parse_params(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty parameter list");
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, comma - start);
    if (token.empty()) throw ParseError("params", "empty entry in parameter list");
    out.push_back(parse_rational(token));
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* af_version(void) { return "1.0.0"; }

const char* af_last_error(void) { return g_last_error.c_str(); }

af_status af_document_parse(const char* text, size_t length, af_document** out) {
  if (!text || !out) return fail(AF_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const std::string_view view(text, length);
    auto doc = std::make_unique<af_document>();
    if (looks_like_result(view)) {
      doc->content = parse_result(view);
    } else {
      doc->content = parse_curve(view);
    }
    *out = doc.release();
    return AF_OK;
  });
}

void af_document_free(af_document* doc) { delete doc; }

int af_document_is_result(const af_document* doc) {
  return doc && std::holds_alternative<ResultDocument>(doc->content) ? 1 : 0;
}

af_status af_document_passed(const af_document* doc, int* passed) {
  if (!doc || !passed) return fail(AF_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto* r = std::get_if<ResultDocument>(&doc->content);
    if (!r || r->kind != ResultKind::verify) return fail(AF_ERR_INVALID_ARGUMENT, "not a verify result");
    *passed = r->metadata.at("passed").get<bool>() ? 1 : 0;
    return AF_OK;
  });
}

af_status af_document_input(const af_document* result, af_document** out) {
  if (!result || !out) return fail(AF_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto* r = std::get_if<ResultDocument>(&result->content);
    if (!r) return fail(AF_ERR_INVALID_ARGUMENT, "not a result document");
    *out = new af_document{r->input};
    return AF_OK;
  });
}

af_status af_command_from_name(const char* name, af_command* out) {
  if (!name || !out) return fail(AF_ERR_INVALID_ARGUMENT, "null argument");
  const auto cmd = parse_command(name);
  if (!cmd || *cmd == Command::plot) return fail(AF_ERR_INVALID_ARGUMENT, std::string("unknown command ") + name);
  *out = static_cast<af_command>(static_cast<int>(*cmd));
  return AF_OK;
}

af_status af_run(af_command command, const af_document* input, const af_options* options, af_document** out) {
  if (!input || !out) return fail(AF_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (command < AF_CMD_FRAME || command > AF_CMD_VERIFY) return fail(AF_ERR_INVALID_ARGUMENT, "unknown command");
  return guarded([&] {
    auto result = std::make_unique<af_document>();
    if (command == AF_CMD_VERIFY) {
      const auto* stored = std::get_if<ResultDocument>(&input->content);
      if (!stored) return fail(AF_ERR_INVALID_ARGUMENT, "verify needs a result document");
      result->content = verify_document(*stored);
    } else {
      const auto* curve = std::get_if<CurveDocument>(&input->content);
      if (!curve) return fail(AF_ERR_INVALID_ARGUMENT, "command needs a curve document");
      CommandOptions opts;
      if (options) opts.dump_pivots = options->dump_pivots != 0;
      result->content = run_command(static_cast<Command>(static_cast<int>(command)), *curve, opts);
    }
    *out = result.release();
    return AF_OK;
  });
}

af_status af_document_to_json(const af_document* doc, char** out) {
  if (!doc || !out) return fail(AF_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    if (const auto* r = std::get_if<ResultDocument>(&doc->content)) {
      *out = copy_out(serialize_result(*r));
    } else {
      *out = copy_out(curve_to_json(std::get<CurveDocument>(doc->content)).dump(2) + "\n");
    }
    return AF_OK;
  });
}

af_status af_plot_svg(const af_document* curve, const af_document* frame, const char* params, size_t axis_x,
                      size_t axis_y, char** out) {
  if (!curve || !frame || !params || !out) return fail(AF_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto* c = std::get_if<CurveDocument>(&curve->content);
    const auto* f = std::get_if<ResultDocument>(&frame->content);
    if (!c || !f) return fail(AF_ERR_INVALID_ARGUMENT, "plot needs a curve document and a frame result");
    PlotOptions opts;
    opts.params = parse_params(params);
    opts.axis_x = axis_x;
    opts.axis_y = axis_y;
    *out = copy_out(plot_svg(*c, *f, opts));
    return AF_OK;
  });
}

void af_string_free(char* s) { std::free(s); }

}  // extern "C"
