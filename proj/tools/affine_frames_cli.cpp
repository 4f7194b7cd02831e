// affine-frames command-line front end. Talks to the library only through
// the C interface.
#include "affine_frames/affine_frames.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitRejected = 2;

struct DocumentDeleter {
  void operator()(af_document* d) const { af_document_free(d); }
};
using Document = std::unique_ptr<af_document, DocumentDeleter>;

struct StringDeleter {
  void operator()(char* s) const { af_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_code(af_status status) { return status == AF_ERR_INTERNAL ? kExitInternal : kExitRejected; }

int report(af_status status, const std::string& context) {
  std::cerr << "affine-frames: " << context << ": " << af_last_error() << "\n";
  return exit_code(status);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_output(const std::string& path, const char* text) {
  if (path.empty()) {
    std::fputs(text, stdout);
    return std::fflush(stdout) == 0;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

bool parse_projection(const std::string& text, size_t& x, size_t& y) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const long lx = std::stol(a, &used);
    if (used != a.size()) return false;
    const long ly = std::stol(b, &used);
    if (used != b.size() || lx < 0 || ly < 0) return false;
    x = static_cast<size_t>(lx);
    y = static_cast<size_t>(ly);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equi-affine minimal-degree moving frames of polynomial curves, in exact arithmetic"};
  std::string command;
  std::string in_path;
  std::string out_path;
  std::string params;
  std::string projection = "0,1";
  bool dump_pivots = false;

  app.add_option("command", command, "Pipeline stage")
      ->required()
      ->check(CLI::IsMember(
          {"frame", "complete", "bezout", "mubasis", "section", "canonical", "sylvester", "verify", "plot"}));
  app.add_option("--in", in_path, "Input JSON document")->required();
  app.add_option("--out", out_path, "Output file (default: stdout)");
  app.add_option("--params", params, "plot: comma-separated parameter values, e.g. -1,0,1/2");
  app.add_option("--project", projection, "plot: projection axes I,J (0-based)");
  app.add_flag("--dump-pivots", dump_pivots, "sylvester: include pivots, non-pivots and the rref");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitRejected;
  }

  std::string text;
  if (!read_file(in_path, text)) {
    std::cerr << "affine-frames: cannot read " << in_path << "\n";
    return kExitRejected;
  }
  af_document* raw = nullptr;
  af_status status = af_document_parse(text.data(), text.size(), &raw);
  if (status != AF_OK) return report(status, in_path);
  Document input(raw);

  OwnedString output;
  int verdict = kExitOk;

  if (command == "plot") {
    size_t ax = 0, ay = 1;
    if (!parse_projection(projection, ax, ay)) {
      std::cerr << "affine-frames: --project expects I,J\n";
      return kExitRejected;
    }
    // Accepts either a frame result (its input is the curve) or a bare curve.
    Document curve;
    Document frame;
    if (af_document_is_result(input.get())) {
      if ((status = af_document_input(input.get(), &raw)) != AF_OK) return report(status, "plot");
      curve.reset(raw);
      frame = std::move(input);
    } else {
      if ((status = af_run(AF_CMD_FRAME, input.get(), nullptr, &raw)) != AF_OK) return report(status, "frame");
      frame.reset(raw);
      curve = std::move(input);
    }
    char* svg = nullptr;
    if ((status = af_plot_svg(curve.get(), frame.get(), params.c_str(), ax, ay, &svg)) != AF_OK) {
      return report(status, "plot");
    }
    output.reset(svg);
  } else {
    af_command cmd{};
    if ((status = af_command_from_name(command.c_str(), &cmd)) != AF_OK) return report(status, command);
    af_options options{dump_pivots ? 1 : 0};
    if ((status = af_run(cmd, input.get(), &options, &raw)) != AF_OK) return report(status, command);
    Document result(raw);
    if (cmd == AF_CMD_VERIFY) {
      int passed = 0;
      if ((status = af_document_passed(result.get(), &passed)) != AF_OK) return report(status, command);
      if (!passed) {
        std::cerr << "affine-frames: verify: one or more checks failed\n";
        verdict = kExitRejected;
      }
    }
    char* json = nullptr;
    if ((status = af_document_to_json(result.get(), &json)) != AF_OK) return report(status, command);
    output.reset(json);
  }

  if (!write_output(out_path, output.get())) {
    std::cerr << "affine-frames: cannot write " << (out_path.empty() ? "stdout" : out_path) << "\n";
    return kExitInternal;
  }
  return verdict;
}
