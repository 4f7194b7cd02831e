#pragma once

#include "affine_frames/documents.hpp"

#include <optional>
#include <string_view>

namespace affine_frames {

enum class Command { frame, complete, bezout, mubasis, section, canonical, sylvester, verify, plot };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command cmd);

struct CommandOptions {
  /// sylvester: also emit pivots, non-pivots, basic non-pivots and the rref.
  bool dump_pivots = false;
};

/// Runs one pipeline stage on `input`. `frame` treats the input as a curve c
/// and works on c'; every other command treats it as the vector v itself.
/// `verify` and `plot` take other inputs and are rejected here.
/// Throws Rejection when the input is outside the stage's domain.
ResultDocument run_command(Command cmd, const CurveDocument& input, const CommandOptions& options = {});

/// Re-checks every invariant recorded in a stored result against its input.
/// The returned document has kind verify; metadata.passed is the overall verdict.
ResultDocument verify_document(const ResultDocument& stored);

}  // namespace affine_frames
