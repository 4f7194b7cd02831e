#pragma once

#include <stdexcept>
#include <string>

namespace affine_frames {

/// Input lies outside the domain of an operation (gcd != 1, rank deficient,
/// non-generic curve, ...). Surfaced by the CLI as exit code 2.
class Rejection : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Shapes of operands do not agree.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed document or token. `where` names the offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what),
        where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace affine_frames
