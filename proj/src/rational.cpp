#include "affine_frames/rational.hpp"

#include "affine_frames/errors.hpp"

#include <cctype>

namespace affine_frames {
namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class to_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto numerator = text.substr(0, slash);
  const auto denominator =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_token(numerator) || !is_integer_token(denominator) ||
      denominator[0] == '-' || denominator[0] == '+') {
    throw ParseError("", "rationals must be p/q or integer, got \"" + std::string(text) + "\"");
  }
  mpz_class den = to_integer(denominator);
  if (den == 0) throw ParseError("", "zero denominator in \"" + std::string(text) + "\"");
  Rational r(to_integer(numerator), den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_canonical(const Rational& r) {
  if (r.get_den() <= 0) return false;
  if (r.get_num() == 0) return r.get_den() == 1;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return g == 1;
}

}  // namespace affine_frames

namespace affine_frames {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace affine_frames
