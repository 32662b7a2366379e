#include "cubal/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "cubal/errors.hpp"

namespace cubal {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw MalformedInput("not a rational literal: \"" + std::string(text) + "\"");
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw MalformedInput("zero denominator in \"" + std::string(text) + "\"");
  Scalar out(n, d);
  out.canonicalize();
  return out;
}

std::string format_scalar(const Scalar& x) { return x.get_str(10); }

}  // namespace cubal
