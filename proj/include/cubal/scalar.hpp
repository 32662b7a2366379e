#pragma once

// Scalar fields. The algebra is built over exact rationals; PrimeField<P>
// provides the small finite fields used for exhaustive cross-checks.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cubal {

/// Exact rational, always kept in lowest terms with a positive denominator.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q". Throws MalformedInput on anything else or q == 0.
Scalar parse_scalar(std::string_view text);

/// Reduced-fraction string: "3", "-1/2".
std::string format_scalar(const Scalar& x);

/// Integers modulo a prime P.
template <std::uint32_t P>
class PrimeField {
  static_assert(P >= 2);

public:
  constexpr PrimeField() = default;
  constexpr explicit PrimeField(std::int64_t v)
      : value_(static_cast<std::uint32_t>(((v % static_cast<std::int64_t>(P)) + P) % P)) {}

  static constexpr std::uint32_t order() { return P; }
  constexpr std::uint32_t value() const { return value_; }

  friend constexpr PrimeField operator+(PrimeField a, PrimeField b) {
    return PrimeField(static_cast<std::int64_t>(a.value_) + b.value_);
  }
  friend constexpr PrimeField operator-(PrimeField a, PrimeField b) {
    return PrimeField(static_cast<std::int64_t>(a.value_) - b.value_);
  }
  friend constexpr PrimeField operator*(PrimeField a, PrimeField b) {
    return PrimeField(static_cast<std::int64_t>(a.value_) * b.value_);
  }
  friend constexpr bool operator==(PrimeField, PrimeField) = default;

  friend std::ostream& operator<<(std::ostream& os, PrimeField x) { return os << x.value_; }

private:
  std::uint32_t value_ = 0;
};

}  // namespace cubal
