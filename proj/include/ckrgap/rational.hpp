#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ckrgap {

/// Exact rational number. All weights, costs and bound values are carried in
/// this type; doubles only appear in search heuristics and rendered output.
using Rational = mpq_class;

/// Library error. `code()` is a stable machine-readable tag
/// ("invalid-parameter", "budget-exhausted", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void invalid_parameter(const std::string& message) {
  throw Error("invalid-parameter", message);
}

/// Parses "p/q", an integer, or a decimal literal ("0.751652", "-1.5e-3" is
/// rejected). Decimals become exact decimal fractions.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form (q > 0, gcd 1). Integers are still written "p/1"
/// so that serialized weights are uniform.
std::string to_fraction_string(const Rational& value);

/// Decimal rendering with round-half-even at `places` digits.
std::string to_decimal_string(const Rational& value, int places = 6);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// num/den in canonical form. Prefer this to the two-argument mpq_class
/// constructor, which does not reduce.
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Binomial coefficient as an exact integer-valued rational; zero when
/// k < 0 or k > n.
Rational binomial(long n, long k);

Rational factorial(long n);

}  // namespace ckrgap
