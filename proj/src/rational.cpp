#include "ckrgap/rational.hpp"

#include <cctype>

namespace ckrgap {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) invalid_parameter("empty rational literal");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      invalid_parameter("malformed fraction '" + std::string(text) + "'");
    }
    mpz_class d{std::string(den), 10};
    if (d == 0) invalid_parameter("zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class{std::string(num), 10}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      invalid_parameter("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class digits{std::string(whole) + std::string(frac), 10};
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(digits, scale);
  } else {
    if (!all_digits(s)) invalid_parameter("malformed number '" + std::string(text) + "'");
    value = Rational(mpz_class{std::string(s), 10});
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string to_decimal_string(const Rational& value, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Rational scaled = abs(value) * scale;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num().get_mpz_t(),
              scaled.get_den().get_mpz_t());
  // half-even
  mpz_class twice = 2 * r;
  int cmp = mpz_cmp(twice.get_mpz_t(), scaled.get_den().get_mpz_t());
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string digits = q.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (value < 0 && q != 0) digits.insert(0, "-");
  return digits;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) invalid_parameter("zero denominator");
  Rational r{mpz_class{std::to_string(num), 10}, mpz_class{std::to_string(den), 10}};
  r.canonicalize();
  return r;
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational factorial(long n) {
  if (n < 0) invalid_parameter("negative factorial");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

}  // namespace ckrgap
