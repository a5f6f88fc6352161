#include "toric/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "toric/error.hpp"

namespace toric {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) {
    throw InvalidArgument("cannot convert non-finite value to a rational");
  }
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  }
  BigInt z(std::string(s), 10);
  return negative ? BigInt(-z) : z;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_integer(s.substr(e + 1), text).get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) --exponent;
    } else {
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  Rational q(BigInt(digits, 10));
  if (exponent > 0) {
    q *= pow10(static_cast<unsigned long>(exponent));
  } else if (exponent < 0) {
    q /= pow10(static_cast<unsigned long>(-exponent));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

double to_double(const Rational& q) {
  double d = q.get_d();
  if (!std::isfinite(d)) return d;
  // get_d truncates toward zero; step once away from zero if that is closer.
  double away = std::nextafter(d, sgn(q) >= 0 ? std::numeric_limits<double>::infinity()
                                              : -std::numeric_limits<double>::infinity());
  if (!std::isfinite(away)) return d;
  Rational err_d = abs(q - rational_from_double(d));
  Rational err_away = abs(q - rational_from_double(away));
  return err_away < err_d ? away : d;
}

int sign(const Rational& q) { return sgn(q); }
int sign(const BigInt& z) { return sgn(z); }

}  // namespace toric
