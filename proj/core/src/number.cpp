#include "staymap/number.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <limits>

namespace staymap {

namespace {

struct DecimalParts {
  bool negative = false;
  std::string digits;  // integer and fractional digits concatenated
  long long exponent = 0;  // value = digits * 10^exponent
};

std::optional<DecimalParts> split_decimal(std::string_view text) {
  DecimalParts out;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    out.negative = text[i] == '-';
    ++i;
  }
  bool any_digit = false;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    out.digits.push_back(text[i++]);
    any_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      out.digits.push_back(text[i++]);
      --out.exponent;
      any_digit = true;
    }
  }
  if (!any_digit) return std::nullopt;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    long long e = 0;
    bool exp_digit = false;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      e = e * 10 + (text[i++] - '0');
      if (e > 100000) return std::nullopt;
      exp_digit = true;
    }
    if (!exp_digit) return std::nullopt;
    out.exponent += exp_negative ? -e : e;
  }
  if (i != text.size()) return std::nullopt;
  // A leading zero would make GMP read the mantissa as octal.
  const auto first = out.digits.find_first_not_of('0');
  out.digits.erase(0, first == std::string::npos ? out.digits.size() - 1 : first);
  return out;
}

boost::multiprecision::mpz_int pow10(long long e) {
  boost::multiprecision::mpz_int r = 1;
  boost::multiprecision::mpz_int base = 10;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  auto parts = split_decimal(text);
  if (!parts) return std::nullopt;
  boost::multiprecision::mpz_int mantissa(parts->digits);
  Rational v;
  if (parts->exponent >= 0) {
    v = Rational(mantissa * pow10(parts->exponent));
  } else {
    v = Rational(mantissa, pow10(-parts->exponent));
  }
  return parts->negative ? Rational(-v) : v;
}

std::optional<double> parse_double(std::string_view text) {
  if (!split_decimal(text)) return std::nullopt;
  // from_chars rejects a leading '+'
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

Rational floor(const Rational& v) {
  using boost::multiprecision::mpz_int;
  mpz_int num = numerator(v);
  mpz_int den = denominator(v);
  mpz_int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return Rational(q);
}

std::string format_number(double v) {
  if (v == 0) return "0";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string format_number(const Rational& v) {
  using boost::multiprecision::mpz_int;
  mpz_int num = numerator(v);
  mpz_int den = denominator(v);
  // Terminating decimal iff den = 2^a 5^b.
  int twos = 0;
  int fives = 0;
  mpz_int d = den;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  const int places = std::max(twos, fives);
  if (d != 1 || places > 24) return format_number(to_double(v));

  const bool negative = num < 0;
  if (negative) num = -num;
  mpz_int scaled = num * pow10(places) / den;
  std::string digits = scaled.str();
  if (digits.size() > 30) return format_number(to_double(v));
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places) {
      digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  }
  return negative ? "-" + digits : digits;
}

}  // namespace staymap
