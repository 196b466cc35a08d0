#pragma once

// Scalar types used throughout the library.
//
// Every algorithm is written against a scalar parameter T and instantiated for
// two types: Rational (exact, GMP-backed) and double (fast path). Decimal input
// parses exactly into Rational, so all predicates on parsed data are exact.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace staymap {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses a decimal literal such as "-12.5", "3", "1e-3" or "2.5E+2" exactly.
/// Returns nullopt on anything else (including inf/nan and empty input).
std::optional<Rational> parse_rational(std::string_view text);

/// Same grammar as parse_rational, rounded to the nearest double.
std::optional<double> parse_double(std::string_view text);

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

/// Exact conversion; doubles are dyadic rationals.
inline Rational to_rational(double v) { return Rational(v); }
inline const Rational& to_rational(const Rational& v) { return v; }

/// Largest integer not exceeding v.
Rational floor(const Rational& v);

/// Shortest decimal text for v. Values with a terminating decimal expansion
/// of reasonable length are printed exactly; anything else goes through the
/// shortest round-tripping double representation.
std::string format_number(const Rational& v);
std::string format_number(double v);

template <class T>
T scalar_cast(const Rational& v);
template <>
inline Rational scalar_cast<Rational>(const Rational& v) { return v; }
template <>
inline double scalar_cast<double>(const Rational& v) { return to_double(v); }

/// Slack added to closed "duration <= bound" comparisons. Zero for exact
/// arithmetic; a few ulps of the time scale for doubles so that boundary
/// candidates computed with rounding are not rejected.
inline Rational comparison_slack(const Rational& /*scale*/) { return Rational(0); }
inline double comparison_slack(double scale) {
  return 1e-12 * std::max(1.0, std::abs(scale));
}

}  // namespace staymap
