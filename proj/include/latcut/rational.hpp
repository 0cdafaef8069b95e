#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>

#include "latcut/error.hpp"

namespace latcut {

// All geometry and LP arithmetic runs on exact rationals. The boost backend
// keeps values canonical: denominator > 0, gcd(|num|, den) = 1. Expression
// templates are disabled so arithmetic results behave as plain values.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline BigInt num(const Rational& r) { return numerator(r); }
inline BigInt den(const Rational& r) { return denominator(r); }

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

/// Largest integer <= r.
inline BigInt floor_int(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

/// Smallest integer >= r.
inline BigInt ceil_int(const Rational& r) { return -floor_int(-r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Canonical "p/q" form, denominator always present ("3/1", "-2/5").
inline std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << '/' << denominator(r);
  return os.str();
}

/// Decimal rendering for CSV reports (irrational closed forms live elsewhere;
/// this is only used where the interface asks for decimal output).
inline std::string format_decimal(const Rational& r, int significant = 12) {
  std::ostringstream os;
  os << std::setprecision(significant) << to_double(r);
  return os.str();
}

/// Parses "p/q" or a bare integer "p". Decimal floats are rejected.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] { throw ParseError("invalid rational '" + std::string(text) + "' (expected p/q)"); };
  if (text.empty()) bad();
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (text.find('.') != std::string_view::npos) bad();
      return Rational(BigInt(std::string(text)));
    }
    std::string p(text.substr(0, slash));
    std::string q(text.substr(slash + 1));
    if (p.empty() || q.empty() || q.find('-') != std::string::npos ||
        p.find('.') != std::string::npos || q.find('.') != std::string::npos)
      bad();
    BigInt pq(q);
    if (pq == 0) bad();
    return Rational(BigInt(p), pq);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational();  // unreachable
}

}  // namespace latcut
