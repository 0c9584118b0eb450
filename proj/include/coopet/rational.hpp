// Exact rational arithmetic: the number type every computation in this
// library runs on, plus string conversion helpers shared by the config
// parser and the report writer.
//
// Backed by boost::multiprecision::cpp_rational (arbitrary-precision,
// header-only). The backend keeps values canonical: lowest terms, positive
// denominator. Nothing in this library ever rounds.

#ifndef COOPET_RATIONAL_HPP
#define COOPET_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coopet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-4/9", "0.25" (and friends) into an exact rational.
/// Decimal input is exact: "0.1" becomes 1/10, not the nearest double.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("invalid rational: '" + std::string(text) + "'");
  };

  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }

  const auto read_digits = [&](std::string& out) {
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      out.push_back(text[pos]);
      ++pos;
    }
  };

  std::string int_digits;
  read_digits(int_digits);

  BigInt num;
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::string den_digits;
    read_digits(den_digits);
    if (int_digits.empty() || den_digits.empty() || pos != text.size()) return fail();
    num = BigInt(int_digits);
    den = BigInt(den_digits);
    if (den == 0) return fail();
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::string frac_digits;
    read_digits(frac_digits);
    if ((int_digits.empty() && frac_digits.empty()) || pos != text.size()) return fail();
    num = BigInt(int_digits.empty() ? "0" : int_digits);
    for (char c : frac_digits) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    if (int_digits.empty() || pos != text.size()) return fail();
    num = BigInt(int_digits);
  }

  Rational value = Rational(num) / Rational(den);
  return negative ? -value : value;
}

/// "p/q" in lowest terms; integers print without the "/1".
inline std::string fraction_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

/// Advisory decimal rendering, 12 significant digits.
inline std::string decimal_string(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", r.convert_to<double>());
  return buf;
}

}  // namespace coopet

#endif  // COOPET_RATIONAL_HPP
