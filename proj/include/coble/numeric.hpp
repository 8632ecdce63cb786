#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace coble {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer and Rat an arbitrary-precision rational kept in lowest terms.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool isInteger(const Rat& q) { return denominator(q) == 1; }

inline bool isEvenInteger(const Rat& q) {
  return isInteger(q) && numerator(q) % 2 == 0;
}

/// Renders a rational as "p" or "p/q"; never approximates.
inline std::string ratStr(const Rat& q) {
  if (isInteger(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string intStr(const Int& n) { return n.str(); }

/// Parses a (possibly signed) decimal integer; rejects anything else.
inline Int parseInt(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("bad integer literal '" + text + "'");
  }
  return Int(text);
}

}  // namespace coble
