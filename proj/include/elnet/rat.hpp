#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "elnet/errors.hpp"

namespace elnet {

// Exact rational scalar. cpp_rational keeps values canonical (lowest terms,
// positive denominator), so equality is plain value equality.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/" + denominator(r).str();
  }
  return s;
}

// Parses "p" or "p/q". Throws ParseError on malformed input or q == 0.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(s));
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw ParseError("bad rational literal \"" + s + "\": " + e.what());
  }
}

}  // namespace elnet
