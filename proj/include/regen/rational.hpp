#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace regen {

using BigInt = boost::multiprecision::cpp_int;
/// Always normalized: gcd(num, den) = 1 and den > 0.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(const BigInt& n, const BigInt& d) { return Rational(n, d); }

inline BigInt floor_of(const Rational& r) {
  BigInt q = num(r) / den(r);  // truncates toward zero
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

inline BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  return den(r) == 1 ? num(r).str() : num(r).str() + "/" + den(r).str();
}

inline std::int64_t to_int64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

}  // namespace regen
