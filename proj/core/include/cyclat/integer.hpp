#pragma once

// Exact scalar types shared by every module.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline int sign(const Int& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

// Floor of sqrt(n) for n >= 0.
Int isqrt(const Int& n);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

Int floor(const Rational& q);
Int ceil(const Rational& q);

Int pow(const Int& base, unsigned exp);

std::string to_string(const Int& x);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Fixed-point decimal rendering with `digits` fractional digits,
// rounded toward -inf (round_up = false) or +inf (round_up = true).
std::string to_fixed(const Rational& q, unsigned digits, bool round_up);

bool fits_int64(const Int& x);

}  // namespace cyclat
