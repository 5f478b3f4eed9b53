#include "cyclat/integer.hpp"

#include <limits>
#include <stdexcept>

namespace cyclat {

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  if (n < 2) return n;
  Int x = boost::multiprecision::sqrt(n);
  // cpp_int sqrt is exact floor, but keep the postcondition checked.
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("division by zero");
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

Int gcd(const Int& a, const Int& b) {
  Int x = abs(a), y = abs(b);
  while (y != 0) {
    Int t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Int floor(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q),
                   boost::multiprecision::denominator(q));
}

Int ceil(const Rational& q) {
  return ceil_div(boost::multiprecision::numerator(q),
                  boost::multiprecision::denominator(q));
}

Int pow(const Int& base, unsigned exp) {
  Int result = 1, b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return result;
}

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rational& q) {
  const Int& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

std::string to_fixed(const Rational& q, unsigned digits, bool round_up) {
  Int scale = pow(Int(10), digits);
  Rational scaled = q * Rational(scale);
  Int n = round_up ? ceil(scaled) : floor(scaled);
  bool negative = n < 0;
  Int a = abs(n);
  std::string whole = Int(a / scale).str();
  std::string frac = Int(a % scale).str();
  if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
  std::string out = negative ? "-" : "";
  out += whole;
  if (digits > 0) out += "." + frac;
  return out;
}

bool fits_int64(const Int& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace cyclat
