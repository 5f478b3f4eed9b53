#include "cyclat/enclosure.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclat {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("interval division by an interval with 0");
  return a * Interval{Rational(1) / b.hi, Rational(1) / b.lo};
}

Interval pow(const Interval& a, unsigned exp) {
  Interval r = Interval::point(1);
  for (unsigned i = 0; i < exp; ++i) r = r * a;
  return r;
}

namespace {

Rational sqrt_lower(const Rational& x, const Int& scale) {
  Int n = floor(x * Rational(scale * scale));
  return Rational(isqrt(n), scale);
}

Rational sqrt_upper(const Rational& x, const Int& scale) {
  Int n = ceil(x * Rational(scale * scale));
  Int s = isqrt(n);
  if (s * s != n) ++s;
  return Rational(s, scale);
}

}  // namespace

Interval sqrt_enclosure(const Rational& x, unsigned digits) {
  return sqrt_enclosure(Interval::point(x), digits);
}

Interval sqrt_enclosure(const Interval& x, unsigned digits) {
  if (x.lo < 0) throw std::domain_error("sqrt of an interval reaching below zero");
  const Int scale = pow(Int(10), digits);
  return {sqrt_lower(x.lo, scale), sqrt_upper(x.hi, scale)};
}

Interval pi_enclosure() {
  // 3.141592653589793238462643383279|50288...
  const Int digits("3141592653589793238462643383279");
  const Int scale = pow(Int(10), 30);
  return {Rational(digits, scale), Rational(digits + 1, scale)};
}

Interval unit_ball_volume(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ball dimension must be >= 1");
  const Interval pi = pi_enclosure();
  if (n % 2 == 0) {
    const unsigned k = static_cast<unsigned>(n / 2);
    Int fact = 1;
    for (unsigned i = 2; i <= k; ++i) fact *= i;
    return pow(pi, k) * Interval::point(Rational(1, fact));
  }
  // V_n = 2^n pi^k k! / n!, k = (n-1)/2
  const unsigned k = static_cast<unsigned>((n - 1) / 2);
  Int kfact = 1, nfact = 1;
  for (unsigned i = 2; i <= k; ++i) kfact *= i;
  for (unsigned i = 2; i <= n; ++i) nfact *= i;
  return pow(pi, k) * Interval::point(Rational(pow(Int(2), static_cast<unsigned>(n)) * kfact, nfact));
}

}  // namespace cyclat
