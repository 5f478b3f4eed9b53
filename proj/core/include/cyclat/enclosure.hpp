#pragma once

// Rational interval enclosures of the few irrational constants the library
// needs (square roots, pi, unit-ball volumes). An Interval always contains
// the true value: lo <= x <= hi.

#include <cstddef>

#include "cyclat/integer.hpp"

namespace cyclat {

struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& x) { return {x, x}; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Division by an interval that excludes zero.
Interval operator/(const Interval& a, const Interval& b);
Interval pow(const Interval& a, unsigned exp);

/// Enclosure of sqrt(x) for x >= 0, width about 10^-digits.
Interval sqrt_enclosure(const Rational& x, unsigned digits = 30);
Interval sqrt_enclosure(const Interval& x, unsigned digits = 30);

/// pi to 30 decimal places.
Interval pi_enclosure();

/// Volume of the Euclidean unit ball in R^n, n >= 1.
Interval unit_ball_volume(std::size_t n);

}  // namespace cyclat
