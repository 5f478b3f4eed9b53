#pragma once

// Cyclic lattices generated by the rotations of one vector, and the
// predicates that classify them.

#include <cstddef>
#include <vector>

#include "cyclat/core.hpp"
#include "cyclat/integer.hpp"

namespace cyclat {

/// cos^2 of the angle between each vector and the span of its predecessors.
struct AngleSequence {
  std::vector<Rational> cos_sq;
};

/// Lambda(a) = span_Z{a, rot(a), ..., rot^{N-1}(a)}. Throws on a = 0.
Lattice circulant_lattice(const IntVec& a);

/// rot(L) == L.
bool is_cyclic(const Lattice& lattice);

/// Throws std::invalid_argument when a prefix of `vectors` is dependent.
AngleSequence angle_sequence(const std::vector<IntVec>& vectors);

/// Full cyclic order and every cos^2 < 1/4 along a, rot(a), ..., i.e. every
/// angle lies strictly between pi/3 and 2pi/3. A true result is cross-checked
/// against in_D_N and a disagreement throws std::logic_error.
bool angles_certificate(const IntVec& a);

/// Consistency of the Gram matrix of the rotations with the circulant
/// structure; a false return means an arithmetic bug, not a property of a.
bool gram_symmetries(const IntVec& a);

/// co(a) = N, ||a|| = lambda_1(Lambda(a)), and Lambda(a) generated by its
/// minimal vectors.
bool in_D_N(const IntVec& a);

/// Lambda(a) full rank with ||a|| = lambda_1 = lambda_N.
bool in_R_N(const IntVec& a);
/// in_R_N and every minimal vector has full cyclic order.
bool in_rprime(const IntVec& a);

/// (m, m/k_1, ..., m/k_{N-1}), m = lcm |k_i|. Throws if some k_i = 0.
IntVec corollary_vector(const std::vector<Int>& k);

/// Minimal vectors of Lambda(a) are exactly ±rot^i(a) and co(a) = N.
bool verify_corollary_family(const IntVec& a);

}  // namespace cyclat
