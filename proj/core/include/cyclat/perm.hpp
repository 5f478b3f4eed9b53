#pragma once

// Permutation and signed-permutation actions on Z^N.
//
// Conventions, used everywhere:
//   * permutations act on {1, ..., N};
//   * composition is (sigma * tau)(i) = sigma(tau(i));
//   * E_tau is the matrix with E_tau e_j = e_{tau(j)}, so coordinate i of x
//     moves to position tau(i). With these, tau -> E_tau is a homomorphism
//     and E_{(1 2 ... N)} is the rotational shift.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cyclat/core.hpp"

namespace cyclat {

class Permutation {
 public:
  static Permutation identity(std::size_t n);
  /// The N-cycle (1 2 ... N).
  static Permutation standard_cycle(std::size_t n);
  /// image[i-1] = tau(i); throws std::invalid_argument unless a bijection of {1..N}.
  explicit Permutation(std::vector<std::size_t> image);
  /// Product of disjoint cycles, e.g. "(1 3 2)(4 5)", 1-indexed, whitespace
  /// and commas ignored; n = 0 infers N from the largest element.
  static Permutation parse_cycles(std::string_view text, std::size_t n = 0);

  std::size_t size() const { return image_.size(); }
  /// tau(i), 1-indexed.
  std::size_t operator()(std::size_t i) const { return image_.at(i - 1); }
  const std::vector<std::size_t>& image() const { return image_; }

  Permutation inverse() const;
  Permutation power(std::size_t k) const;
  bool is_identity() const;
  bool is_ncycle() const;
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& sigma, const Permutation& tau);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

 private:
  std::vector<std::size_t> image_;
};

/// g * E_tau with g = diag(signs), signs in {-1, +1}.
struct SignedPermutation {
  Permutation perm;
  std::vector<int> signs;

  SignedPermutation(Permutation p, std::vector<int> s);
  IntMat matrix() const;
  IntVec apply(const IntVec& x) const;
};

IntMat perm_matrix(const Permutation& tau);
/// E_tau x.
IntVec apply(const Permutation& tau, const IntVec& x);

bool is_invariant(const Lattice& lattice, const Permutation& tau);
bool is_signed_invariant(const Lattice& lattice, const SignedPermutation& s);

/// g with tau = g sigma g^{-1}, sigma = (1 2 ... N), g(i) = tau^{i-1}(1).
/// Throws unless tau is an N-cycle.
Permutation conjugator_for_ncycle(const Permutation& tau);

/// Lattice spanned by x, E_tau x, ..., E_tau^{N-1} x.
IntMat orbit_matrix(const IntVec& x, const Permutation& tau);
Lattice orbit_lattice(const IntVec& x, const Permutation& tau);

/// srot(x) = (-x_N, x_1, ..., x_{N-1}), multiplication by x in Z[x]/(x^N + 1).
IntVec signed_rot(const IntVec& x);
/// Lattice spanned by a and its N-1 negacyclic shifts. Throws on a = 0.
Lattice signed_circulant_lattice(const IntVec& a);

/// Well-roundedness of the lattice with basis (a, b), (-b, a).
bool dim2_signed_wr_check(const Int& a, const Int& b);

}  // namespace cyclat
