#pragma once

// Exact shortest-vector machinery: complete enumeration of short lattice
// vectors, successive minima, minimal vectors, and the well-roundedness
// predicates built on them.

#include <cstddef>
#include <vector>

#include "cyclat/core.hpp"
#include "cyclat/integer.hpp"

namespace cyclat {

struct SvpResult {
  /// Squared successive minima, nondecreasing, one per rank.
  std::vector<Int> lambda_sq;
  /// Independent vectors achieving lambda_sq, chosen greedily by
  /// (norm, lexicographic) order.
  std::vector<IntVec> minima_vectors;
  /// One sign-canonical representative per ± pair of minimal vectors,
  /// sorted lexicographically.
  std::vector<IntVec> minimal_reps;
  /// Squared radius the enumeration was complete to.
  Int enum_radius_sq;

  /// |S(L)|, counting both signs.
  std::size_t minimal_count() const { return 2 * minimal_reps.size(); }
};

/// Gram-Schmidt data of a basis computed from its Gram matrix:
/// ||sum x_i b_i||^2 = sum_j d_j (x_j + sum_{i>j} mu(i,j) x_i)^2.
struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;  // mu[i][j], j < i
  std::vector<Rational> d;                // ||b_j*||^2
};
GramSchmidt gram_schmidt(const IntMat& gram);

/// Exact LLL reduction (delta = 3/4) of the columns of an independent basis.
IntMat lll_reduce(const IntMat& basis);

/// Every nonzero v in the lattice with ||v||^2 <= bound_sq, one
/// sign-canonical representative per ± pair, sorted lexicographically.
std::vector<IntVec> enumerate_short(const Lattice& lattice, const Int& bound_sq);
/// Same over the lattice spanned by the columns of `basis`; throws
/// std::invalid_argument("dependent basis") on dependent columns.
std::vector<IntVec> enumerate_short(const IntMat& basis, const Int& bound_sq);

SvpResult successive_minima(const Lattice& lattice);

bool is_well_rounded(const SvpResult& svp);
bool is_well_rounded(const Lattice& lattice);
/// Lattice is generated over Z by its minimal vectors.
bool is_wr_prime(const Lattice& lattice, const SvpResult& svp);
bool is_wr_prime(const Lattice& lattice);

/// Some basis of the lattice consists of vectors of norms lambda_1..lambda_r.
/// Exhaustive search; throws std::length_error("search too large") for rank > 8.
bool is_minkowskian(const Lattice& lattice);

/// det(L) <= prod lambda_i <= 2^r det(L) / V_r, checked exactly on squares,
/// with the ball volume taken from the safe end of its enclosure.
bool minkowski_sanity(const Lattice& lattice, const SvpResult& svp);
bool minkowski_sanity(const Lattice& lattice);

/// a, rot(a), ..., rot^{N-1}(a) as a solution of SIVP on Lambda(a).
/// Throws std::invalid_argument("not in R'_N") unless Lambda(a) is in R'_N.
std::vector<IntVec> sivp_via_rotations(const IntVec& a);

}  // namespace cyclat
