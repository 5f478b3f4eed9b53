#pragma once

// Integer polynomials and the coefficient map between Z^N and
// Z[x]/(x^N - 1): cyclotomic factors, cyclic order, circulant
// determinants via resultants, cyclotomic sublattices.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cyclat/core.hpp"
#include "cyclat/integer.hpp"

namespace cyclat {

/// Polynomial over Z, coefficients lowest degree first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);
  static IntPoly monomial(std::size_t degree, Int coeff = 1);
  /// x^n - 1
  static IntPoly cycle(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  const Int& leading() const;
  /// Coefficient of x^i (zero beyond the degree).
  Int coeff(std::size_t i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly scaled(const Int& c) const;
  /// Exact division of every coefficient by c; throws if inexact.
  IntPoly divided_exact(const Int& c) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division by a monic polynomial, exact over Z.
PolyDivision divmod_monic(const IntPoly& a, const IntPoly& monic);
bool divides_monic(const IntPoly& monic, const IntPoly& a);
/// lc(b)^(deg a - deg b + 1) * a = q*b + r.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Reduction modulo x^n - 1.
IntPoly reduce_mod_cycle(const IntPoly& p, std::size_t n);

IntPoly vec_to_poly(const IntVec& a);
/// Throws std::invalid_argument when deg p > n - 1.
IntVec poly_to_vec(const IntPoly& p, std::size_t n);

/// Phi_d, the d-th cyclotomic polynomial (d >= 1).
IntPoly cyclotomic(std::size_t d);
std::vector<std::size_t> divisors(std::size_t n);
std::size_t euler_phi(std::size_t n);

/// Monic gcd of a(x) and x^N - 1 as the product of the Phi_d (d | N)
/// dividing a(x). Throws on the zero vector.
IntPoly gcd_with_cycle(const IntVec& a);

/// Rank of the circulant M(a), computed both by exact matrix rank and as
/// N - deg gcd(a(x), x^N - 1); a disagreement throws std::logic_error.
std::size_t cyclic_order(const IntVec& a);

/// The N x N circulant M(a) = (a rot(a) ... rot^{N-1}(a)).
IntMat circulant_matrix(const IntVec& a);

/// Res(f, g) by the subresultant pseudo-remainder sequence.
Int resultant(const IntPoly& f, const IntPoly& g);

/// Res(x^N - 1, a(x)) = prod_j a(omega_j); checked against det M(a).
Int circulant_det_resultant(const IntVec& a);

/// Lambda_{Phi_d} = H_{Phi_d} ∩ Z^N for d | N, rank N - phi(d).
Lattice cyclotomic_sublattice(std::size_t n, std::size_t d);
/// Phi_d divides v(x).
bool in_cyclotomic_subspace(const IntVec& v, std::size_t d);

}  // namespace cyclat
