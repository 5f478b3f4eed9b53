#include "cyclat/cyclic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cyclat/polyring.hpp"
#include "cyclat/svp.hpp"

namespace cyclat {

Lattice circulant_lattice(const IntVec& a) {
  if (a.is_zero()) throw std::invalid_argument("zero vector");
  return hnf_canonicalize(circulant_matrix(a));
}

bool is_cyclic(const Lattice& lattice) {
  return lattice.transformed([](const IntVec& v) { return rot_shift(v); }) == lattice;
}

AngleSequence angle_sequence(const std::vector<IntVec>& vectors) {
  AngleSequence seq;
  if (vectors.empty()) return seq;
  Int prev_det = 1;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    std::span<const IntVec> prefix(vectors.data(), i + 1);
    Int det = IntMat::from_columns(prefix).gram().determinant();
    if (det == 0) throw std::invalid_argument("dependent prefix");
    if (i > 0) {
      const Int n = vectors[i].norm_sq();
      // squared distance from vectors[i] to the span of its predecessors
      Rational dist(det, prev_det);
      seq.cos_sq.push_back((Rational(n) - dist) / Rational(n));
    }
    prev_det = det;
  }
  return seq;
}

namespace {

std::vector<IntVec> rotations(const IntVec& a) {
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < a.dim(); ++k) out.push_back(rot_shift(a, k));
  return out;
}

}  // namespace

bool in_D_N(const IntVec& a) {
  if (a.is_zero() || cyclic_order(a) != a.dim()) return false;
  const Lattice lat = circulant_lattice(a);
  const SvpResult svp = successive_minima(lat);
  return svp.lambda_sq.front() == a.norm_sq() && is_wr_prime(lat, svp);
}

bool angles_certificate(const IntVec& a) {
  if (a.is_zero() || cyclic_order(a) != a.dim()) return false;
  const AngleSequence seq = angle_sequence(rotations(a));
  const Rational quarter(1, 4);
  bool ok = std::all_of(seq.cos_sq.begin(), seq.cos_sq.end(),
                        [&](const Rational& c) { return c < quarter; });
  if (ok && !in_D_N(a))
    throw std::logic_error("angle certificate holds but " + a.to_string() + " is not in D_N");
  return ok;
}

bool gram_symmetries(const IntVec& a) {
  const std::size_t n = a.dim();
  const IntMat q = circulant_matrix(a).gram();
  const Int diag = a.norm_sq();
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) != diag) return false;
    for (std::size_t j = 0; j < n; ++j) {
      // entries depend only on (i - j) mod N
      if (q(i, j) != q((i + 1) % n, (j + 1) % n)) return false;
      if (q(i, j) != q(0, (j + n - i) % n)) return false;
    }
  }
  // a . rot^k(a) == a . rot^{N-k}(a)
  for (std::size_t k = 1; k + 1 < n; ++k)
    if (q(0, k) != q(0, n - k)) return false;
  std::set<Int> off;
  for (std::size_t j = 1; j < n; ++j) off.insert(q(0, j));
  return off.size() <= n / 2;
}

bool in_R_N(const IntVec& a) {
  if (a.is_zero() || cyclic_order(a) != a.dim()) return false;
  const SvpResult svp = successive_minima(circulant_lattice(a));
  const Int n = a.norm_sq();
  return svp.lambda_sq.front() == n && svp.lambda_sq.back() == n;
}

bool in_rprime(const IntVec& a) {
  if (a.is_zero() || cyclic_order(a) != a.dim()) return false;
  const SvpResult svp = successive_minima(circulant_lattice(a));
  const Int n = a.norm_sq();
  if (svp.lambda_sq.front() != n || svp.lambda_sq.back() != n) return false;
  for (const IntVec& c : svp.minimal_reps)
    if (gcd_with_cycle(c) != IntPoly{1}) return false;
  return true;
}

IntVec corollary_vector(const std::vector<Int>& k) {
  if (k.empty()) throw std::invalid_argument("need at least one k_i");
  Int m = 1;
  for (const Int& ki : k) {
    if (ki == 0) throw std::invalid_argument("k_i must be nonzero");
    m = lcm(m, ki);
  }
  std::vector<Int> a;
  a.push_back(m);
  for (const Int& ki : k) a.push_back(m / ki);
  return IntVec(std::move(a));
}

bool verify_corollary_family(const IntVec& a) {
  if (a.is_zero() || cyclic_order(a) != a.dim()) return false;
  const SvpResult svp = successive_minima(circulant_lattice(a));
  std::vector<IntVec> expected;
  for (const IntVec& r : rotations(a)) expected.push_back(r.sign_canonical());
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  return svp.minimal_reps == expected;
}

}  // namespace cyclat
