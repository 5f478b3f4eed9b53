#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "cyclat/core.hpp"
#include "cyclat/cyclic.hpp"
#include "cyclat/polyring.hpp"
#include "oracles.hpp"

using namespace cyclat;

namespace {

// product of a(w) over N-th roots of unity, in long double
long double root_product(const IntVec& a) {
  const std::size_t n = a.dim();
  std::complex<long double> prod = 1;
  const long double pi = 3.141592653589793238462643383279L;
  for (std::size_t j = 0; j < n; ++j) {
    const std::complex<long double> w = std::polar(1.0L, 2 * pi * static_cast<long double>(j) / n);
    std::complex<long double> v = 0, p = 1;
    for (std::size_t i = 0; i < n; ++i, p *= w) v += static_cast<long double>(a[i]) * p;
    prod *= v;
  }
  return prod.real();
}

}  // namespace

TEST(Poly, CoefficientMap) {
  EXPECT_EQ(vec_to_poly(IntVec{1, 0, 2}), (IntPoly{1, 0, 2}));
  EXPECT_EQ(vec_to_poly(IntVec{0, 0}), IntPoly());
  EXPECT_FALSE(vec_to_poly(IntVec{0, 0}).degree().has_value());
  const IntVec a{3, 1, 4};
  const IntPoly xa = reduce_mod_cycle(IntPoly::monomial(1) * vec_to_poly(a), 3);
  EXPECT_EQ(poly_to_vec(xa, 3), (IntVec{4, 3, 1}));
  EXPECT_EQ(poly_to_vec(xa, 3), rot_shift(a));
  EXPECT_THROW(poly_to_vec(IntPoly{1, 2, 3}, 2), std::invalid_argument);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const IntVec v = oracle::random_vec(rng, 2 + rng() % 6, -9, 9);
    EXPECT_EQ(poly_to_vec(vec_to_poly(v), v.dim()), v);
  }
}

TEST(Poly, Cyclotomic) {
  EXPECT_EQ(cyclotomic(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic(2), (IntPoly{1, 1}));
  EXPECT_EQ(cyclotomic(4), (IntPoly{1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), (IntPoly{1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), (IntPoly{1, 0, -1, 0, 1}));
  for (std::size_t n = 1; n <= 12; ++n) {
    IntPoly prod{1};
    for (std::size_t d : divisors(n)) {
      EXPECT_EQ(cyclotomic(d).degree().value(), euler_phi(d));
      EXPECT_EQ(cyclotomic(d).leading(), 1);
      prod = prod * cyclotomic(d);
    }
    EXPECT_EQ(prod, IntPoly::cycle(n)) << n;
  }
}

TEST(Poly, GcdWithCycle) {
  EXPECT_EQ(gcd_with_cycle(IntVec{1, 1}), (IntPoly{1, 1}));
  EXPECT_EQ(gcd_with_cycle(IntVec{1, 0, 0, 0}), IntPoly{1});
  EXPECT_EQ(gcd_with_cycle(IntVec{1, 0, 1, 0}), (IntPoly{1, 0, 1}));
  EXPECT_THROW(gcd_with_cycle(IntVec{0, 0, 0}), std::invalid_argument);
}

TEST(Poly, CyclicOrderExamples) {
  EXPECT_EQ(cyclic_order(IntVec{1, 1, 1, 1}), 1u);
  EXPECT_EQ(cyclic_order(IntVec{1, 0, 0, 0, 0}), 5u);
  EXPECT_EQ(cyclic_order(IntVec{1, 0, 1, 0}), 2u);
  EXPECT_THROW(cyclic_order(IntVec{0, 0}), std::invalid_argument);
}

TEST(Poly, ResultantExamples) {
  EXPECT_EQ(circulant_det_resultant(IntVec{2, 1}), 3);
  EXPECT_EQ(circulant_det_resultant(IntVec{1, 0, 0}), 1);
  EXPECT_EQ(circulant_det_resultant(IntVec{1, 1, 0}), 2);
  EXPECT_EQ(resultant(IntPoly::cycle(2), IntPoly{4, 1}), 15);
  // Res(x^4 + 1, 1 + x) = 2
  EXPECT_EQ(resultant(IntPoly{1, 0, 0, 0, 1}, IntPoly{1, 1}), 2);
}

TEST(Poly, ExhaustiveCubeIdentities) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const long long R = n <= 3 ? 3 : (n == 4 ? 2 : 1);
    for (const IntVec& a : CubePoints(n, R)) {
      if (a.is_zero()) continue;
      const IntMat m = circulant_matrix(a);
      const std::size_t deg = gcd_with_cycle(a).degree().value();
      EXPECT_EQ(oracle::rational_rank(m), n - deg) << a;
      EXPECT_EQ(cyclic_order(a), n - deg) << a;
      const Int det = circulant_det_resultant(a);
      EXPECT_EQ(det, resultant(IntPoly::cycle(n), vec_to_poly(a))) << a;
      EXPECT_EQ(det == 0, cyclic_order(a) < n) << a;
    }
  }
}

TEST(Poly, ResultantAgainstRootsOfUnity) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 6;
    const IntVec a = oracle::random_vec(rng, n, -6, 6);
    if (a.is_zero()) continue;
    const Int res = resultant(IntPoly::cycle(n), vec_to_poly(a));
    const long double approx = root_product(a);
    EXPECT_NEAR(static_cast<long double>(res), approx, 1e-6L * (1 + std::abs(approx))) << a;
    EXPECT_EQ(res, oracle::leibniz_det(circulant_matrix(a))) << a;
  }
}

TEST(Poly, CyclotomicSublattice) {
  const Lattice l21 = cyclotomic_sublattice(2, 1);
  EXPECT_EQ(l21.rank(), 1u);
  EXPECT_TRUE(l21.contains(IntVec{-1, 1}));
  const Lattice l22 = cyclotomic_sublattice(2, 2);
  EXPECT_TRUE(l22.contains(IntVec{1, 1}));
  EXPECT_EQ(l22.rank(), 1u);
  const Lattice l44 = cyclotomic_sublattice(4, 4);
  EXPECT_EQ(l44.rank(), 2u);
  EXPECT_EQ(l44, hnf_canonicalize(IntMat::from_columns(std::vector<IntVec>{{1, 0, 1, 0}, {0, 1, 0, 1}})));
  EXPECT_THROW(cyclotomic_sublattice(4, 3), std::invalid_argument);

  for (std::size_t n : {2u, 3u, 4u, 6u}) {
    for (std::size_t d : divisors(n)) {
      const Lattice lat = cyclotomic_sublattice(n, d);
      EXPECT_EQ(lat.rank(), n - euler_phi(d));
      const long long R = n <= 3 ? 3 : 1;
      for (const IntVec& v : CubePoints(n, R)) {
        const bool divisible = divides_monic(cyclotomic(d), vec_to_poly(v));
        EXPECT_EQ(lat.contains(v), divisible) << v << " d=" << d;
        EXPECT_EQ(in_cyclotomic_subspace(v, d), divisible) << v << " d=" << d;
      }
    }
  }
}

TEST(Poly, MultiplicationByXIsRotation) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 6;
    const IntVec a = oracle::random_vec(rng, n, -20, 20);
    const IntPoly xa = reduce_mod_cycle(IntPoly::monomial(1) * vec_to_poly(a), n);
    EXPECT_EQ(poly_to_vec(xa, n), rot_shift(a));
  }
}
