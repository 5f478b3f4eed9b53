#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cyclat/core.hpp"
#include "cyclat/integer.hpp"
#include "oracles.hpp"

using namespace cyclat;

TEST(Integer, IsqrtMatchesDefinition) {
  for (long long n = 0; n < 5000; ++n) {
    const Int r = isqrt(Int(n));
    EXPECT_LE(r * r, n);
    EXPECT_GT((r + 1) * (r + 1), n);
  }
  const Int big = pow(Int(10), 40) + 12345;
  const Int r = isqrt(big);
  EXPECT_LE(r * r, big);
  EXPECT_GT((r + 1) * (r + 1), big);
  EXPECT_THROW(isqrt(Int(-1)), std::domain_error);
}

TEST(Integer, FloorCeilDivision) {
  EXPECT_EQ(floor_div(Int(7), Int(2)), 3);
  EXPECT_EQ(floor_div(Int(-7), Int(2)), -4);
  EXPECT_EQ(ceil_div(Int(-7), Int(2)), -3);
  EXPECT_EQ(ceil_div(Int(7), Int(-2)), -3);
  EXPECT_EQ(floor(Rational(-1, 3)), -1);
  EXPECT_EQ(ceil(Rational(-1, 3)), 0);
}

TEST(Integer, FixedPointRounding) {
  EXPECT_EQ(to_fixed(Rational(1, 3), 6, false), "0.333333");
  EXPECT_EQ(to_fixed(Rational(1, 3), 6, true), "0.333334");
  EXPECT_EQ(to_fixed(Rational(-1, 3), 6, false), "-0.333334");
  EXPECT_EQ(to_fixed(Rational(-1, 3), 6, true), "-0.333333");
  EXPECT_EQ(to_fixed(Rational(5), 2, false), "5.00");
  EXPECT_EQ(to_string(Rational(4, 9)), "4/9");
  EXPECT_EQ(to_string(Rational(6, 3)), "2");
}

TEST(IntVec, RotShiftExamples) {
  EXPECT_EQ(rot_shift(IntVec{1, 2, 3}), (IntVec{3, 1, 2}));
  EXPECT_EQ(rot_shift(IntVec{5, 7}, 2), (IntVec{5, 7}));
  EXPECT_EQ(rot_shift(IntVec{1, 0, 0, 0}, 2), (IntVec{0, 0, 1, 0}));
}

TEST(IntVec, RotShiftProperties) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 6;
    const IntVec v = oracle::random_vec(rng, n, -9, 9);
    const std::size_t k = rng() % 10;
    EXPECT_EQ(rot_shift(v, k).norm_sq(), v.norm_sq());
    EXPECT_EQ(rot_shift(v, n + k), rot_shift(v, k));
  }
}

TEST(IntVec, SignCanonical) {
  EXPECT_EQ((IntVec{0, -2, 3}).sign_canonical(), (IntVec{0, 2, -3}));
  EXPECT_EQ((IntVec{1, -1}).sign_canonical(), (IntVec{1, -1}));
  EXPECT_THROW(IntVec(std::vector<Int>{Int(1)}), std::invalid_argument);
}

TEST(IntMat, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + rng() % 5;
    const IntMat m = oracle::random_mat(rng, n, n, -6, 6);
    EXPECT_EQ(m.determinant(), oracle::leibniz_det(m)) << m;
  }
}

TEST(IntMat, RankMatchesMinorsAndRationals) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 2 + rng() % 4, c = 2 + rng() % 4, k = 2 + rng() % 3;
    // low-rank products hit degenerate cases often
    const IntMat m = oracle::random_mat(rng, r, k, -3, 3) * oracle::random_mat(rng, k, c, -3, 3);
    const std::size_t rank = m.rank();
    EXPECT_EQ(rank, oracle::minor_rank(m)) << m;
    EXPECT_EQ(rank, oracle::rational_rank(m)) << m;
  }
}

TEST(Lattice, HnfExamples) {
  const Lattice a = hnf_canonicalize(IntMat::from_columns(std::vector<IntVec>{{2, 0}, {0, 2}}));
  EXPECT_EQ(a.key_string(), "[2,0,0,2]");
  const Lattice b = hnf_canonicalize(IntMat::from_columns(std::vector<IntVec>{{1, 1}, {1, -1}}));
  EXPECT_EQ(b.key_string(), "[1,0,1,2]");
  const Lattice c = hnf_canonicalize(IntMat::from_columns(std::vector<IntVec>{{4, 1}, {1, 4}}));
  EXPECT_EQ(c.hnf_key()(0, 0) * c.hnf_key()(1, 1), 15);
  EXPECT_THROW(hnf_canonicalize(IntMat(2, 2)), std::invalid_argument);
}

TEST(Lattice, HnfMembershipOracle) {
  // every vector with sup norm <= 2 is in span{(1,1),(1,-1)} iff it is in span(key)
  const IntMat gens = IntMat::from_columns(std::vector<IntVec>{{1, 1}, {1, -1}});
  const Lattice lat = hnf_canonicalize(gens);
  for (const IntVec& v : CubePoints(2, 2)) {
    EXPECT_EQ(lat.contains(v), oracle::member(gens, v)) << v;
    EXPECT_EQ(lat.contains(v), oracle::member(lat.hnf_key(), v)) << v;
  }
}

TEST(Lattice, HnfShapeAndUniqueness) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 2 + rng() % 3, m = n + rng() % 3;
    const IntMat gens = oracle::random_mat(rng, n, m, -7, 7);
    if (gens.rank() != n) continue;
    const Lattice lat = hnf_canonicalize(gens);
    const IntMat& key = lat.hnf_key();
    ASSERT_EQ(key.cols(), n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_GT(key(i, i), 0);
      for (std::size_t j = i + 1; j < n; ++j) EXPECT_EQ(key(i, j), 0);
      for (std::size_t j = 0; j < i; ++j) {
        EXPECT_GE(key(i, j), 0);
        EXPECT_LT(key(i, j), key(i, i));
      }
    }
    // same lattice: generators lie in the key lattice and the determinants match
    for (const IntVec& g : gens.columns()) EXPECT_TRUE(oracle::member(key, g));
    EXPECT_EQ(lat.det(), oracle::maximal_minor_gcd(gens));
    // idempotent and basis-independent
    EXPECT_EQ(hnf_canonicalize(key), lat);
    const IntMat u = oracle::random_unimodular(rng, m);
    EXPECT_EQ(hnf_canonicalize(gens * u), lat);
  }
}

TEST(Lattice, LowerRankKeys) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 3 + rng() % 2, r = 2 + rng() % (n - 2);
    const IntMat basis = oracle::random_mat(rng, n, r, -5, 5);
    if (basis.rank() != r) continue;
    const IntMat gens = basis * oracle::random_mat(rng, r, r + 2, -3, 3);
    if (gens.rank() != r) continue;
    const Lattice lat = hnf_canonicalize(gens);
    EXPECT_EQ(lat.rank(), r);
    for (const IntVec& g : gens.columns()) EXPECT_TRUE(lat.contains(g));
    for (const IntVec& k : lat.hnf_key().columns()) EXPECT_TRUE(oracle::member(basis, k));
    const IntMat u = oracle::random_unimodular(rng, gens.cols());
    EXPECT_EQ(hnf_canonicalize(gens * u), lat);
    const auto& piv = lat.pivots();
    EXPECT_TRUE(std::is_sorted(piv.begin(), piv.end()));
    EXPECT_EQ(std::set<std::size_t>(piv.begin(), piv.end()).size(), piv.size());
  }
}

TEST(Lattice, SublatticeIndex) {
  const Lattice z2 = hnf_canonicalize(IntMat::identity(2));
  const Lattice two = hnf_canonicalize(IntMat::from_columns(std::vector<IntVec>{{2, 0}, {0, 2}}));
  const Lattice diag = hnf_canonicalize(IntMat::from_columns(std::vector<IntVec>{{1, 1}, {1, -1}}));
  EXPECT_EQ(sublattice_index(z2, two), 4);
  EXPECT_EQ(sublattice_index(z2, z2), 1);
  EXPECT_EQ(sublattice_index(z2, diag), 2);
  EXPECT_THROW(sublattice_index(two, z2), std::invalid_argument);
}

TEST(CubePoints, CountsAndOrder) {
  EXPECT_EQ(CubePoints(2, 1).size(), 9);
  EXPECT_EQ(CubePoints(2, 2).size(), 25);
  std::vector<IntVec> zero(CubePoints(3, 0).begin(), CubePoints(3, 0).end());
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].is_zero());

  const CubePoints cube(3, 2);
  std::vector<IntVec> all(cube.begin(), cube.end());
  ASSERT_EQ(Int(all.size()), cube.size());
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::set<IntVec>(all.begin(), all.end()).size(), all.size());
  for (std::size_t i = 0; i < all.size(); i += 7) EXPECT_EQ(cube.at(Int(i)), all[i]);

  std::vector<IntVec> chunked;
  for (int w = 0; w < 4; ++w)
    cube.for_each(cube.size() * w / 4, cube.size() * (w + 1) / 4,
                  [&](const IntVec& v) { chunked.push_back(v); });
  EXPECT_EQ(chunked, all);
}
