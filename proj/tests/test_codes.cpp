#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "leecodes/codes.hpp"
#include "leecodes/lee.hpp"
#include "oracles.hpp"

using namespace leecodes::codes;
using leecodes::lee::lee_distance_torus;
using leecodes::lee::sphere_size;

namespace {

u64 torus_points(const CodeSpec& c) {
  u64 total = 1;
  for (std::size_t i = 0; i < c.n; ++i) total *= c.q;
  return total;
}

// Coverage by direct distance computation: for every torus point, count the
// centers within distance e.
Status brute_status(const CodeSpec& c, const std::vector<Point>& centers) {
  const u64 total = torus_points(c);
  bool uncovered = false;
  for (u64 idx = 0; idx < total; ++idx) {
    Point pt(c.n);
    u64 rest = idx;
    for (std::size_t i = c.n; i-- > 0;) {
      pt[i] = static_cast<std::int64_t>(rest % c.q);
      rest /= c.q;
    }
    int hits = 0;
    for (const auto& ctr : centers) hits += lee_distance_torus(pt, ctr, c.q) <= c.e;
    if (hits >= 2) return Status::NotPacking;
    if (hits == 0) uncovered = true;
  }
  return uncovered ? Status::PackingOnly : Status::Perfect;
}

}  // namespace

TEST(Materialize, Examples) {
  const CodeSpec trivial{1, 2, 5, Homomorphism{5, {1}}};
  EXPECT_EQ(materialize(trivial), (std::vector<Point>{{0}}));

  const CodeSpec unsorted{2, 2, 13, Centers{{{5, 1}, {0, 0}, {5, 1}, {13, -1}}}};
  EXPECT_EQ(materialize(unsorted), (std::vector<Point>{{0, 0}, {0, 12}, {5, 1}}));

  const CodeSpec hom{2, 2, 13, Homomorphism{13, {1, 5}}};
  const auto centers = materialize(hom);
  EXPECT_EQ(centers.size(), 13u);
  for (const auto& c : centers) EXPECT_EQ((c[0] * 1 + c[1] * 5) % 13, 0);
}

TEST(Materialize, HomomorphismKernelByEnumeration) {
  // Non-unit last coefficient: x = (1, 3) mod 9 has gcd 3 with the modulus.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const u64 q = 3 + rng() % 10;
    const std::size_t n = 1 + rng() % 3;
    std::vector<u64> x(n);
    for (auto& v : x) v = rng() % q;
    const CodeSpec code{n, 1, q, Homomorphism{q, x}};
    std::vector<Point> expected;
    const u64 total = torus_points(code);
    for (u64 idx = 0; idx < total; ++idx) {
      Point pt(n);
      u64 rest = idx;
      for (std::size_t i = n; i-- > 0;) {
        pt[i] = static_cast<std::int64_t>(rest % q);
        rest /= q;
      }
      u64 s = 0;
      for (std::size_t i = 0; i < n; ++i) s += static_cast<u64>(pt[i]) * x[i];
      if (s % q == 0) expected.push_back(pt);
    }
    ASSERT_EQ(materialize(code), expected) << "q=" << q;
  }
}

TEST(Materialize, RejectsMalformed) {
  EXPECT_THROW(materialize(CodeSpec{2, 2, 13, Centers{}}), std::invalid_argument);
  EXPECT_THROW(materialize(CodeSpec{2, 2, 4, Centers{{{0, 0}}}}), std::invalid_argument);
  EXPECT_THROW(materialize(CodeSpec{2, 2, 13, Homomorphism{11, {1, 5}}}), std::invalid_argument);
  EXPECT_THROW(materialize(CodeSpec{2, 2, 13, Homomorphism{13, {1}}}), std::invalid_argument);
  // Singular basis and a lattice that misses 13Z^2.
  EXPECT_THROW(materialize(CodeSpec{2, 2, 13, Lattice{{{1, 2}, {2, 4}}}}), std::invalid_argument);
  EXPECT_THROW(materialize(CodeSpec{2, 2, 13, Lattice{{{2, 0}, {0, 1}}}}), std::invalid_argument);
  EXPECT_THROW(materialize(CodeSpec{2, 2, 13, Lattice{{{1, 1}, {1, -1}}}}), std::invalid_argument);
  EXPECT_EQ(materialize(CodeSpec{2, 2, 14, Lattice{{{1, 1}, {1, -1}}}}).size(), 98u);
}

TEST(Materialize, LatticeMatchesCombinations) {
  const auto code = construct_gw(GwFamily::Dim2, 3);  // q = 25
  std::set<Point> expected;
  for (std::int64_t i = 0; i < 25; ++i) {
    for (std::int64_t j = 0; j < 25; ++j) {
      Point pt{(4 * i - 3 * j) % 25, (3 * i + 4 * j) % 25};
      for (auto& c : pt) c = (c + 25) % 25;
      expected.insert(pt);
    }
  }
  const auto got = materialize(code);
  EXPECT_EQ(got, std::vector<Point>(expected.begin(), expected.end()));
  EXPECT_EQ(got.size(), 25u);
}

TEST(Verify, RadiusOneSevenIsPerfect) {
  const auto code = construct_gw(GwFamily::Radius1, 3);
  EXPECT_EQ(code.q, 7u);
  EXPECT_EQ(verify(code).status, Status::Perfect);
}

TEST(Verify, SingleCenterLeavesGaps) {
  const CodeSpec code{2, 2, 13, Centers{{{0, 0}}}};
  const auto r = verify(code);
  EXPECT_EQ(r.status, Status::PackingOnly);
  ASSERT_TRUE(r.witness);
  // (0,3) is the least point at distance 3 from the origin.
  EXPECT_EQ(r.witness->point, (Point{0, 3}));
  EXPECT_GT(lee_distance_torus(r.witness->point, {0, 0}, 13), 2u);
}

TEST(Verify, OverlappingCentersAreNotPacking) {
  const CodeSpec code{2, 2, 13, Centers{{{0, 0}, {1, 0}}}};
  const auto r = verify(code);
  EXPECT_EQ(r.status, Status::NotPacking);
  ASSERT_TRUE(r.witness);
  ASSERT_EQ(r.witness->centers.size(), 2u);
  for (const auto& c : r.witness->centers) EXPECT_LE(lee_distance_torus(c, r.witness->point, 13), 2u);
  EXPECT_LE(lee_distance_torus(r.witness->centers[0], r.witness->centers[1], 13), 4u);
}

TEST(Verify, GuardIsAnErrorNotAVerdict) {
  const CodeSpec big{12, 1, 25, Homomorphism{25, std::vector<u64>(12, 1)}};
  EXPECT_THROW(verify(big), TooLargeError);
  const CodeSpec small{2, 2, 13, Centers{{{0, 0}}}};
  EXPECT_THROW(verify(small, 100), TooLargeError);
  EXPECT_NO_THROW(verify(small, 169));
}

TEST(Verify, AgreesWithDistanceBruteForce) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    const u64 e = 1 + rng() % 2;
    const u64 q = 2 * e + 1 + rng() % 6;
    const std::size_t n = 1 + rng() % 2;
    std::vector<Point> pts(1 + rng() % 6, Point(n));
    for (auto& p : pts)
      for (auto& c : p) c = static_cast<std::int64_t>(rng() % q);
    const CodeSpec code{n, e, q, Centers{pts}};
    const auto r = verify(code);
    ASSERT_EQ(r.status, brute_status(code, materialize(code)));
    if (r.status == Status::NotPacking) {
      ASSERT_EQ(r.witness->centers.size(), 2u);
      ASSERT_LE(lee_distance_torus(r.witness->centers[0], r.witness->centers[1], q), 2 * e);
    }
  }
}

TEST(Construct, Examples) {
  EXPECT_EQ(verify(construct_gw(GwFamily::Dim1, 2)).status, Status::Perfect);
  EXPECT_EQ(verify(construct_gw(GwFamily::Radius1, 5)).status, Status::Perfect);
  const auto dim2 = construct_gw(GwFamily::Dim2, 2);
  EXPECT_EQ(dim2.q, 13u);
  EXPECT_EQ(verify(dim2).status, Status::Perfect);
  EXPECT_THROW(construct_gw(GwFamily::Dim1, 0), std::invalid_argument);
}

TEST(Construct, FamiliesArePerfectAndCountsMatch) {
  auto check = [](const CodeSpec& code) {
    ASSERT_EQ(verify(code).status, Status::Perfect);
    ASSERT_EQ(materialize(code).size() * sphere_size(code.n, code.e), torus_points(code));
  };
  for (u64 e = 1; e <= 10; ++e) check(construct_gw(GwFamily::Dim1, e));
  for (u64 e = 1; e <= 5; ++e) check(construct_gw(GwFamily::Dim2, e));
  for (u64 n = 1; n <= 5; ++n) check(construct_gw(GwFamily::Radius1, n));
}

TEST(HomomorphismBijective, Examples) {
  const std::vector<u64> good{1, 5}, same{1, 1};
  EXPECT_TRUE(verify_homomorphism_bijective(13, 2, good));
  EXPECT_TRUE(oracle::partition_by_set(13, good));
  EXPECT_FALSE(verify_homomorphism_bijective(13, 2, same));
  EXPECT_THROW(verify_homomorphism_bijective(11, 2, good), std::invalid_argument);
  EXPECT_THROW(verify_homomorphism_bijective(13, 3, good), std::invalid_argument);
}

TEST(HomomorphismBijective, AllPairsMatchSetOracleAndCoverage) {
  // Bijective on S(2,2) exactly when the kernel tiles (Z/13)^2.
  for (u64 a = 0; a < 13; ++a) {
    for (u64 b = 0; b < 13; ++b) {
      const std::vector<u64> x{a, b};
      const bool bij = verify_homomorphism_bijective(13, 2, x);
      ASSERT_EQ(bij, oracle::partition_by_set(13, x));
      const auto status = verify(CodeSpec{2, 2, 13, Homomorphism{13, x}}).status;
      ASSERT_EQ(bij, status == Status::Perfect) << a << "," << b;
    }
  }
}

TEST(HomomorphismBijective, NoneForFive) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20000; ++i) {
    std::vector<u64> x(5);
    for (auto& v : x) v = rng() % 61;
    ASSERT_FALSE(verify_homomorphism_bijective(61, 5, x));
  }
}

TEST(HomomorphismBijective, DimensionOneAndThreeAgreeWithCoverage) {
  for (u64 a = 0; a < 5; ++a) {
    const std::vector<u64> x{a};
    ASSERT_EQ(verify_homomorphism_bijective(5, 1, x),
              verify(CodeSpec{1, 2, 5, Homomorphism{5, x}}).status == Status::Perfect);
  }
  // p = 25 at n = 3 is not prime but the equivalence still holds; sample it.
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    std::vector<u64> x(3);
    for (auto& v : x) v = rng() % 25;
    ASSERT_EQ(verify_homomorphism_bijective(25, 3, x),
              verify(CodeSpec{3, 2, 25, Homomorphism{25, x}}).status == Status::Perfect);
  }
}

TEST(LiftProject, Examples) {
  const auto dim1 = construct_gw(GwFamily::Dim1, 2);
  const auto lifted = lift_code(dim1);
  EXPECT_EQ(lifted.representatives, (std::vector<Point>{{0}}));
  EXPECT_TRUE(contains(lifted, {10}));
  EXPECT_TRUE(contains(lifted, {-5}));
  EXPECT_FALSE(contains(lifted, {3}));

  EXPECT_EQ(lift_code(construct_gw(GwFamily::Radius1, 2)).representatives.size(), 5u);

  const std::vector<Point> reps{{0}};
  const auto projected = project_code(reps, 5, 1, 2);
  EXPECT_EQ(std::get<Centers>(projected.repr).points, (std::vector<Point>{{0}}));
}

TEST(LiftProject, RoundTrip) {
  for (const auto& code : {construct_gw(GwFamily::Dim1, 2), construct_gw(GwFamily::Dim2, 2),
                           construct_gw(GwFamily::Radius1, 3), construct_gw(GwFamily::Dim2, 4)}) {
    const auto lifted = lift_code(code);
    const auto back = project_code(lifted.representatives, lifted.q, lifted.n, lifted.e);
    EXPECT_EQ(materialize(back), materialize(code));
    EXPECT_EQ(verify(back).status, verify(code).status);
  }
}

TEST(LiftProject, LiftedCodeTilesAWindowOfZn) {
  // Every integer point of a window is within distance e of exactly one
  // lifted center; centers are searched in a margin of width e around it.
  const auto code = construct_gw(GwFamily::Dim2, 2);
  const auto lifted = lift_code(code);
  const std::int64_t lo = -20, hi = 20, e = 2;
  for (std::int64_t x = lo; x <= hi; ++x) {
    for (std::int64_t y = lo; y <= hi; ++y) {
      int hits = 0;
      for (std::int64_t dx = -e; dx <= e; ++dx)
        for (std::int64_t dy = -e; dy <= e; ++dy)
          if (std::abs(dx) + std::abs(dy) <= e && contains(lifted, {x + dx, y + dy})) ++hits;
      ASSERT_EQ(hits, 1) << x << "," << y;
    }
  }
}
