#include <cmath>

#include <gtest/gtest.h>

#include "charvar/twist.hpp"
#include "test_support.hpp"

using namespace charvar;

namespace {
const BoundaryData kFlagship{std::sqrt(2.0), std::sqrt(2.0), 0.5, -0.5};

void expect_point_near(const CharPoint& got, const CharPoint& want, double tol) {
  EXPECT_NEAR(got.x, want.x, tol);
  EXPECT_NEAR(got.y, want.y, tol);
  EXPECT_NEAR(got.z, want.z, tol);
}
}  // namespace

TEST(Twist, FixedPointsAndImages) {
  expect_point_near(twist_x(kFlagship, {0, 0, 0}), {0, 0, 0}, 1e-12);
  expect_point_near(twist_x(BoundaryData{0, 0, 0, 0}, {2, 0, 0}), {2, 0, 0}, 1e-12);

  expect_point_near(twist_y(kFlagship, {0, 0, 0}), {1.75, 0, 0}, 1e-12);
  expect_point_near(twist_y(kFlagship, {1.75, 0, 0}), {0, 0, 0}, 1e-12);
  expect_point_near(twist_y(BoundaryData{2, 2, 2, 2}, {2, 2, 2}), {2, 2, 2}, 1e-12);

  expect_point_near(twist_z(kFlagship, {0, 0, 0}), {1.75, 0, 0}, 1e-12);
  expect_point_near(twist_z(BoundaryData{0, 0, 0, 0}, {0, 0, 2}), {0, 0, 2}, 1e-12);
}

TEST(Twist, FormulaEvaluationStaysOnSurface) {
  BoundaryData k{0, 0, 0, 0};
  CharPoint img = twist_z(k, {1, 1, 1});
  expect_point_near(img, {1, -2, 1}, 1e-12);
  EXPECT_DOUBLE_EQ(relation(k, img), 0.0);
}

TEST(Twist, FixedCoordinateIsBitIdentical) {
  auto pairs = charvar::testutil::sample_pairs(50, 31);
  for (const auto& [k, p] : pairs) {
    EXPECT_EQ(twist_x(k, p).x, p.x);
    EXPECT_EQ(twist_y(k, p).y, p.y);
    EXPECT_EQ(twist_z(k, p).z, p.z);
  }
}

TEST(Twist, SurfacePreservation) {
  auto pairs = charvar::testutil::sample_pairs(300, 32);
  for (const auto& [k, p] : pairs) {
    ASSERT_LE(std::abs(relation(k, p)), 1e-9);
    const SurfaceCoefficients s = coefficients(k);
    for (const CharPoint& img :
         {twist_x(s, p), twist_y(s, p), twist_z(s, p), twist_x_inverse(s, p),
          twist_y_inverse(s, p), twist_z_inverse(s, p)}) {
      EXPECT_LE(std::abs(relation(s, img)), 1e-8);
    }
  }
}

TEST(Twist, InverseLaw) {
  auto pairs = charvar::testutil::sample_pairs(1000, 33);
  for (const auto& [k, p] : pairs) {
    const SurfaceCoefficients s = coefficients(k);
    for (Generator g : {Generator::X, Generator::Y, Generator::Z}) {
      CharPoint fwd = apply_twist(g, -1, s, apply_twist(g, 1, s, p));
      expect_point_near(fwd, p, 1e-9);
      CharPoint bwd = apply_twist(g, 1, s, apply_twist(g, -1, s, p));
      expect_point_near(bwd, p, 1e-9);
    }
  }
}

TEST(Twist, InverseOfKnownImage) {
  expect_point_near(twist_inverse(Generator::Y, kFlagship, {1.75, 0, 0}), {0, 0, 0},
                    1e-12);
  // (0,0,0) is twist_x-fixed, so its inverse image is itself.
  expect_point_near(twist_inverse(Generator::X, kFlagship, {0, 0, 0}), {0, 0, 0},
                    1e-12);
}

// The x-axis pair {(a^2-2,0,0), (2-c^2,0,0)} for kappa = (a,a,c,-c) maps
// into itself under every generator.
TEST(Twist, InvariantPairOnFamilyGrid) {
  for (double a = 0.15; a < 1.95; a += 0.2) {
    for (double c = 0.15; c < 1.95; c += 0.2) {
      if (a * a + c * c >= 4.0) continue;
      BoundaryData k{a, a, c, -c};
      const CharPoint p1{a * a - 2.0, 0.0, 0.0}, p2{2.0 - c * c, 0.0, 0.0};
      const SurfaceCoefficients s = coefficients(k);
      for (const CharPoint& p : {p1, p2}) {
        for (const CharPoint& img :
             {twist_x(s, p), twist_y(s, p), twist_z(s, p), twist_x_inverse(s, p),
              twist_y_inverse(s, p), twist_z_inverse(s, p)}) {
          double d1 = std::max({std::abs(img.x - p1.x), std::abs(img.y - p1.y),
                                std::abs(img.z - p1.z)});
          double d2 = std::max({std::abs(img.x - p2.x), std::abs(img.y - p2.y),
                                std::abs(img.z - p2.z)});
          EXPECT_LE(std::min(d1, d2), 1e-10);
        }
      }
    }
  }
}

TEST(Word, EmptyWordIsIdentity) {
  CharPoint p{0.3, -0.4, 0.5};
  CharPoint img = apply_word(kFlagship, p, {});
  EXPECT_EQ(img.x, p.x);
  EXPECT_EQ(img.y, p.y);
  EXPECT_EQ(img.z, p.z);
}

TEST(Word, CancellationReturnsInput) {
  auto pairs = charvar::testutil::sample_pairs(100, 34);
  TwistWord w = parse_word("Yy");
  for (const auto& [k, p] : pairs) expect_point_near(apply_word(k, p, w), p, 1e-9);
}

TEST(Word, CompositionStaysInInvariantPair) {
  CharPoint img = apply_word(kFlagship, {0, 0, 0}, parse_word("YZ"));
  double d1 = std::max({std::abs(img.x - 0.0), std::abs(img.y), std::abs(img.z)});
  double d2 = std::max({std::abs(img.x - 1.75), std::abs(img.y), std::abs(img.z)});
  EXPECT_LE(std::min(d1, d2), 1e-9);
}

TEST(Word, ParseAndPrint) {
  TwistWord w = parse_word("YZx");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0].gen, Generator::Y);
  EXPECT_EQ(w[0].power, 1);
  EXPECT_EQ(w[2].gen, Generator::X);
  EXPECT_EQ(w[2].power, -1);
  EXPECT_EQ(to_string(w), "YZx");
  EXPECT_THROW(parse_word("YQ"), InvalidInput);
}
