#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "charvar/classify.hpp"
#include "charvar/orbit.hpp"
#include "test_support.hpp"

using namespace charvar;

namespace {
const BoundaryData kFlagship{std::sqrt(2.0), std::sqrt(2.0), 0.5, -0.5};

// A fixed generic start point on the flagship surface, away from the x-axis.
CharPoint generic_start() {
  auto sample = sample_surface(kFlagship, 16, 2);
  for (const auto& p : sample.points)
    if (std::abs(p.y) > 0.2 && std::abs(p.z) > 0.2) return p;
  throw std::runtime_error("no generic sample found");
}

bool contains_point(const std::vector<CharPoint>& pts, const CharPoint& p, double tol) {
  for (const auto& q : pts)
    if (std::max({std::abs(q.x - p.x), std::abs(q.y - p.y), std::abs(q.z - p.z)}) <= tol)
      return true;
  return false;
}
}  // namespace

TEST(Orbit, FlagshipPairIsClosed) {
  OrbitRecord r = orbit_bfs(kFlagship, {0, 0, 0});
  EXPECT_TRUE(r.closed);
  EXPECT_FALSE(r.point_cap_hit);
  ASSERT_EQ(r.points.size(), 2u);
  EXPECT_NEAR(r.points[0].x, 0.0, 1e-12);
  EXPECT_NEAR(r.points[1].x, 1.75, 1e-12);
  EXPECT_EQ(r.points[0].y, 0.0);
  EXPECT_EQ(r.points[1].z, 0.0);
  EXPECT_LE(r.max_relation_residual, 1e-12);
}

TEST(Orbit, IdentityClassIsFixed) {
  OrbitRecord r = orbit_bfs({2, 2, 2, 2}, {2, 2, 2});
  EXPECT_TRUE(r.closed);
  EXPECT_EQ(r.points.size(), 1u);
}

TEST(Orbit, GenericPointGrows) {
  OrbitOptions opt;
  opt.max_depth = 12;
  opt.max_points = 50'000;
  OrbitRecord r = orbit_bfs(kFlagship, generic_start(), opt);
  EXPECT_GE(r.points.size(), 1000u);
  EXPECT_FALSE(r.closed);
  EXPECT_LE(r.max_relation_residual, 1e-7);
}

TEST(Orbit, DeterministicAcrossRuns) {
  OrbitOptions opt;
  opt.max_depth = 6;
  OrbitRecord r1 = orbit_bfs(kFlagship, generic_start(), opt);
  OrbitRecord r2 = orbit_bfs(kFlagship, generic_start(), opt);
  ASSERT_EQ(r1.points.size(), r2.points.size());
  for (std::size_t i = 0; i < r1.points.size(); ++i) {
    EXPECT_EQ(r1.points[i].x, r2.points[i].x);
    EXPECT_EQ(r1.points[i].y, r2.points[i].y);
    EXPECT_EQ(r1.points[i].z, r2.points[i].z);
  }
  EXPECT_EQ(r1.depth_reached, r2.depth_reached);
  EXPECT_EQ(r1.closed, r2.closed);
}

TEST(Orbit, MonotoneInDepth) {
  OrbitOptions shallow, deep;
  shallow.max_depth = 4;
  deep.max_depth = 5;
  OrbitRecord r4 = orbit_bfs(kFlagship, generic_start(), shallow);
  OrbitRecord r5 = orbit_bfs(kFlagship, generic_start(), deep);
  EXPECT_LT(r4.points.size(), r5.points.size());
  for (const auto& p : r4.points) EXPECT_TRUE(contains_point(r5.points, p, 1e-12));
}

TEST(Orbit, SameClosedOrbitFromAnyMember) {
  CharPoint other = twist_y(kFlagship, {0, 0, 0});
  OrbitRecord from_first = orbit_bfs(kFlagship, {0, 0, 0});
  OrbitRecord from_other = orbit_bfs(kFlagship, other);
  ASSERT_EQ(from_first.points.size(), from_other.points.size());
  for (std::size_t i = 0; i < from_first.points.size(); ++i) {
    EXPECT_NEAR(from_first.points[i].x, from_other.points[i].x, 1e-12);
    EXPECT_NEAR(from_first.points[i].y, from_other.points[i].y, 1e-12);
    EXPECT_NEAR(from_first.points[i].z, from_other.points[i].z, 1e-12);
  }
}

TEST(Orbit, PointCapYieldsPartialRecord) {
  OrbitOptions opt;
  opt.max_depth = 12;
  opt.max_points = 500;
  OrbitRecord r = orbit_bfs(kFlagship, generic_start(), opt);
  EXPECT_TRUE(r.point_cap_hit);
  EXPECT_FALSE(r.closed);
  EXPECT_LE(r.points.size(), 500u);
}

TEST(Orbit, InputValidation) {
  OrbitOptions bad_grid;
  bad_grid.grid = 0.0;
  EXPECT_THROW(orbit_bfs(kFlagship, {0, 0, 0}, bad_grid), InvalidInput);
  EXPECT_THROW(orbit_bfs(kFlagship, {1, 1, 1}), InvalidInput);  // off the surface
}

TEST(Orbit, DriftAbortTriggersOnImpossibleBound) {
  OrbitOptions opt;
  opt.max_depth = 6;
  opt.drift_tol = 1e-18;  // below rounding noise, so the abort path must fire
  EXPECT_THROW(orbit_bfs(kFlagship, generic_start(), opt), DriftError);
}

TEST(Orbit, DiscretenessVerdicts) {
  EXPECT_TRUE(is_discrete_orbit(kFlagship, {0, 0, 0}));
  EXPECT_TRUE(is_discrete_orbit({2, 2, 2, 2}, {2, 2, 2}));
  OrbitOptions opt;
  opt.max_depth = 8;
  opt.max_points = 50'000;
  EXPECT_FALSE(is_discrete_orbit(kFlagship, generic_start(), opt));
}

TEST(Coverage, InvariantPairHitsTwoCells) {
  OrbitRecord r = orbit_bfs(kFlagship, {0, 0, 0});
  CoverageReport cov = coverage(r.points, kFlagship, 0.25);
  EXPECT_EQ(cov.cells_hit, 2u);
  EXPECT_GT(cov.cells_on_surface, 2u);
  EXPECT_NEAR(cov.fraction,
              2.0 / static_cast<double>(cov.cells_on_surface), 1e-15);
}

TEST(Coverage, EmptyOrbitCoversNothing) {
  CoverageReport cov = coverage(std::vector<CharPoint>{}, kFlagship, 0.25);
  EXPECT_EQ(cov.cells_hit, 0u);
  EXPECT_DOUBLE_EQ(cov.fraction, 0.0);
}

TEST(Coverage, DeepGenericOrbitFillsTheSphere) {
  OrbitOptions opt;
  opt.max_depth = 14;
  opt.max_points = 200'000;
  OrbitRecord r = orbit_bfs(kFlagship, generic_start(), opt);
  CoverageReport cov = coverage(r.points, kFlagship, 0.25);
  EXPECT_GE(cov.fraction, 0.9);
}

TEST(Coverage, RejectsBadCellSize) {
  EXPECT_THROW(coverage(std::vector<CharPoint>{}, kFlagship, 0.0), InvalidInput);
  EXPECT_THROW(coverage(std::vector<CharPoint>{}, kFlagship, 1e-4), InvalidInput);
}
