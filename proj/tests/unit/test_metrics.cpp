#include <sra3/metrics.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using sra3::ObjectiveVector;

namespace
{
const ObjectiveVector kOnes2{1.0, 1.0};
}

TEST(Hypervolume, SingleBox)
{
  const std::vector<ObjectiveVector> p{{0.5, 0.5}};
  EXPECT_DOUBLE_EQ(sra3::hypervolume_exact(p, kOnes2), 0.25);
}

TEST(Hypervolume, TwoOverlappingBoxes)
{
  const std::vector<ObjectiveVector> p{{0.2, 0.6}, {0.6, 0.2}};
  EXPECT_NEAR(sra3::hypervolume_exact(p, kOnes2), 0.48, 1e-15);
  EXPECT_NEAR(oracle::hv_inclusion_exclusion(p, kOnes2), 0.48, 1e-15);
}

TEST(Hypervolume, PointsOutsideReferenceContributeNothing)
{
  const std::vector<ObjectiveVector> p{{1.0, 0.2}, {0.3, 1.5}};
  EXPECT_EQ(sra3::hypervolume_exact(p, kOnes2), 0.0);
  EXPECT_EQ(sra3::hypervolume(p, kOnes2, {}), 0.0);
  EXPECT_EQ(sra3::hypervolume_monte_carlo(p, kOnes2, 1000, 1), 0.0);
}

TEST(Hypervolume, EmptySetIsZero)
{
  EXPECT_EQ(sra3::hypervolume(std::vector<ObjectiveVector>{}, kOnes2, {}), 0.0);
}

TEST(Hypervolume, ExactMatchesInclusionExclusion)
{
  oracle::TestRng rng(61);
  for (int t = 0; t < 60; ++t)
  {
    const std::size_t m = 2 + t % 4;
    const std::size_t n = 1 + t % 10;
    const auto pts = oracle::random_points(rng, n, m, 0.0, 1.2);
    const ObjectiveVector ref(m, 1.0);
    EXPECT_NEAR(sra3::hypervolume_exact(pts, ref), oracle::hv_inclusion_exclusion(pts, ref), 1e-12);
  }
}

TEST(Hypervolume, ExactIsMonotone)
{
  oracle::TestRng rng(62);
  auto pts = oracle::random_points(rng, 1, 3);
  const ObjectiveVector ref(3, 1.0);
  double prev = sra3::hypervolume_exact(pts, ref);
  for (int t = 0; t < 40; ++t)
  {
    pts.push_back(oracle::random_points(rng, 1, 3)[0]);
    const double now = sra3::hypervolume_exact(pts, ref);
    EXPECT_GE(now, prev - 1e-15);
    prev = now;
  }
}

TEST(Hypervolume, MonteCarloAgreesWithExact)
{
  oracle::TestRng rng(63);
  for (int t = 0; t < 5; ++t)
  {
    const auto pts = oracle::random_points(rng, 20, 3, 0.0, 1.0);
    const ObjectiveVector ref(3, 1.0);
    EXPECT_NEAR(sra3::hypervolume_monte_carlo(pts, ref, 200000, 7 + t), sra3::hypervolume_exact(pts, ref), 0.01);
  }
}

TEST(Hypervolume, MonteCarloIndependentOfThreadCount)
{
  oracle::TestRng rng(64);
  const auto pts = oracle::random_points(rng, 30, 5);
  const ObjectiveVector ref(5, 1.0);
  const double one = sra3::hypervolume_monte_carlo(pts, ref, 300000, 11, 1);
  EXPECT_EQ(sra3::hypervolume_monte_carlo(pts, ref, 300000, 11, 3), one);
  EXPECT_EQ(sra3::hypervolume_monte_carlo(pts, ref, 300000, 11, 0), one);
}

TEST(Hypervolume, MonteCarloMonotoneWithinNoise)
{
  oracle::TestRng rng(65);
  auto pts = oracle::random_points(rng, 10, 4);
  const ObjectiveVector ref(4, 1.0);
  const std::size_t samples = 200000;
  const double before = sra3::hypervolume_monte_carlo(pts, ref, samples, 3);
  pts.push_back({0.3, 0.3, 0.3, 0.3});
  const double after = sra3::hypervolume_monte_carlo(pts, ref, samples, 3);
  // Box volume is at most 1, so sigma <= 0.5 / sqrt(samples).
  EXPECT_GE(after, before - 3.0 * 0.5 / std::sqrt(static_cast<double>(samples)));
}

TEST(Hypervolume, DispatchUsesExactUpToThreeObjectives)
{
  oracle::TestRng rng(66);
  const auto pts = oracle::random_points(rng, 8, 3);
  const ObjectiveVector ref(3, 1.0);
  EXPECT_EQ(sra3::hypervolume(pts, ref, {}), sra3::hypervolume_exact(pts, ref));
}

TEST(NormalizedHv, Dtlz2AxisPoints)
{
  const auto spec = sra3::ProblemSpec::make(sra3::ProblemId::DTLZ2, 2);
  const std::vector<ObjectiveVector> p{{1.0, 0.0}, {0.0, 1.0}};
  const double a = 1.0 - 1.0 / 1.1;
  EXPECT_NEAR(sra3::normalized_hv(p, spec, {}), a + a - a * a, 1e-12);
  EXPECT_NEAR(sra3::normalized_hv(p, spec, {}), 0.1736, 1e-4);
}

TEST(NormalizedHv, EmptyIsZero)
{
  const auto spec = sra3::ProblemSpec::make(sra3::ProblemId::DTLZ2, 2);
  EXPECT_EQ(sra3::normalized_hv(std::vector<ObjectiveVector>{}, spec, {}), 0.0);
}

TEST(NormalizedHv, DenseDtlz1FrontNearCeiling)
{
  const auto spec = sra3::ProblemSpec::make(sra3::ProblemId::DTLZ1, 5);
  sra3::RandomSource rng(67);
  const auto front = sra3::sample_reference_front(spec, 1000, rng);
  sra3::MetricConfig cfg;
  cfg.hv_mc_samples = 200000;
  const double hv = sra3::normalized_hv(front, spec, cfg);
  EXPECT_GE(hv, 0.95);
  EXPECT_LE(hv, 1.0);
}

TEST(Igd, IdenticalSetsGiveZero)
{
  oracle::TestRng rng(68);
  const auto r = oracle::random_points(rng, 50, 3);
  EXPECT_EQ(sra3::igd(r, r), 0.0);
}

TEST(Igd, CornerExample)
{
  const std::vector<ObjectiveVector> r{{0, 1}, {1, 0}};
  const std::vector<ObjectiveVector> p{{0, 0}};
  EXPECT_DOUBLE_EQ(sra3::igd(p, r), 1.0);
}

TEST(Igd, MatchesBruteForce)
{
  oracle::TestRng rng(69);
  for (int t = 0; t < 50; ++t)
  {
    const auto p = oracle::random_points(rng, 20, 4, 0.0, 2.0);
    const auto r = oracle::random_points(rng, 200, 4, 0.0, 3.0);
    EXPECT_EQ(sra3::igd(p, r), oracle::igd(p, r));
  }
}

TEST(Igd, WeaklyDecreasesAsPGrows)
{
  oracle::TestRng rng(70);
  const auto r = oracle::random_points(rng, 100, 3);
  std::vector<ObjectiveVector> p = oracle::random_points(rng, 1, 3);
  double prev = sra3::igd(p, r);
  for (int t = 0; t < 30; ++t)
  {
    p.push_back(oracle::random_points(rng, 1, 3)[0]);
    const double now = sra3::igd(p, r);
    EXPECT_GE(now, 0.0);
    EXPECT_LE(now, prev);
    prev = now;
  }
}

TEST(Igd, EmptySetsThrow)
{
  const std::vector<ObjectiveVector> r{{0, 1}};
  EXPECT_THROW(sra3::igd(std::vector<ObjectiveVector>{}, r), sra3::UsageError);
  EXPECT_THROW(sra3::igd(r, std::vector<ObjectiveVector>{}), sra3::UsageError);
}

TEST(MetricConfig, Validate)
{
  sra3::MetricConfig c;
  EXPECT_NO_THROW(c.validate());
  c.hv_nadir_scale = 1.0;
  EXPECT_THROW(c.validate(), sra3::ConfigError);
  c = {};
  c.hv_mc_samples = 0;
  EXPECT_THROW(c.validate(), sra3::ConfigError);
}
