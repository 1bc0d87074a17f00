// Hand-evaluated values of each WFG transformation and shape function.

#include <sra3/wfg.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

namespace wfg = sra3::wfg;

namespace
{
constexpr double kTol = 1e-12;
const double kParamA = 0.98 / 49.98;
}

TEST(WfgTransform, BPoly)
{
  EXPECT_NEAR(wfg::b_poly(0.5, 0.02), std::pow(0.5, 0.02), kTol);
  EXPECT_NEAR(wfg::b_poly(0.0, 0.02), 0.0, kTol);
  EXPECT_NEAR(wfg::b_poly(1.0, 0.02), 1.0, kTol);
}

TEST(WfgTransform, BFlat)
{
  // A = 0.8, B = 0.75, C = 0.85: flat on [B, C], linear ramps outside.
  EXPECT_NEAR(wfg::b_flat(0.5, 0.8, 0.75, 0.85), 0.8 - 0.8 * 0.25 / 0.75, kTol);
  EXPECT_NEAR(wfg::b_flat(0.8, 0.8, 0.75, 0.85), 0.8, kTol);
  EXPECT_NEAR(wfg::b_flat(0.9, 0.8, 0.75, 0.85), 0.8 + 0.2 * 0.05 / 0.15, kTol);
  EXPECT_NEAR(wfg::b_flat(0.0, 0.8, 0.75, 0.85), 0.0, kTol);
  EXPECT_NEAR(wfg::b_flat(1.0, 0.8, 0.75, 0.85), 1.0, kTol);
}

TEST(WfgTransform, BParam)
{
  // u = 0.5 gives exponent 1, u = 0 gives B, u = 1 gives C.
  EXPECT_NEAR(wfg::b_param(0.3, 0.5, kParamA, 0.02, 50.0), 0.3, 1e-12);
  EXPECT_NEAR(wfg::b_param(0.3, 0.0, kParamA, 0.02, 50.0), std::pow(0.3, 0.02), 1e-12);
  EXPECT_NEAR(wfg::b_param(0.9, 1.0, kParamA, 0.02, 50.0), std::pow(0.9, 50.0), 1e-12);
}

TEST(WfgTransform, BParamInverse)
{
  for (const double u : {0.0, 0.1, 0.5, 0.77, 1.0})
    for (const double target : {0.05, 0.35, 0.9})
    {
      const double y = wfg::b_param_inverse(target, u);
      EXPECT_NEAR(wfg::b_param(y, u, kParamA, 0.02, 50.0), target, 1e-12) << "u=" << u;
    }
}

TEST(WfgTransform, SLinear)
{
  EXPECT_NEAR(wfg::s_linear(0.6, 0.35), 0.25 / 0.65, kTol);
  EXPECT_NEAR(wfg::s_linear(0.2, 0.35), 0.15 / 0.35, kTol);
  EXPECT_NEAR(wfg::s_linear(0.35, 0.35), 0.0, kTol);
}

TEST(WfgTransform, SDecept)
{
  EXPECT_NEAR(wfg::s_decept(0.35, 0.35, 0.001, 0.05), 0.0, 1e-9);
  EXPECT_NEAR(wfg::s_decept(0.0, 0.35, 0.001, 0.05), 0.05, 1e-9);
  EXPECT_NEAR(wfg::s_decept(1.0, 0.35, 0.001, 0.05), 0.05, 1e-9);
}

TEST(WfgTransform, SMulti)
{
  EXPECT_NEAR(wfg::s_multi(0.35, 30.0, 10.0, 0.35), 0.0, 1e-9);
  EXPECT_NEAR(wfg::s_multi(0.0, 30.0, 10.0, 0.35), 1.0, 1e-9);
  // y = 0.7: |y - C| / (2 (floor(C - y) + C)) = 0.35 / (2 * 0.65).
  const double r = 0.35 / 1.3;
  const double expected = (1.0 + std::cos(122.0 * std::numbers::pi * (0.5 - r)) + 40.0 * r * r) / 12.0;
  EXPECT_NEAR(wfg::s_multi(0.7, 30.0, 10.0, 0.35), expected, 1e-12);
}

TEST(WfgReduction, RSum)
{
  const std::vector<double> y{0.2, 0.6};
  const std::vector<double> w{1.0, 3.0};
  EXPECT_NEAR(wfg::r_sum(y, w), 0.5, kTol);
}

TEST(WfgReduction, RNonsep)
{
  const std::vector<double> y{0.2, 0.6};
  // (0.2 + 0.4) + (0.6 + 0.4) over (2/2) * 1 * (1 + 4 - 2).
  EXPECT_NEAR(wfg::r_nonsep(y, 2), 1.6 / 3.0, kTol);
  const std::vector<double> single{0.7};
  EXPECT_NEAR(wfg::r_nonsep(single, 1), 0.7, kTol);
}

TEST(WfgShape, TwoObjectiveValues)
{
  const std::vector<double> x{0.3};
  const double h = 0.3 * std::numbers::pi / 2.0;
  EXPECT_NEAR(wfg::linear(x, 1), 0.3, kTol);
  EXPECT_NEAR(wfg::linear(x, 2), 0.7, kTol);
  EXPECT_NEAR(wfg::convex(x, 1), 1.0 - std::cos(h), kTol);
  EXPECT_NEAR(wfg::convex(x, 2), 1.0 - std::sin(h), kTol);
  EXPECT_NEAR(wfg::concave(x, 1), std::sin(h), kTol);
  EXPECT_NEAR(wfg::concave(x, 2), std::cos(h), kTol);
}

TEST(WfgShape, ThreeObjectiveConcaveOnSphere)
{
  const std::vector<double> x{0.2, 0.7};
  double s = 0.0;
  for (std::size_t m = 1; m <= 3; ++m)
    s += wfg::concave(x, m) * wfg::concave(x, m);
  EXPECT_NEAR(s, 1.0, 1e-12);
  double l = 0.0;
  for (std::size_t m = 1; m <= 3; ++m)
    l += wfg::linear(x, m);
  EXPECT_NEAR(l, 1.0, 1e-12);
}

TEST(WfgShape, MixedAndDisc)
{
  const std::vector<double> q{0.25};
  EXPECT_NEAR(wfg::mixed(q, 5.0, 1.0), 0.75 + 1.0 / (10.0 * std::numbers::pi), kTol);
  const std::vector<double> a{0.1};
  const std::vector<double> b{0.2};
  EXPECT_NEAR(wfg::disc(a, 5.0, 1.0, 1.0), 1.0, kTol);
  EXPECT_NEAR(wfg::disc(b, 5.0, 1.0, 1.0), 0.8, kTol);
}

TEST(WfgShape, CalculateX)
{
  const std::vector<double> t{0.9, 0.2};
  const std::vector<double> degenerate{1.0};
  const std::vector<double> collapsed{0.0};
  EXPECT_NEAR(wfg::calculate_x(t, degenerate)[0], 0.9, kTol);
  // max(t_M, A) = 0.2: the position value is pulled towards 0.5.
  EXPECT_NEAR(wfg::calculate_x(t, collapsed)[0], 0.2 * 0.4 + 0.5, kTol);
  EXPECT_NEAR(wfg::calculate_x(t, collapsed)[1], 0.2, kTol);
}

TEST(WfgTransform, CorrectTo01)
{
  EXPECT_EQ(wfg::correct_to_01(-1e-12), 0.0);
  EXPECT_EQ(wfg::correct_to_01(1.0 + 1e-12), 1.0);
  EXPECT_EQ(wfg::correct_to_01(0.5), 0.5);
}

TEST(WfgTransform, UnitIntervalClosure)
{
  for (int i = 0; i <= 1000; ++i)
  {
    const double y = i / 1000.0;
    for (const double v : {wfg::b_poly(y, 0.02), wfg::b_flat(y, 0.8, 0.75, 0.85),
                           wfg::b_param(y, 0.3, kParamA, 0.02, 50.0), wfg::s_linear(y, 0.35),
                           wfg::s_decept(y, 0.35, 0.001, 0.05), wfg::s_multi(y, 30.0, 10.0, 0.35)})
    {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}
