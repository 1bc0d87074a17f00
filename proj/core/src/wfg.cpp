#include <sra3/core.hpp>
#include <sra3/wfg.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sra3::wfg
{

namespace
{
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kParamA = 0.98 / 49.98;
constexpr double kParamB = 0.02;
constexpr double kParamC = 50.0;
} // namespace

double correct_to_01(double a)
{
  constexpr double eps = 1.0e-10;
  if (a <= 0.0 && a >= -eps)
    return 0.0;
  if (a >= 1.0 && a <= 1.0 + eps)
    return 1.0;
  return a;
}

double b_poly(double y, double alpha)
{
  return correct_to_01(std::pow(y, alpha));
}

double b_flat(double y, double A, double B, double C)
{
  const double tmp1 = std::min(0.0, std::floor(y - B)) * A * (B - y) / B;
  const double tmp2 = std::min(0.0, std::floor(C - y)) * (1.0 - A) * (y - C) / (1.0 - C);
  return correct_to_01(A + tmp1 - tmp2);
}

double b_param(double y, double u, double A, double B, double C)
{
  const double v = A - (1.0 - 2.0 * u) * std::fabs(std::floor(0.5 - u) + A);
  return correct_to_01(std::pow(y, B + (C - B) * v));
}

double s_linear(double y, double A)
{
  return correct_to_01(std::fabs(y - A) / std::fabs(std::floor(A - y) + A));
}

double s_decept(double y, double A, double B, double C)
{
  const double tmp1 = std::floor(y - A + B) * (1.0 - C + (A - B) / B) / (A - B);
  const double tmp2 = std::floor(A + B - y) * (1.0 - C + (1.0 - A - B) / B) / (1.0 - A - B);
  return correct_to_01(1.0 + (std::fabs(y - A) - B) * (tmp1 + tmp2 + 1.0 / B));
}

double s_multi(double y, double A, double B, double C)
{
  const double tmp1 = std::fabs(y - C) / (2.0 * (std::floor(C - y) + C));
  const double tmp2 = (4.0 * A + 2.0) * kPi * (0.5 - tmp1);
  return correct_to_01((1.0 + std::cos(tmp2) + 4.0 * B * tmp1 * tmp1) / (B + 2.0));
}

double r_sum(std::span<const double> y, std::span<const double> w)
{
  if (y.size() != w.size() || y.empty())
    throw UsageError("wfg::r_sum: weights and values must be non-empty and equal length");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i)
  {
    num += w[i] * y[i];
    den += w[i];
  }
  return correct_to_01(num / den);
}

double r_nonsep(std::span<const double> y, std::size_t A)
{
  const auto n = y.size();
  if (n == 0 || A == 0 || n % A != 0)
    throw UsageError("wfg::r_nonsep: |y| must be a positive multiple of A");
  double num = 0.0;
  for (std::size_t j = 0; j < n; ++j)
  {
    num += y[j];
    for (std::size_t k = 0; k + 1 < A; ++k)
      num += std::fabs(y[j] - y[(j + k + 1) % n]);
  }
  const double half = std::ceil(static_cast<double>(A) / 2.0);
  const double a = static_cast<double>(A);
  const double den = static_cast<double>(n) * half * (1.0 + 2.0 * a - 2.0 * half) / a;
  return correct_to_01(num / den);
}

double linear(std::span<const double> x, std::size_t m)
{
  const auto M = x.size() + 1;
  double r = 1.0;
  for (std::size_t i = 1; i <= M - m; ++i)
    r *= x[i - 1];
  if (m != 1)
    r *= 1.0 - x[M - m];
  return correct_to_01(r);
}

double convex(std::span<const double> x, std::size_t m)
{
  const auto M = x.size() + 1;
  double r = 1.0;
  for (std::size_t i = 1; i <= M - m; ++i)
    r *= 1.0 - std::cos(x[i - 1] * kHalfPi);
  if (m != 1)
    r *= 1.0 - std::sin(x[M - m] * kHalfPi);
  return correct_to_01(r);
}

double concave(std::span<const double> x, std::size_t m)
{
  const auto M = x.size() + 1;
  double r = 1.0;
  for (std::size_t i = 1; i <= M - m; ++i)
    r *= std::sin(x[i - 1] * kHalfPi);
  if (m != 1)
    r *= std::cos(x[M - m] * kHalfPi);
  return correct_to_01(r);
}

double mixed(std::span<const double> x, double A, double alpha)
{
  const double tmp = 2.0 * A * kPi;
  return correct_to_01(std::pow(1.0 - x[0] - std::cos(tmp * x[0] + kHalfPi) / tmp, alpha));
}

double disc(std::span<const double> x, double A, double alpha, double beta)
{
  const double tmp = A * std::pow(x[0], beta) * kPi;
  const double c = std::cos(tmp);
  return correct_to_01(1.0 - std::pow(x[0], alpha) * c * c);
}

std::vector<double> calculate_x(std::span<const double> t, std::span<const double> degeneracy)
{
  const auto M = t.size();
  std::vector<double> x(M);
  for (std::size_t i = 0; i + 1 < M; ++i)
    x[i] = std::max(t[M - 1], degeneracy[i]) * (t[i] - 0.5) + 0.5;
  x[M - 1] = t[M - 1];
  return x;
}

double b_param_inverse(double target, double u)
{
  const double v = kParamA - (1.0 - 2.0 * u) * std::fabs(std::floor(0.5 - u) + kParamA);
  const double exponent = kParamB + (kParamC - kParamB) * v;
  return std::pow(target, 1.0 / exponent);
}

} // namespace sra3::wfg
