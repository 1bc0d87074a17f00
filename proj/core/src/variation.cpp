#include <sra3/variation.hpp>

#include <algorithm>
#include <cmath>

namespace sra3
{

double VariationParams::mutation_probability(std::size_t n) const
{
  if (p_mutation)
    return *p_mutation;
  return n == 0 ? 0.0 : 1.0 / static_cast<double>(n);
}

void VariationParams::validate() const
{
  if (!(p_crossover >= 0.0 && p_crossover <= 1.0))
    throw ConfigError("crossover probability must lie in [0,1]");
  if (p_mutation && !(*p_mutation >= 0.0 && *p_mutation <= 1.0))
    throw ConfigError("mutation probability must lie in [0,1]");
  if (!(eta_c > 0.0) || !(eta_m > 0.0))
    throw ConfigError("distribution indices must be positive");
}

double sbx_spread_factor(double u, double eta_c)
{
  const double e = 1.0 / (eta_c + 1.0);
  if (u <= 0.5)
    return std::pow(2.0 * u, e);
  return std::pow(1.0 / (2.0 * (1.0 - u)), e);
}

std::pair<double, double> sbx_children(double x1, double x2, double beta)
{
  return {0.5 * ((1.0 + beta) * x1 + (1.0 - beta) * x2),
          0.5 * ((1.0 - beta) * x1 + (1.0 + beta) * x2)};
}

double polynomial_mutate_value(double x, double lo, double hi, double u, double eta_m)
{
  const double range = hi - lo;
  if (range <= 0.0)
    return x;
  const double d1 = (x - lo) / range;
  const double d2 = (hi - x) / range;
  const double pw = 1.0 / (eta_m + 1.0);
  double dq;
  if (u <= 0.5)
  {
    const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta_m + 1.0);
    dq = std::pow(val, pw) - 1.0;
  }
  else
  {
    const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta_m + 1.0);
    dq = 1.0 - std::pow(val, pw);
  }
  return std::clamp(x + dq * range, lo, hi);
}

std::pair<Decision, Decision> sbx_crossover(std::span<const double> p1, std::span<const double> p2,
                                            const VariationParams& params,
                                            const VariableBounds& bounds, RandomSource& rng)
{
  if (p1.size() != p2.size() || p1.size() != bounds.size())
    throw UsageError("sbx_crossover: parents and bounds must have equal length");
  Decision c1(p1.begin(), p1.end());
  Decision c2(p2.begin(), p2.end());
  if (!rng.bernoulli(params.p_crossover))
    return {std::move(c1), std::move(c2)};

  for (std::size_t i = 0; i < c1.size(); ++i)
  {
    if (!rng.bernoulli(0.5))
      continue;
    const double beta = sbx_spread_factor(rng.uniform(), params.eta_c);
    auto [a, b] = sbx_children(p1[i], p2[i], beta);
    if (rng.bernoulli(0.5))
      std::swap(a, b);
    c1[i] = std::clamp(a, bounds.lower[i], bounds.upper[i]);
    c2[i] = std::clamp(b, bounds.lower[i], bounds.upper[i]);
  }
  return {std::move(c1), std::move(c2)};
}

Decision polynomial_mutation(std::span<const double> x, const VariationParams& params,
                             const VariableBounds& bounds, RandomSource& rng)
{
  if (x.size() != bounds.size())
    throw UsageError("polynomial_mutation: decision and bounds differ in length");
  const double pm = params.mutation_probability(x.size());
  Decision y(x.begin(), x.end());
  if (pm <= 0.0)
    return y;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (rng.bernoulli(pm))
      y[i] = polynomial_mutate_value(y[i], bounds.lower[i], bounds.upper[i], rng.uniform(), params.eta_m);
  return y;
}

} // namespace sra3
