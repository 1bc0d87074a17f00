#include <sra3/indicators.hpp>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

namespace sra3
{

void EpsParams::validate() const
{
  if (!(k > 0.0) || !std::isfinite(k))
    throw ConfigError("epsilon scaling factor k must be positive");
}

double eps_indicator(std::span<const double> x, std::span<const double> y)
{
  if (x.size() != y.size() || x.empty())
    throw UsageError("eps_indicator: vectors must be non-empty and of equal length");
  double e = x[0] - y[0];
  for (std::size_t i = 1; i < x.size(); ++i)
    e = std::max(e, x[i] - y[i]);
  return e;
}

double sde_distance(std::span<const double> x, std::span<const double> y)
{
  if (x.size() != y.size())
    throw UsageError("sde_distance: vectors differ in length");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < y[i])
    {
      const double d = y[i] - x[i];
      s += d * d;
    }
  return std::sqrt(s);
}

namespace
{

void require_uniform_length(std::span<const ObjectiveVector> points)
{
  if (points.empty())
    return;
  const auto m = points.front().size();
  for (const auto& p : points)
  {
    if (p.size() != m)
      throw UsageError("population members differ in objective count");
    require_finite(p, "objective vector");
  }
}

} // namespace

IndicatorMatrix IndicatorMatrix::epsilon(std::span<const ObjectiveVector> points)
{
  require_uniform_length(points);
  const auto n = points.size();
  IndicatorMatrix mat(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        mat(i, j) = eps_indicator(points[i], points[j]);
  return mat;
}

IndicatorMatrix IndicatorMatrix::sde(std::span<const ObjectiveVector> points)
{
  require_uniform_length(points);
  const auto n = points.size();
  IndicatorMatrix mat(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        mat(i, j) = sde_distance(points[i], points[j]);
  return mat;
}

double IndicatorMatrix::max_abs_off_diagonal() const noexcept
{
  double c = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j)
        c = std::max(c, std::fabs((*this)(i, j)));
  return c;
}

long double eps_contribution(double indicator, double divisor)
{
  if (divisor == 0.0)
    return 1.0L;
  const double exponent = -indicator / divisor;
  // Plain double exp is exact enough and much cheaper inside its range.
  if (exponent < 700.0)
    return static_cast<long double>(std::exp(exponent));
  return std::exp(static_cast<long double>(exponent));
}

EpsFitness eps_fitness(const IndicatorMatrix& eps, double divisor)
{
  const auto n = eps.size();
  EpsFitness out;
  out.wide.assign(n, 0.0L);
  out.values.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
  {
    long double sum = 0.0L;
    for (std::size_t i = 0; i < n; ++i)
      if (i != j)
        sum -= eps_contribution(eps(i, j), divisor);
    bool clamped = false;
    if (!std::isfinite(sum))
    {
      sum = -LDBL_MAX;
      clamped = true;
    }
    out.wide[j] = sum;
    if (sum < static_cast<long double>(kFitnessFloor))
    {
      out.values[j] = kFitnessFloor;
      clamped = true;
    }
    else
    {
      out.values[j] = static_cast<double>(sum);
    }
    if (clamped)
      ++out.clamped;
  }
  return out;
}

std::vector<double> fitness_I1(std::span<const ObjectiveVector> pop, const EpsParams& params)
{
  params.validate();
  if (pop.empty())
    throw UsageError("fitness_I1: empty population");
  return eps_fitness(IndicatorMatrix::epsilon(pop), params.k).values;
}

std::vector<double> fitness_I2(const IndicatorMatrix& sde, std::size_t archive_capacity)
{
  if (archive_capacity == 0)
    throw UsageError("fitness_I2: archive capacity must be positive");
  const auto n = sde.size();
  const double denom = 2.0 * static_cast<double>(archive_capacity) - 1.0;
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
  {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        sum += sde(i, j);
    out[i] = sum / denom;
  }
  return out;
}

std::vector<double> fitness_I2(std::span<const ObjectiveVector> pop, std::size_t archive_capacity)
{
  if (pop.empty())
    throw UsageError("fitness_I2: empty population");
  if (archive_capacity == 0)
    throw UsageError("fitness_I2: archive capacity must be positive");
  return fitness_I2(IndicatorMatrix::sde(pop), archive_capacity);
}

ScaledObjectives normalize_objectives(std::span<const ObjectiveVector> pop)
{
  if (pop.empty())
    throw UsageError("normalize_objectives: empty population");
  require_uniform_length(pop);
  const auto m = pop.front().size();
  ScaledObjectives out;
  out.lower.assign(m, std::numeric_limits<double>::infinity());
  out.upper.assign(m, -std::numeric_limits<double>::infinity());
  for (const auto& p : pop)
    for (std::size_t i = 0; i < m; ++i)
    {
      out.lower[i] = std::min(out.lower[i], p[i]);
      out.upper[i] = std::max(out.upper[i], p[i]);
    }
  out.points.reserve(pop.size());
  for (const auto& p : pop)
  {
    ObjectiveVector s(m);
    for (std::size_t i = 0; i < m; ++i)
    {
      const double range = out.upper[i] - out.lower[i];
      s[i] = range > 0.0 ? (p[i] - out.lower[i]) / range : 0.0;
    }
    out.points.push_back(std::move(s));
  }
  return out;
}

double max_abs_eps(std::span<const ObjectiveVector> pop)
{
  if (pop.size() < 2)
    throw UsageError("max_abs_eps: needs at least two points");
  return IndicatorMatrix::epsilon(pop).max_abs_off_diagonal();
}

} // namespace sra3
