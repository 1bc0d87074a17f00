#include <sra3/core.hpp>

#include <cmath>
#include <string>

namespace sra3
{

void require_finite(std::span<const double> v, const char* what)
{
  for (const double x : v)
    if (!std::isfinite(x))
      throw UsageError(std::string(what) + " contains a non-finite value");
}

bool dominates(std::span<const double> a, std::span<const double> b)
{
  if (a.size() != b.size())
    throw UsageError("dominates: objective vectors differ in length");
  bool strictly_better = false;
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    if (a[i] > b[i])
      return false;
    if (a[i] < b[i])
      strictly_better = true;
  }
  return strictly_better;
}

std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> points)
{
  const auto n = points.size();
  std::vector<char> dominated(n, 0);
  for (std::size_t i = 0; i < n; ++i)
  {
    if (dominated[i])
      continue;
    for (std::size_t j = i + 1; j < n; ++j)
    {
      if (dominated[j])
        continue;
      if (dominates(points[i], points[j]))
        dominated[j] = 1;
      else if (dominates(points[j], points[i]))
      {
        dominated[i] = 1;
        break;
      }
    }
  }
  // Every dominated point has a non-dominated dominator z; whichever of the
  // two loops (z's or the point's own) compares them marks the point.
  std::vector<std::size_t> result;
  for (std::size_t i = 0; i < n; ++i)
    if (!dominated[i])
      result.push_back(i);
  return result;
}

std::vector<ObjectiveVector> nondominated_subset(std::span<const ObjectiveVector> points)
{
  std::vector<ObjectiveVector> out;
  for (const auto i : nondominated_indices(points))
    out.push_back(points[i]);
  return out;
}

std::vector<Individual> nondominated_subset(std::span<const Individual> population)
{
  const auto objs = objectives_of(population);
  std::vector<Individual> out;
  for (const auto i : nondominated_indices(objs))
    out.push_back(population[i]);
  return out;
}

std::vector<ObjectiveVector> objectives_of(std::span<const Individual> population)
{
  std::vector<ObjectiveVector> out;
  out.reserve(population.size());
  for (const auto& ind : population)
    out.push_back(ind.objectives);
  return out;
}

Archive::Archive(std::size_t capacity, std::vector<Individual> members)
  : capacity_(capacity), members_(std::move(members))
{
  if (capacity_ == 0)
    throw UsageError("Archive: capacity must be positive");
  if (members_.size() != capacity_)
    throw UsageError("Archive: member count " + std::to_string(members_.size()) +
                     " differs from capacity " + std::to_string(capacity_));
}

} // namespace sra3
