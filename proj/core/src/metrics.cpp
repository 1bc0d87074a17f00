#include <sra3/metrics.hpp>
#include <sra3/random.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

namespace sra3
{

void MetricConfig::validate() const
{
  if (!(hv_nadir_scale > 1.0))
    throw ConfigError("hypervolume nadir scale must exceed 1");
  if (hv_mc_samples == 0)
    throw ConfigError("hypervolume sample count must be positive");
  if (igd_reference_size == 0)
    throw ConfigError("IGD reference size must be positive");
}

namespace
{

void require_dimensions(std::span<const ObjectiveVector> points, std::size_t m, const char* who)
{
  for (const auto& p : points)
    if (p.size() != m)
      throw UsageError(std::string(who) + ": points and reference differ in objective count");
}

std::vector<ObjectiveVector> contributing(std::span<const ObjectiveVector> points,
                                          std::span<const double> reference)
{
  std::vector<ObjectiveVector> out;
  for (const auto& p : points)
  {
    bool inside = true;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!(p[i] < reference[i]))
      {
        inside = false;
        break;
      }
    if (inside)
      out.push_back(p);
  }
  return nondominated_subset(out);
}

double slice_volume(std::vector<ObjectiveVector> pts, std::span<const double> ref, std::size_t dims)
{
  if (pts.empty())
    return 0.0;
  if (dims == 1)
  {
    double best = ref[0];
    for (const auto& p : pts)
      best = std::min(best, p[0]);
    return ref[0] - best;
  }
  if (dims == 2)
  {
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
      return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    double area = 0.0;
    double floor_y = ref[1];
    for (const auto& p : pts)
      if (p[1] < floor_y)
      {
        area += (ref[0] - p[0]) * (floor_y - p[1]);
        floor_y = p[1];
      }
    return area;
  }
  const auto last = dims - 1;
  std::sort(pts.begin(), pts.end(), [last](const auto& a, const auto& b) { return a[last] < b[last]; });
  double volume = 0.0;
  std::vector<ObjectiveVector> active;
  for (std::size_t i = 0; i < pts.size(); ++i)
  {
    active.push_back(pts[i]);
    const double top = i + 1 < pts.size() ? pts[i + 1][last] : ref[last];
    const double depth = top - pts[i][last];
    if (depth > 0.0)
      volume += depth * slice_volume(active, ref, last);
  }
  return volume;
}

constexpr std::size_t kChunk = 1 << 16;

} // namespace

double hypervolume_exact(std::span<const ObjectiveVector> points, std::span<const double> reference)
{
  require_dimensions(points, reference.size(), "hypervolume_exact");
  return slice_volume(contributing(points, reference), reference, reference.size());
}

double hypervolume_monte_carlo(std::span<const ObjectiveVector> points,
                               std::span<const double> reference, std::size_t samples,
                               std::uint64_t seed, std::size_t threads)
{
  require_dimensions(points, reference.size(), "hypervolume_monte_carlo");
  if (samples == 0)
    throw UsageError("hypervolume_monte_carlo: sample count must be positive");
  auto pts = contributing(points, reference);
  if (pts.empty())
    return 0.0;
  const auto m = reference.size();

  ObjectiveVector lower(m, std::numeric_limits<double>::infinity());
  for (const auto& p : pts)
    for (std::size_t i = 0; i < m; ++i)
      lower[i] = std::min(lower[i], p[i]);
  double box = 1.0;
  for (std::size_t i = 0; i < m; ++i)
    box *= reference[i] - lower[i];

  // Large boxes first: they catch most samples early.
  std::vector<double> own(pts.size(), 1.0);
  for (std::size_t j = 0; j < pts.size(); ++j)
    for (std::size_t i = 0; i < m; ++i)
      own[j] *= reference[i] - pts[j][i];
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return own[a] > own[b]; });
  std::vector<double> flat;
  flat.reserve(pts.size() * m);
  for (const auto j : order)
    flat.insert(flat.end(), pts[j].begin(), pts[j].end());

  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::size_t> hits(chunks, 0);
  const RandomSource root(seed);

  auto run_chunk = [&](std::size_t c) {
    RandomSource rng = root.derive(c);
    const std::size_t count = std::min(kChunk, samples - c * kChunk);
    std::vector<double> s(m);
    std::size_t h = 0;
    for (std::size_t t = 0; t < count; ++t)
    {
      for (std::size_t i = 0; i < m; ++i)
        s[i] = lower[i] + (reference[i] - lower[i]) * rng.uniform();
      for (std::size_t j = 0; j < pts.size(); ++j)
      {
        const double* p = flat.data() + j * m;
        std::size_t i = 0;
        while (i < m && p[i] <= s[i])
          ++i;
        if (i == m)
        {
          ++h;
          break;
        }
      }
    }
    hits[c] = h;
  };

  std::size_t workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = std::min(workers, chunks);
  if (workers <= 1)
  {
    for (std::size_t c = 0; c < chunks; ++c)
      run_chunk(c);
  }
  else
  {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < chunks; c = next++)
          run_chunk(c);
      });
  }

  const auto total = std::accumulate(hits.begin(), hits.end(), std::size_t{0});
  return box * static_cast<double>(total) / static_cast<double>(samples);
}

double hypervolume(std::span<const ObjectiveVector> points, std::span<const double> reference,
                   const MetricConfig& cfg)
{
  if (points.empty())
    return 0.0;
  if (reference.size() <= cfg.hv_exact_max_objectives)
    return hypervolume_exact(points, reference);
  return hypervolume_monte_carlo(points, reference, cfg.hv_mc_samples, cfg.hv_mc_seed, cfg.threads);
}

double normalized_hv(std::span<const ObjectiveVector> points, const ProblemSpec& problem,
                     const MetricConfig& cfg)
{
  if (points.empty())
    return 0.0;
  const auto nadir = analytic_nadir(problem);
  const auto m = problem.m;
  const ObjectiveVector reference = cfg.hv_reference.empty() ? ObjectiveVector(m, 1.0) : cfg.hv_reference;
  if (reference.size() != m)
    throw UsageError("normalized_hv: reference point has the wrong dimension");

  std::vector<ObjectiveVector> scaled;
  scaled.reserve(points.size());
  for (const auto& p : points)
  {
    if (p.size() != m)
      throw UsageError("normalized_hv: point has the wrong dimension");
    ObjectiveVector s(m);
    bool inside = true;
    for (std::size_t i = 0; i < m; ++i)
    {
      s[i] = p[i] / (cfg.hv_nadir_scale * nadir[i]);
      inside = inside && s[i] < reference[i];
    }
    if (inside)
      scaled.push_back(std::move(s));
  }
  return hypervolume(scaled, reference, cfg);
}

double igd(std::span<const ObjectiveVector> points, std::span<const ObjectiveVector> reference)
{
  if (points.empty() || reference.empty())
    throw UsageError("igd: both sets must be non-empty");
  const auto m = reference.front().size();
  require_dimensions(points, m, "igd");
  require_dimensions(reference, m, "igd");

  ObjectiveVector lo(m, std::numeric_limits<double>::infinity());
  ObjectiveVector hi(m, -std::numeric_limits<double>::infinity());
  for (const auto& r : reference)
    for (std::size_t i = 0; i < m; ++i)
    {
      lo[i] = std::min(lo[i], r[i]);
      hi[i] = std::max(hi[i], r[i]);
    }
  ObjectiveVector range(m);
  for (std::size_t i = 0; i < m; ++i)
    range[i] = hi[i] > lo[i] ? hi[i] - lo[i] : 1.0;

  auto normalize = [&](std::span<const ObjectiveVector> set) {
    std::vector<double> flat;
    flat.reserve(set.size() * m);
    for (const auto& v : set)
      for (std::size_t i = 0; i < m; ++i)
        flat.push_back((v[i] - lo[i]) / range[i]);
    return flat;
  };
  const auto p = normalize(points);
  const auto r = normalize(reference);

  double total = 0.0;
  for (std::size_t a = 0; a < reference.size(); ++a)
  {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < points.size(); ++b)
    {
      double d2 = 0.0;
      for (std::size_t i = 0; i < m; ++i)
      {
        const double d = r[a * m + i] - p[b * m + i];
        d2 += d * d;
      }
      best = std::min(best, d2);
    }
    total += std::sqrt(best);
  }
  return total / static_cast<double>(reference.size());
}

} // namespace sra3
