#include <sra3/analysis.hpp>
#include <sra3/indicators.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace sra3
{

std::string_view symbol(Outcome o) noexcept
{
  switch (o)
  {
  case Outcome::Win:
    return "+";
  case Outcome::Loss:
    return "\u2212";
  default:
    return "=";
  }
}

double median(std::vector<double> values)
{
  if (values.empty())
    throw UsageError("median of an empty sample");
  std::sort(values.begin(), values.end());
  const auto n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

namespace
{

struct Ranking
{
  std::vector<double> ranks; // midranks, combined sample order: a then b
  double tie_term = 0.0;     // sum of t^3 - t over tie groups
};

Ranking midranks(std::span<const double> a, std::span<const double> b)
{
  std::vector<double> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return all[x] < all[y]; });

  Ranking r;
  r.ranks.assign(all.size(), 0.0);
  for (std::size_t i = 0; i < order.size();)
  {
    std::size_t j = i;
    while (j + 1 < order.size() && all[order[j + 1]] == all[order[i]])
      ++j;
    const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k)
      r.ranks[order[k]] = mid;
    const double t = static_cast<double>(j - i + 1);
    r.tie_term += t * t * t - t;
    i = j + 1;
  }
  return r;
}

// Two-sided p-value from the exact permutation distribution of the first
// sample's rank sum. Ranks are doubled so midranks become integers.
double exact_p_value(const std::vector<double>& ranks, std::size_t n1, double observed_sum)
{
  std::vector<int> doubled(ranks.size());
  int max_sum = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i)
  {
    doubled[i] = static_cast<int>(std::lround(2.0 * ranks[i]));
    max_sum += doubled[i];
  }
  // ways[j][s]: subsets of size j with doubled rank sum s.
  std::vector<std::vector<double>> ways(n1 + 1, std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
  ways[0][0] = 1.0;
  for (const int r : doubled)
    for (std::size_t j = n1; j-- > 0;)
      for (int s = max_sum - r; s >= 0; --s)
        if (ways[j][static_cast<std::size_t>(s)] != 0.0)
          ways[j + 1][static_cast<std::size_t>(s + r)] += ways[j][static_cast<std::size_t>(s)];

  const double total = std::accumulate(ways[n1].begin(), ways[n1].end(), 0.0);
  const double n = static_cast<double>(ranks.size());
  const double expected2 = static_cast<double>(n1) * (n + 1.0); // doubled mean
  const double observed_dev = std::fabs(2.0 * observed_sum - expected2);
  double extreme = 0.0;
  for (std::size_t s = 0; s < ways[n1].size(); ++s)
    if (std::fabs(static_cast<double>(s) - expected2) >= observed_dev - 1e-9)
      extreme += ways[n1][s];
  return std::min(1.0, extreme / total);
}

} // namespace

ComparisonVerdict wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha)
{
  if (a.size() < 2 || b.size() < 2)
    throw UsageError("wilcoxon_rank_sum: each sample needs at least two values");
  require_finite(a, "wilcoxon sample");
  require_finite(b, "wilcoxon sample");

  const auto n1 = static_cast<double>(a.size());
  const auto n2 = static_cast<double>(b.size());
  const auto r = midranks(a, b);
  const double rank_sum = std::accumulate(r.ranks.begin(), r.ranks.begin() + static_cast<std::ptrdiff_t>(a.size()), 0.0);

  ComparisonVerdict v;
  v.statistic = rank_sum - n1 * (n1 + 1.0) / 2.0;
  const double mean_u = n1 * n2 / 2.0;

  if (a.size() < 10 && b.size() < 10)
  {
    v.p_value = exact_p_value(r.ranks, a.size(), rank_sum);
  }
  else
  {
    const double n = n1 + n2;
    const double var = n1 * n2 / 12.0 * ((n + 1.0) - r.tie_term / (n * (n - 1.0)));
    if (var <= 0.0)
      v.p_value = 1.0;
    else
    {
      const double z = (std::fabs(v.statistic - mean_u) - 0.5) / std::sqrt(var);
      v.p_value = z <= 0.0 ? 1.0 : std::min(1.0, std::erfc(z / std::numbers::sqrt2));
    }
  }

  if (v.p_value < alpha)
  {
    const double ma = median(std::vector<double>(a.begin(), a.end()));
    const double mb = median(std::vector<double>(b.begin(), b.end()));
    const bool a_larger = ma != mb ? ma > mb : v.statistic > mean_u;
    v.outcome = a_larger ? Outcome::Win : Outcome::Loss;
  }
  return v;
}

// --- Bias study --------------------------------------------------------------

std::string_view to_string(ShapeKind s) noexcept
{
  switch (s)
  {
  case ShapeKind::Concave:
    return "concave";
  case ShapeKind::Convex:
    return "convex";
  default:
    return "linear";
  }
}

std::optional<ShapeKind> parse_shape(std::string_view name)
{
  if (name == "concave")
    return ShapeKind::Concave;
  if (name == "convex")
    return ShapeKind::Convex;
  if (name == "linear")
    return ShapeKind::Linear;
  return std::nullopt;
}

ObjectiveVector FrontShape::at(double t) const
{
  if (!(t >= 0.0 && t <= 1.0))
    throw UsageError("FrontShape::at: t must lie in [0,1]");
  const double a = t * std::numbers::pi / 2.0;
  double f1 = 0.0;
  double f2 = 0.0;
  switch (kind)
  {
  case ShapeKind::Linear:
    f1 = t;
    f2 = 1.0 - t;
    break;
  case ShapeKind::Concave:
    f1 = std::sin(a);
    f2 = std::cos(a);
    break;
  case ShapeKind::Convex:
    f1 = 1.0 - std::cos(a);
    f2 = 1.0 - std::sin(a);
    break;
  }
  return {scale[0] * f1, scale[1] * f2};
}

std::vector<FrontSample> sample_similar_front(const FrontShape& shape, std::size_t n, RandomSource& rng)
{
  if (n < 2)
    throw UsageError("sample_similar_front: needs at least two points");
  std::vector<double> ts(n);
  for (auto& t : ts)
    t = rng.uniform();
  std::sort(ts.begin(), ts.end());
  std::vector<FrontSample> out;
  out.reserve(n);
  for (const double t : ts)
    out.push_back({t, shape.at(t)});
  return out;
}

std::vector<FrontSample> grid_similar_front(const FrontShape& shape, std::size_t n)
{
  if (n < 2)
    throw UsageError("grid_similar_front: needs at least two points");
  std::vector<FrontSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    out.push_back({t, shape.at(t)});
  }
  return out;
}

std::vector<ProfileEntry> mean_eps_profile(std::span<const FrontSample> points, bool normalized)
{
  if (points.size() < 2)
    throw UsageError("mean_eps_profile: needs at least two points");
  std::vector<ObjectiveVector> objs;
  objs.reserve(points.size());
  for (const auto& s : points)
    objs.push_back(s.point);
  if (normalized)
    objs = normalize_objectives(objs).points;

  const auto n = points.size();
  std::vector<ProfileEntry> out;
  out.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
  {
    double sum = 0.0;
    for (std::size_t y = 0; y < n; ++y)
      if (y != x)
        sum += eps_indicator(objs[y], objs[x]);
    out.push_back({points[x].t, points[x].point, sum / static_cast<double>(n - 1)});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.t < q.t; });
  return out;
}

std::size_t profile_argmax(std::span<const ProfileEntry> profile)
{
  if (profile.empty())
    throw UsageError("profile_argmax: empty profile");
  std::size_t best = 0;
  for (std::size_t i = 1; i < profile.size(); ++i)
    if (profile[i].mean_eps > profile[best].mean_eps)
      best = i;
  return best;
}

} // namespace sra3
