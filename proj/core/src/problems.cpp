#include <sra3/problems.hpp>
#include <sra3/wfg.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace sra3
{

namespace
{

constexpr double kHalfPi = std::numbers::pi / 2.0;

constexpr std::array<std::string_view, 13> kNames = {
  "DTLZ1", "DTLZ2", "DTLZ3", "DTLZ4", "WFG1", "WFG2", "WFG3",
  "WFG4",  "WFG5",  "WFG6",  "WFG7",  "WFG8", "WFG9",
};

double dtlz_multimodal_g(std::span<const double> distance)
{
  double g = static_cast<double>(distance.size());
  for (const double x : distance)
  {
    const double d = x - 0.5;
    g += d * d - std::cos(20.0 * std::numbers::pi * d);
  }
  return 100.0 * g;
}

double dtlz_sphere_g(std::span<const double> distance)
{
  double g = 0.0;
  for (const double x : distance)
    g += (x - 0.5) * (x - 0.5);
  return g;
}

ObjectiveVector evaluate_dtlz(const ProblemSpec& s, std::span<const double> x)
{
  const auto M = s.m;
  const auto distance = x.subspan(M - 1);
  ObjectiveVector f(M);

  if (s.id == ProblemId::DTLZ1)
  {
    const double g = dtlz_multimodal_g(distance);
    for (std::size_t j = 0; j < M; ++j)
    {
      double v = 0.5 * (1.0 + g);
      for (std::size_t i = 0; i + 1 + j < M; ++i)
        v *= x[i];
      if (j > 0)
        v *= 1.0 - x[M - 1 - j];
      f[j] = v;
    }
    return f;
  }

  const double g = s.id == ProblemId::DTLZ3 ? dtlz_multimodal_g(distance) : dtlz_sphere_g(distance);
  const double alpha = s.id == ProblemId::DTLZ4 ? 100.0 : 1.0;
  for (std::size_t j = 0; j < M; ++j)
  {
    double v = 1.0 + g;
    for (std::size_t i = 0; i + 1 + j < M; ++i)
      v *= std::cos(std::pow(x[i], alpha) * kHalfPi);
    if (j > 0)
      v *= std::sin(std::pow(x[M - 1 - j], alpha) * kHalfPi);
    f[j] = v;
  }
  return f;
}

// --- WFG -----------------------------------------------------------------

using Vec = std::vector<double>;

Vec s_linear_tail(Vec y, std::size_t k)
{
  for (std::size_t i = k; i < y.size(); ++i)
    y[i] = wfg::s_linear(y[i], 0.35);
  return y;
}

// Position groups reduced by weighted sum, distance block by weighted sum.
Vec reduce_sum(const Vec& y, std::size_t k, std::size_t M, const Vec& w)
{
  Vec t(M);
  const std::size_t group = k / (M - 1);
  const std::span<const double> ys(y);
  const std::span<const double> ws(w);
  for (std::size_t i = 0; i + 1 < M; ++i)
    t[i] = wfg::r_sum(ys.subspan(i * group, group), ws.subspan(i * group, group));
  t[M - 1] = wfg::r_sum(ys.subspan(k), ws.subspan(k, y.size() - k));
  return t;
}

Vec reduce_nonsep(const Vec& y, std::size_t k, std::size_t M)
{
  Vec t(M);
  const std::size_t group = k / (M - 1);
  const std::span<const double> ys(y);
  for (std::size_t i = 0; i + 1 < M; ++i)
    t[i] = wfg::r_nonsep(ys.subspan(i * group, group), group);
  t[M - 1] = wfg::r_nonsep(ys.subspan(k), y.size() - k);
  return t;
}

// WFG2/WFG3 second transformation: pairs of distance variables reduced
// non-separably, halving the distance block.
Vec pairwise_nonsep(const Vec& y, std::size_t k)
{
  const std::size_t l = y.size() - k;
  Vec out(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(k));
  const std::span<const double> ys(y);
  for (std::size_t i = 0; i < l / 2; ++i)
    out.push_back(wfg::r_nonsep(ys.subspan(k + 2 * i, 2), 2));
  return out;
}

ObjectiveVector wfg_objectives(const Vec& t, std::size_t M, ProblemId id)
{
  Vec degeneracy(M - 1, 1.0);
  if (id == ProblemId::WFG3)
    std::fill(degeneracy.begin() + 1, degeneracy.end(), 0.0);
  const Vec x = wfg::calculate_x(t, degeneracy);
  const std::span<const double> pos(x.data(), M - 1);

  ObjectiveVector f(M);
  for (std::size_t m = 1; m <= M; ++m)
  {
    double h = 0.0;
    switch (id)
    {
    case ProblemId::WFG1:
      h = m < M ? wfg::convex(pos, m) : wfg::mixed(pos, 5.0, 1.0);
      break;
    case ProblemId::WFG2:
      h = m < M ? wfg::convex(pos, m) : wfg::disc(pos, 5.0, 1.0, 1.0);
      break;
    case ProblemId::WFG3:
      h = wfg::linear(pos, m);
      break;
    default:
      h = wfg::concave(pos, m);
      break;
    }
    f[m - 1] = x[M - 1] + 2.0 * static_cast<double>(m) * h;
  }
  return f;
}

// WFG transformations from the scaled variables y_i = z_i / 2i onwards.
ObjectiveVector evaluate_wfg_scaled(const ProblemSpec& s, Vec y)
{
  const auto n = s.n;
  const auto k = s.k;
  const auto M = s.m;
  const Vec ones(n, 1.0);
  constexpr double pA = 0.98 / 49.98;

  switch (s.id)
  {
  case ProblemId::WFG1:
  {
    y = s_linear_tail(std::move(y), k);
    for (std::size_t i = k; i < n; ++i)
      y[i] = wfg::b_flat(y[i], 0.8, 0.75, 0.85);
    for (auto& v : y)
      v = wfg::b_poly(v, 0.02);
    Vec w(n);
    for (std::size_t i = 0; i < n; ++i)
      w[i] = 2.0 * static_cast<double>(i + 1);
    return wfg_objectives(reduce_sum(y, k, M, w), M, s.id);
  }
  case ProblemId::WFG2:
  case ProblemId::WFG3:
  {
    y = pairwise_nonsep(s_linear_tail(std::move(y), k), k);
    return wfg_objectives(reduce_sum(y, k, M, Vec(y.size(), 1.0)), M, s.id);
  }
  case ProblemId::WFG4:
    for (auto& v : y)
      v = wfg::s_multi(v, 30.0, 10.0, 0.35);
    return wfg_objectives(reduce_sum(y, k, M, ones), M, s.id);
  case ProblemId::WFG5:
    for (auto& v : y)
      v = wfg::s_decept(v, 0.35, 0.001, 0.05);
    return wfg_objectives(reduce_sum(y, k, M, ones), M, s.id);
  case ProblemId::WFG6:
    y = s_linear_tail(std::move(y), k);
    return wfg_objectives(reduce_nonsep(y, k, M), M, s.id);
  case ProblemId::WFG7:
  {
    Vec b = y;
    const std::span<const double> ys(y);
    const std::span<const double> ws(ones);
    for (std::size_t i = 0; i < k; ++i)
      b[i] = wfg::b_param(y[i], wfg::r_sum(ys.subspan(i + 1), ws.subspan(i + 1)), pA, 0.02, 50.0);
    b = s_linear_tail(std::move(b), k);
    return wfg_objectives(reduce_sum(b, k, M, ones), M, s.id);
  }
  case ProblemId::WFG8:
  {
    Vec b = y;
    const std::span<const double> ys(y);
    const std::span<const double> ws(ones);
    for (std::size_t i = k; i < n; ++i)
      b[i] = wfg::b_param(y[i], wfg::r_sum(ys.first(i), ws.first(i)), pA, 0.02, 50.0);
    b = s_linear_tail(std::move(b), k);
    return wfg_objectives(reduce_sum(b, k, M, ones), M, s.id);
  }
  case ProblemId::WFG9:
  {
    Vec b = y;
    const std::span<const double> ys(y);
    const std::span<const double> ws(ones);
    for (std::size_t i = 0; i + 1 < n; ++i)
      b[i] = wfg::b_param(y[i], wfg::r_sum(ys.subspan(i + 1), ws.subspan(i + 1)), pA, 0.02, 50.0);
    for (std::size_t i = 0; i < n; ++i)
      b[i] = i < k ? wfg::s_decept(b[i], 0.35, 0.001, 0.05) : wfg::s_multi(b[i], 30.0, 95.0, 0.35);
    return wfg_objectives(reduce_nonsep(b, k, M), M, s.id);
  }
  default:
    break;
  }
  throw UsageError("evaluate: not a WFG problem");
}

ObjectiveVector evaluate_wfg(const ProblemSpec& s, std::span<const double> z)
{
  Vec y(s.n);
  for (std::size_t i = 0; i < s.n; ++i)
    y[i] = z[i] / (2.0 * static_cast<double>(i + 1));
  return evaluate_wfg_scaled(s, std::move(y));
}

// Prefix minimum of the WFG2 disc function on a fine grid: a shape value x1
// is Pareto optimal only if no smaller x1 reaches a lower disc value.
bool wfg2_on_pareto_front(double x1)
{
  constexpr std::size_t kGrid = 200000;
  static const std::vector<double> prefix_min = [] {
    std::vector<double> pm(kGrid + 2, std::numeric_limits<double>::infinity());
    for (std::size_t i = 1; i < pm.size(); ++i)
    {
      const double b = static_cast<double>(i - 1) / kGrid;
      const double c = std::cos(5.0 * std::numbers::pi * b);
      pm[i] = std::min(pm[i - 1], 1.0 - b * c * c);
    }
    return pm;
  }();
  // prefix_min[i] covers grid points strictly below i / kGrid.
  const auto i = static_cast<std::size_t>(std::ceil(x1 * kGrid));
  const double c = std::cos(5.0 * std::numbers::pi * x1);
  return 1.0 - x1 * c * c <= prefix_min[std::min(i, kGrid + 1)];
}

} // namespace

std::string_view to_string(ProblemId id) noexcept
{
  return kNames[static_cast<std::size_t>(id)];
}

std::optional<ProblemId> parse_problem(std::string_view name)
{
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == upper)
      return static_cast<ProblemId>(i);
  return std::nullopt;
}

bool is_dtlz(ProblemId id) noexcept
{
  return id == ProblemId::DTLZ1 || id == ProblemId::DTLZ2 || id == ProblemId::DTLZ3 ||
         id == ProblemId::DTLZ4;
}

bool VariableBounds::contains(std::span<const double> x) const noexcept
{
  if (x.size() != lower.size())
    return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] >= lower[i] && x[i] <= upper[i]))
      return false;
  return true;
}

ProblemSpec ProblemSpec::make(ProblemId id, std::size_t m)
{
  if (m < 2)
    throw ConfigError("problem " + std::string(to_string(id)) + " needs at least 2 objectives");
  ProblemSpec s{id, m, 0, 0, 0, {}};
  if (is_dtlz(id))
  {
    s.k = id == ProblemId::DTLZ1 ? 5 : 10;
    s.n = m + s.k - 1;
    s.bounds.lower.assign(s.n, 0.0);
    s.bounds.upper.assign(s.n, 1.0);
  }
  else
  {
    s.k = m - 1;
    s.l = 10;
    s.n = s.k + s.l;
    s.bounds.lower.assign(s.n, 0.0);
    s.bounds.upper.resize(s.n);
    for (std::size_t i = 0; i < s.n; ++i)
      s.bounds.upper[i] = 2.0 * static_cast<double>(i + 1);
  }
  return s;
}

ObjectiveVector evaluate(const ProblemSpec& spec, std::span<const double> decision)
{
  if (decision.size() != spec.n)
    throw UsageError("evaluate: " + spec.name() + " expects " + std::to_string(spec.n) +
                     " variables, got " + std::to_string(decision.size()));
  if (!spec.bounds.contains(decision))
    throw UsageError("evaluate: decision outside the variable bounds of " + spec.name());
  return is_dtlz(spec.id) ? evaluate_dtlz(spec, decision) : evaluate_wfg(spec, decision);
}

ObjectiveVector analytic_nadir(const ProblemSpec& spec)
{
  ObjectiveVector z(spec.m);
  for (std::size_t i = 0; i < spec.m; ++i)
  {
    if (spec.id == ProblemId::DTLZ1)
      z[i] = 0.5;
    else if (is_dtlz(spec.id))
      z[i] = 1.0;
    else
      z[i] = 2.0 * static_cast<double>(i + 1);
  }
  return z;
}

FrontDescriptor front_descriptor(const ProblemSpec& spec)
{
  FrontKind kind = FrontKind::WfgShape;
  if (spec.id == ProblemId::DTLZ1)
    kind = FrontKind::Simplex;
  else if (is_dtlz(spec.id))
    kind = FrontKind::Hypersphere;
  return {kind, analytic_nadir(spec)};
}

namespace
{

// Pareto-optimal scaled variables y_i = z_i / 2i for a WFG position vector.
std::vector<double> optimal_scaled(const ProblemSpec& spec, std::span<const double> position)
{
  const auto n = spec.n;
  const auto k = spec.k;
  std::vector<double> y(n, 0.35);
  std::copy(position.begin(), position.end(), y.begin());
  if (spec.id == ProblemId::WFG8)
  {
    for (std::size_t i = k; i < n; ++i)
    {
      const double u = std::accumulate(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(i), 0.0) /
                       static_cast<double>(i);
      y[i] = wfg::b_param_inverse(0.35, u);
    }
  }
  else if (spec.id == ProblemId::WFG9)
  {
    for (std::size_t i = n - 1; i-- > k;)
    {
      const double u = std::accumulate(y.begin() + static_cast<std::ptrdiff_t>(i + 1), y.end(), 0.0) /
                       static_cast<double>(n - i - 1);
      y[i] = wfg::b_param_inverse(0.35, u);
    }
  }
  return y;
}

} // namespace

Decision optimal_decision(const ProblemSpec& spec, std::span<const double> position)
{
  const std::size_t npos = is_dtlz(spec.id) ? spec.m - 1 : spec.k;
  if (position.size() != npos)
    throw UsageError("optimal_decision: expected " + std::to_string(npos) + " position values");
  for (const double p : position)
    if (!(p >= 0.0 && p <= 1.0))
      throw UsageError("optimal_decision: position values must lie in [0,1]");

  if (is_dtlz(spec.id))
  {
    Decision x(spec.n, 0.5);
    std::copy(position.begin(), position.end(), x.begin());
    return x;
  }

  const auto n = spec.n;
  const auto y = optimal_scaled(spec, position);
  Decision z(n);
  for (std::size_t i = 0; i < n; ++i)
    z[i] = std::clamp(y[i] * 2.0 * static_cast<double>(i + 1), spec.bounds.lower[i], spec.bounds.upper[i]);
  return z;
}

std::vector<ObjectiveVector> sample_reference_front(const ProblemSpec& spec, std::size_t count,
                                                    RandomSource& rng)
{
  if (count == 0)
    throw UsageError("sample_reference_front: count must be positive");
  std::vector<ObjectiveVector> front;
  front.reserve(count);
  const auto M = spec.m;

  switch (spec.id)
  {
  case ProblemId::DTLZ1:
    while (front.size() < count)
    {
      ObjectiveVector f(M);
      double sum = 0.0;
      for (auto& v : f)
        sum += (v = rng.exponential());
      for (auto& v : f)
        v = 0.5 * v / sum;
      front.push_back(std::move(f));
    }
    return front;
  case ProblemId::DTLZ2:
  case ProblemId::DTLZ3:
  case ProblemId::DTLZ4:
    while (front.size() < count)
    {
      ObjectiveVector f(M);
      double norm2 = 0.0;
      for (auto& v : f)
      {
        v = std::fabs(rng.normal());
        norm2 += v * v;
      }
      if (norm2 < 1e-24)
        continue;
      const double norm = std::sqrt(norm2);
      for (auto& v : f)
        v /= norm;
      front.push_back(std::move(f));
    }
    return front;
  default:
    break;
  }

  std::vector<double> position(spec.k);
  while (front.size() < count)
  {
    for (auto& p : position)
      p = rng.uniform();
    if (spec.id == ProblemId::WFG2 && !wfg2_on_pareto_front(position[0]))
      continue;
    // Evaluating from the exact scaled optimum avoids rounding in z_i / 2i,
    // which WFG1's polynomial bias would amplify off the front.
    front.push_back(evaluate_wfg_scaled(spec, optimal_scaled(spec, position)));
  }
  return front;
}

std::optional<double> front_residual(const ProblemSpec& spec, std::span<const double> f)
{
  if (f.size() != spec.m)
    throw UsageError("front_residual: objective count mismatch");
  double acc = 0.0;
  switch (spec.id)
  {
  case ProblemId::DTLZ1:
    for (const double v : f)
      acc += v;
    return std::fabs(acc - 0.5);
  case ProblemId::DTLZ2:
  case ProblemId::DTLZ3:
  case ProblemId::DTLZ4:
    for (const double v : f)
      acc += v * v;
    return std::fabs(acc - 1.0);
  case ProblemId::WFG1:
  case ProblemId::WFG2:
    return std::nullopt;
  case ProblemId::WFG3:
    for (std::size_t i = 0; i < f.size(); ++i)
      acc += f[i] / (2.0 * static_cast<double>(i + 1));
    return std::fabs(acc - 1.0);
  default:
    for (std::size_t i = 0; i < f.size(); ++i)
    {
      const double s = f[i] / (2.0 * static_cast<double>(i + 1));
      acc += s * s;
    }
    return std::fabs(acc - 1.0);
  }
}

} // namespace sra3
