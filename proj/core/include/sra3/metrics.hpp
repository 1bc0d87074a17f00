#ifndef SRA3_METRICS_HPP
#define SRA3_METRICS_HPP

#include <sra3/core.hpp>
#include <sra3/problems.hpp>

#include <cstddef>
#include <cstdint>
#include <span>

namespace sra3
{

struct MetricConfig
{
  /// Hypervolume reference point in normalized space; empty means (1, ..., 1).
  ObjectiveVector hv_reference;
  /// Objectives are divided by this multiple of the analytic nadir.
  double hv_nadir_scale = 1.1;
  /// Monte Carlo sample count used above three objectives.
  std::size_t hv_mc_samples = 1'000'000;
  std::uint64_t hv_mc_seed = 0x243f6a8885a308d3ULL;
  /// Exact computation up to this many objectives.
  std::size_t hv_exact_max_objectives = 3;
  /// Reference front size for IGD.
  std::size_t igd_reference_size = 10'000;
  std::uint64_t igd_reference_seed = 0x13198a2e03707344ULL;
  /// Worker threads for Monte Carlo chunks; 0 picks the hardware count. The
  /// estimate does not depend on it.
  std::size_t threads = 1;

  void validate() const;
};

/// Exact hypervolume by recursive slicing along the last objective. Points
/// that do not strictly dominate `reference` contribute nothing.
double hypervolume_exact(std::span<const ObjectiveVector> points, std::span<const double> reference);

/// Monte Carlo estimate: uniform samples in [component-wise min of the
/// contributing points, reference], counted when weakly dominated by some
/// point. Samples are drawn in fixed-size chunks, each from its own stream
/// derived from `seed`, so the estimate is independent of `threads`.
double hypervolume_monte_carlo(std::span<const ObjectiveVector> points,
                               std::span<const double> reference, std::size_t samples,
                               std::uint64_t seed, std::size_t threads = 1);

/// Exact up to cfg.hv_exact_max_objectives objectives, Monte Carlo above.
/// Empty input gives 0.
double hypervolume(std::span<const ObjectiveVector> points, std::span<const double> reference,
                   const MetricConfig& cfg);

/// Points divided by hv_nadir_scale * analytic nadir, then the hypervolume
/// against the normalized reference point. In [0, 1] for the default
/// reference.
double normalized_hv(std::span<const ObjectiveVector> points, const ProblemSpec& problem,
                     const MetricConfig& cfg);

/// Mean over r in R of the distance to the nearest p in P, after scaling both
/// sets by the per-objective bounds of R. Throws UsageError for empty sets.
double igd(std::span<const ObjectiveVector> points, std::span<const ObjectiveVector> reference);

} // namespace sra3

#endif // SRA3_METRICS_HPP
