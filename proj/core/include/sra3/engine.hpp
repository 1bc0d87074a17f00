#ifndef SRA3_ENGINE_HPP
#define SRA3_ENGINE_HPP

#include <sra3/core.hpp>
#include <sra3/indicators.hpp>
#include <sra3/problems.hpp>
#include <sra3/random.hpp>
#include <sra3/variation.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace sra3
{

/// Which indicator works on min-max scaled objectives.
enum class NormalizationVariant
{
  None,
  EpsOnly,
  SdeOnly,
  Both,
};

/// "none", "eps", "sde", "both".
std::string_view to_string(NormalizationVariant v) noexcept;
std::optional<NormalizationVariant> parse_variant(std::string_view name);
bool normalizes_eps(NormalizationVariant v) noexcept;
bool normalizes_sde(NormalizationVariant v) noexcept;

struct Sra3Config
{
  std::size_t archive_capacity = 0;
  std::size_t max_evaluations = 90000;
  EpsParams eps;
  VariationParams variation;
  NormalizationVariant variant = NormalizationVariant::None;
  std::uint64_t seed = 0;

  /// Throws ConfigError unless N >= 2 and the budget covers the 2N initial
  /// evaluations.
  void validate() const;
};

/// Outcome of one environmental selection.
struct Selection
{
  /// Indices into the candidate population, in ascending order.
  std::vector<std::size_t> survivors;
  /// Individuals removed one at a time (normalized CA update only).
  std::size_t removals = 0;
  /// Fitness values repaired after removals (normalized CA update only).
  std::size_t fitness_updates = 0;
  /// I1 values clamped at kFitnessFloor.
  std::size_t clamped = 0;
};

/// Indices of the `n` largest scores; ties keep the lower index. Result is
/// sorted ascending. Expected O(|scores| + n log n).
template <typename T>
std::vector<std::size_t> top_n(std::span<const T> scores, std::size_t n)
{
  if (n > scores.size())
    throw UsageError("top_n: asked for more survivors than candidates");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // (score descending, index ascending) is a strict total order, so the
  // selected set equals the first n of a stable descending sort.
  std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b] || (scores[a] == scores[b] && a < b);
                   });
  order.resize(n);
  std::sort(order.begin(), order.end());
  return order;
}

/// Unnormalized convergence-archive selection: top N by I1 with factor k.
Selection select_ca(std::span<const ObjectiveVector> candidates, std::size_t n, double k);

/// Same rank-select, given precomputed I1 values. This is the part of the
/// update whose cost is O(N log N).
std::vector<std::size_t> select_ca_ranked(std::span<const long double> fitness, std::size_t n);

/// Normalized convergence-archive selection: objectives scaled to [0,1],
/// exponent divided by c * k with c the largest |eps|, then the worst
/// individual is removed and the survivors' fitness repaired until n remain.
Selection select_ca_normalized(std::span<const ObjectiveVector> candidates, std::size_t n, double k);

/// Diversity-archive selection: top N by I2 (denominator 2N - 1), optionally
/// on min-max scaled objectives.
Selection select_da(std::span<const ObjectiveVector> candidates, std::size_t n, bool normalize);

/// Archive updates over the union of an archive and the offspring
/// (|candidates| = 2N). Survivors carry their raw objectives and the fitness
/// value that selected them.
Archive update_ca(std::span<const Individual> candidates, const Sra3Config& config,
                  Selection* trace = nullptr);
Archive update_da(std::span<const Individual> candidates, const Sra3Config& config,
                  Selection* trace = nullptr);

struct ParentSelectionStats
{
  double p_c = 0.0;   // share of CA that is non-dominated within CA
  double p_d = 0.0;   // share of DA that is non-dominated within DA
  double rho_c = 0.0; // share of nondom(CA + DA) contributed by CA members
  double rho_d = 0.0;

  bool parent1_from_ca() const noexcept { return p_c > p_d; }
  /// Probability of drawing the second parent from CA.
  double parent2_ca_probability() const noexcept;
};

ParentSelectionStats parent_selection_stats(const Archive& ca, const Archive& da);

/// N unevaluated offspring: parent 1 uniformly from CA if p_c > p_d else DA,
/// parent 2 from CA with probability rho_c / (rho_c + rho_d); the first SBX
/// child of the pair is mutated and kept.
std::vector<Individual> generate_offspring(const Archive& ca, const Archive& da,
                                           const VariableBounds& bounds,
                                           const VariationParams& params, RandomSource& rng);

struct PhaseTimings
{
  double offspring = 0.0; // seconds, includes evaluation
  double update_ca = 0.0;
  double update_da = 0.0;
  double metrics = 0.0;

  bool operator==(const PhaseTimings&) const = default;
};

/// State after each generation, for observers.
struct GenerationSnapshot
{
  std::size_t generation;
  std::size_t evaluations;
  const Archive& ca;
  const Archive& da;
};

struct Sra3Result
{
  /// Non-dominated members of the final convergence archive.
  std::vector<Individual> front;
  std::size_t evaluations = 0;
  std::size_t generations = 0;
  std::size_t fitness_clamps = 0;
  PhaseTimings timings;
};

using GenerationObserver = std::function<void(const GenerationSnapshot&)>;

/// Runs SRA3 on `problem` until another generation would exceed the
/// evaluation budget. The result is a pure function of (problem, config),
/// timings aside.
Sra3Result run(const ProblemSpec& problem, const Sra3Config& config,
               const GenerationObserver& observer = {});

} // namespace sra3

#endif // SRA3_ENGINE_HPP
