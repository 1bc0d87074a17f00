#ifndef SRA3_ANALYSIS_HPP
#define SRA3_ANALYSIS_HPP

#include <sra3/core.hpp>
#include <sra3/random.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace sra3
{

// --- Wilcoxon rank-sum ---------------------------------------------------

enum class Outcome
{
  Win,  // first sample significantly larger
  Tie,
  Loss, // first sample significantly smaller
};

/// "+", "=", "\u2212" (minus sign), as in published comparison tables.
std::string_view symbol(Outcome o) noexcept;

struct ComparisonVerdict
{
  /// Mann-Whitney U of the first sample (its rank sum minus n1(n1+1)/2),
  /// with midranks for ties.
  double statistic = 0.0;
  double p_value = 1.0;
  Outcome outcome = Outcome::Tie;
};

/// Two-sided Wilcoxon rank-sum test. Exact permutation distribution of the
/// midrank sum when both samples have fewer than 10 values; otherwise the
/// normal approximation with tie-corrected variance and continuity
/// correction. The outcome is Win/Loss by the direction of the median
/// difference when p < alpha. Throws UsageError for samples with fewer than
/// two values.
ComparisonVerdict wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                    double alpha = 0.05);

double median(std::vector<double> values);

// --- Indicator bias study --------------------------------------------------

enum class ShapeKind
{
  Concave,
  Convex,
  Linear,
};

std::string_view to_string(ShapeKind s) noexcept;
std::optional<ShapeKind> parse_shape(std::string_view name);

/// Two-objective front parameterized by t in [0,1], running from (0, s2) at
/// t = 0 to (s1, 0) at t = 1.
///   linear:  (t, 1 - t)
///   concave: (sin(t pi/2), cos(t pi/2))                 f1^2 + f2^2 = 1
///   convex:  (1 - cos(t pi/2), 1 - sin(t pi/2))         (1-f1)^2 + (1-f2)^2 = 1
/// each component multiplied by its scale.
struct FrontShape
{
  ShapeKind kind = ShapeKind::Linear;
  std::array<double, 2> scale{1.0, 1.0};

  ObjectiveVector at(double t) const;
};

struct FrontSample
{
  double t;
  ObjectiveVector point;
};

/// n points with t drawn uniformly from [0,1], sorted by t.
std::vector<FrontSample> sample_similar_front(const FrontShape& shape, std::size_t n, RandomSource& rng);

/// n points at t = i / (n - 1).
std::vector<FrontSample> grid_similar_front(const FrontShape& shape, std::size_t n);

struct ProfileEntry
{
  double t;
  ObjectiveVector point;
  double mean_eps;
};

/// For each x, the mean over the other points y of I_eps(y, x), the amount
/// by which the others must be shifted to dominate x (the quantity that
/// enters x's I1 fitness). With `normalized`, objectives are min-max scaled
/// first. Output sorted by t.
std::vector<ProfileEntry> mean_eps_profile(std::span<const FrontSample> points, bool normalized);

/// Index of the largest mean_eps (first on ties).
std::size_t profile_argmax(std::span<const ProfileEntry> profile);

} // namespace sra3

#endif // SRA3_ANALYSIS_HPP
