#ifndef SRA3_INDICATORS_HPP
#define SRA3_INDICATORS_HPP

#include <sra3/core.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace sra3
{

struct EpsParams
{
  /// Scaling factor of the exponential fitness, must be positive.
  double k = 0.025;

  void validate() const;
};

/// Additive epsilon indicator: the smallest eps such that x shifted by eps in
/// every objective weakly dominates y, i.e. max_i (x_i - y_i).
double eps_indicator(std::span<const double> x, std::span<const double> y);

/// Shift-based density distance of x to y: Euclidean norm over the objectives
/// where y is worse than x, of (y_i - x_i).
double sde_distance(std::span<const double> x, std::span<const double> y);

/// Dense n x n table of a pairwise indicator, entry (i, j) = I(p_i, p_j).
/// The diagonal is zero and never read by the fitness functions.
class IndicatorMatrix
{
public:
  explicit IndicatorMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static IndicatorMatrix epsilon(std::span<const ObjectiveVector> points);
  static IndicatorMatrix sde(std::span<const ObjectiveVector> points);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }

  /// max over i != j of |entry|; 0 for fewer than two points.
  double max_abs_off_diagonal() const noexcept;

private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Most negative value reported for an I1 fitness; larger magnitudes are
/// clamped here.
inline constexpr double kFitnessFloor = -1e300;

/// exp(-indicator / divisor) evaluated in extended precision. A divisor of 0
/// stands for the all-identical normalized population and yields 1.
long double eps_contribution(double indicator, double divisor);

struct EpsFitness
{
  /// Extended-precision sums, used for ranking.
  std::vector<long double> wide;
  /// Same values as doubles, clamped at kFitnessFloor.
  std::vector<double> values;
  /// Number of entries that had to be clamped.
  std::size_t clamped = 0;
};

/// I1(x_j) = sum over i != j of -exp(-I(x_i, x_j) / divisor), from a cached
/// epsilon matrix. Larger is better.
EpsFitness eps_fitness(const IndicatorMatrix& eps, double divisor);

/// I1 fitness on raw objectives with exponent scale k.
std::vector<double> fitness_I1(std::span<const ObjectiveVector> pop, const EpsParams& params);

/// I2(x) = (sum over y != x of sde_distance(x, y)) / (2N - 1). Larger is
/// better. The literal 2N - 1 denominator is used whatever |pop| is.
std::vector<double> fitness_I2(std::span<const ObjectiveVector> pop, std::size_t archive_capacity);
std::vector<double> fitness_I2(const IndicatorMatrix& sde, std::size_t archive_capacity);

struct ScaledObjectives
{
  std::vector<ObjectiveVector> points;
  ObjectiveVector lower;
  ObjectiveVector upper;
};

/// Per-objective min-max scaling onto [0,1]. An objective with max == min
/// maps to 0.
ScaledObjectives normalize_objectives(std::span<const ObjectiveVector> pop);

/// max over ordered pairs of distinct members of |eps_indicator|. Requires at
/// least two points.
double max_abs_eps(std::span<const ObjectiveVector> pop);

} // namespace sra3

#endif // SRA3_INDICATORS_HPP
