#ifndef SRA3_VARIATION_HPP
#define SRA3_VARIATION_HPP

#include <sra3/core.hpp>
#include <sra3/problems.hpp>
#include <sra3/random.hpp>

#include <optional>
#include <span>
#include <utility>

namespace sra3
{

/// Real-coded reproduction parameters. p_mutation defaults to 1/n when unset.
struct VariationParams
{
  double p_crossover = 1.0;
  std::optional<double> p_mutation;
  double eta_c = 20.0;
  double eta_m = 20.0;

  double mutation_probability(std::size_t n) const;
  /// Throws ConfigError for probabilities outside [0,1] or non-positive indices.
  void validate() const;
};

/// SBX spread factor for a uniform draw u in [0,1):
/// (2u)^(1/(eta+1)) for u <= 0.5, (1/(2(1-u)))^(1/(eta+1)) otherwise.
double sbx_spread_factor(double u, double eta_c);

/// The two SBX children of (x1, x2) for spread factor beta; their mean equals
/// the parents' mean.
std::pair<double, double> sbx_children(double x1, double x2, double beta);

/// Bounded polynomial-mutation value of x in [lo, hi] for draw u, clipped.
double polynomial_mutate_value(double x, double lo, double hi, double u, double eta_m);

/// Simulated binary crossover. With probability p_crossover the pair is
/// recombined; then each variable is crossed with probability 0.5 using one
/// uniform draw, and the children's values are exchanged with probability 0.5.
/// Children are clipped to the bounds.
std::pair<Decision, Decision> sbx_crossover(std::span<const double> p1, std::span<const double> p2,
                                            const VariationParams& params,
                                            const VariableBounds& bounds, RandomSource& rng);

/// Polynomial mutation, each variable independently with the mutation
/// probability.
Decision polynomial_mutation(std::span<const double> x, const VariationParams& params,
                             const VariableBounds& bounds, RandomSource& rng);

} // namespace sra3

#endif // SRA3_VARIATION_HPP
