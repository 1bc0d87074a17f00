#ifndef SRA3_RANDOM_HPP
#define SRA3_RANDOM_HPP

#include <cstdint>
#include <random>

namespace sra3
{

/// Seeded pseudo-random stream. Identical seeds and identical call sequences
/// give identical outputs on every platform: the engine is mt19937_64 (fully
/// specified by the standard) and all derived draws are computed here rather
/// than through the implementation-defined std distributions.
///
/// Single owner; never share one instance between threads.
class RandomSource
{
public:
  explicit RandomSource(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform();
  double uniform(double lo, double hi);

  /// Uniform integer in [0, n). Requires n > 0.
  std::uint64_t below(std::uint64_t n);

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard normal (Marsaglia polar method).
  double normal();

  /// Exponential with unit rate.
  double exponential();

  /// Independent stream derived from this source's seed and `stream`; does not
  /// consume draws from this source.
  RandomSource derive(std::uint64_t stream) const;

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer, used to decorrelate derived seeds.
std::uint64_t mix_seed(std::uint64_t x) noexcept;

} // namespace sra3

#endif // SRA3_RANDOM_HPP
