#include <sra3/core.hpp>
#include <sra3/random.hpp>

#include <cmath>

namespace sra3
{

namespace
{
__extension__ typedef unsigned __int128 uint128;
}

std::uint64_t mix_seed(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double RandomSource::uniform()
{
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi)
{
  return lo + (hi - lo) * uniform();
}

std::uint64_t RandomSource::below(std::uint64_t n)
{
  if (n == 0)
    throw UsageError("RandomSource::below: n must be positive");
  // Lemire's multiply-shift with rejection; unbiased.
  auto x = engine_();
  auto m = static_cast<uint128>(x) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n)
  {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold)
    {
      x = engine_();
      m = static_cast<uint128>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double RandomSource::normal()
{
  if (has_spare_)
  {
    has_spare_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do
  {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * f;
  has_spare_ = true;
  return u * f;
}

double RandomSource::exponential()
{
  // 1 - U lies in (0, 1], so the log is finite.
  return -std::log(1.0 - uniform());
}

RandomSource RandomSource::derive(std::uint64_t stream) const
{
  return RandomSource(mix_seed(seed_ ^ mix_seed(stream + 0x632be59bd9b4e019ULL)));
}

} // namespace sra3
