#ifndef SRA3_CORE_HPP
#define SRA3_CORE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sra3
{

/// Raised when an operation is called outside its preconditions
/// (length mismatch, empty input where one is required, bad bounds).
class UsageError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for invalid experiment or run configurations.
class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Point in objective space. All objectives are minimized.
using ObjectiveVector = std::vector<double>;

/// Decision vector in the problem's variable space.
using Decision = std::vector<double>;

struct Individual
{
  Decision decision;
  ObjectiveVector objectives;
  /// Cached I1 or I2 value from the last archive update.
  std::optional<double> fitness;
};

/// Throws UsageError unless every entry of `v` is finite.
void require_finite(std::span<const double> v, const char* what);

/// Pareto dominance for minimization: a is no worse everywhere and strictly
/// better somewhere. Throws UsageError on a length mismatch.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Indices of the members not dominated by any other member, in input order.
/// Duplicated vectors do not dominate each other, so all copies survive.
std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> points);

std::vector<ObjectiveVector> nondominated_subset(std::span<const ObjectiveVector> points);
std::vector<Individual> nondominated_subset(std::span<const Individual> population);

/// Projects a population onto its objective vectors.
std::vector<ObjectiveVector> objectives_of(std::span<const Individual> population);

/// Fixed-capacity population used for the convergence and diversity archives.
/// The member count always equals the capacity.
class Archive
{
public:
  Archive(std::size_t capacity, std::vector<Individual> members);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  const std::vector<Individual>& members() const noexcept { return members_; }
  const Individual& operator[](std::size_t i) const { return members_[i]; }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

private:
  std::size_t capacity_;
  std::vector<Individual> members_;
};

} // namespace sra3

#endif // SRA3_CORE_HPP
