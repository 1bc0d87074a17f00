#ifndef SRA3_PROBLEMS_HPP
#define SRA3_PROBLEMS_HPP

#include <sra3/core.hpp>
#include <sra3/random.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sra3
{

enum class ProblemId
{
  DTLZ1,
  DTLZ2,
  DTLZ3,
  DTLZ4,
  WFG1,
  WFG2,
  WFG3,
  WFG4,
  WFG5,
  WFG6,
  WFG7,
  WFG8,
  WFG9,
};

std::string_view to_string(ProblemId id) noexcept;
/// Case-insensitive ("dtlz2", "WFG4").
std::optional<ProblemId> parse_problem(std::string_view name);
bool is_dtlz(ProblemId id) noexcept;

struct VariableBounds
{
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t size() const noexcept { return lower.size(); }
  bool contains(std::span<const double> x) const noexcept;
};

/// A benchmark instance. DTLZ: n = m + k - 1, k = 5 (DTLZ1) or 10.
/// WFG: k = m - 1 position and l = 10 distance variables, variable i in [0, 2i].
struct ProblemSpec
{
  ProblemId id;
  std::size_t m;
  std::size_t n;
  std::size_t k;
  std::size_t l; // 0 for DTLZ
  VariableBounds bounds;

  /// Standard configuration for `id` with `m` objectives. Throws ConfigError
  /// for m < 2.
  static ProblemSpec make(ProblemId id, std::size_t m);

  std::string name() const { return std::string(to_string(id)); }
};

enum class FrontKind
{
  Simplex,     // DTLZ1: sum f = 0.5
  Hypersphere, // DTLZ2-4: sum f^2 = 1
  WfgShape,    // WFG1-9: shape functions scaled by 2i
};

struct FrontDescriptor
{
  FrontKind kind;
  ObjectiveVector nadir;
};

/// Objective values of `decision`. Pure; throws UsageError for a wrong length
/// or a value outside the variable bounds.
ObjectiveVector evaluate(const ProblemSpec& spec, std::span<const double> decision);

/// DTLZ1 -> 0.5 everywhere, DTLZ2-4 -> 1, WFG -> (2, 4, ..., 2m).
ObjectiveVector analytic_nadir(const ProblemSpec& spec);

FrontDescriptor front_descriptor(const ProblemSpec& spec);

/// Decision vector on the Pareto set whose position variables take the given
/// values in [0,1] (m-1 values for DTLZ, k for WFG); distance variables are
/// set to their optimum.
Decision optimal_decision(const ProblemSpec& spec, std::span<const double> position);

/// `count` points on the true front. DTLZ1: uniform on the simplex; DTLZ2-4:
/// normalized positive-orthant Gaussian directions; WFG: uniform position
/// variables with optimal distance variables, evaluated. WFG2 samples on the
/// dominated parts of its disconnected surface are rejected.
std::vector<ObjectiveVector> sample_reference_front(const ProblemSpec& spec, std::size_t count,
                                                    RandomSource& rng);

/// Distance-like residual of `f` from the front's defining equation, or
/// nullopt where the front has no closed form (WFG1, WFG2).
std::optional<double> front_residual(const ProblemSpec& spec, std::span<const double> f);

} // namespace sra3

#endif // SRA3_PROBLEMS_HPP
