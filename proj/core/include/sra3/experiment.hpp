#ifndef SRA3_EXPERIMENT_HPP
#define SRA3_EXPERIMENT_HPP

#include <sra3/analysis.hpp>
#include <sra3/engine.hpp>
#include <sra3/metrics.hpp>
#include <sra3/problems.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sra3
{

// --- Configuration -----------------------------------------------------------

struct ProblemCell
{
  ProblemId id;
  std::size_t m;

  bool operator==(const ProblemCell&) const = default;
};

/// Archive size used for m objectives when no override is given:
/// 5 -> 210, 10 -> 275, 15/20/25 -> 135.
std::optional<std::size_t> default_archive_size(std::size_t m);

struct ExperimentConfig
{
  std::vector<ProblemCell> problems;
  std::vector<NormalizationVariant> variants{NormalizationVariant::None};
  /// Replaces the per-m default for every cell when set.
  std::optional<std::size_t> archive_size;
  std::size_t max_evaluations = 90'000;
  std::size_t runs = 20;
  /// Run i uses base_seed + i.
  std::uint64_t base_seed = 1;
  EpsParams eps;
  VariationParams variation;
  MetricConfig metrics;
  /// Result files go here; empty means nothing is written.
  std::filesystem::path output_dir;
  /// Upper bound on concurrently executing runs.
  std::size_t jobs = 1;

  /// Throws ConfigError when m has no default size and no override is set.
  std::size_t archive_size_for(std::size_t m) const;
  /// Checks every cell before anything runs. Throws ConfigError.
  void validate() const;
};

// --- Run records -------------------------------------------------------------

struct RunResult
{
  std::string problem;
  std::size_t m = 0;
  NormalizationVariant variant = NormalizationVariant::None;
  std::size_t run_index = 0;
  std::uint64_t seed = 0;
  std::size_t archive_size = 0;
  std::size_t max_evaluations = 0;
  std::size_t evaluations = 0;
  std::size_t generations = 0;
  std::size_t fitness_clamps = 0;
  double eps_k = 0.0;
  double p_crossover = 0.0;
  double p_mutation = 0.0; // resolved per-variable probability
  double eta_c = 0.0;
  double eta_m = 0.0;
  double hv = 0.0;
  double igd = 0.0;
  std::size_t hv_mc_samples = 0;
  std::uint64_t hv_mc_seed = 0;
  std::size_t igd_reference_size = 0;
  /// Objective vectors of the final non-dominated set.
  std::vector<ObjectiveVector> front;
  /// Wall-clock seconds. Persisted in a separate file so that the record
  /// itself is reproducible byte for byte.
  PhaseTimings timings;

  bool operator==(const RunResult&) const = default;
};

/// File stem for a run: "<problem>_m<m>_<variant>_r<run_index>".
std::string run_stem(const RunResult& r);

/// JSON record without timings; keys in a fixed order.
std::string serialize_record(const RunResult& r);
/// JSON object with the four phase timings.
std::string serialize_timings(const PhaseTimings& t);
/// Inverse of serialize_record; timings are taken from `timings_json` when
/// given. Throws UsageError on malformed input.
RunResult parse_record(std::string_view record_json, std::string_view timings_json = {});

/// "f1,...,fm" header then one row per vector, 17 significant digits.
std::string objectives_csv(std::span<const ObjectiveVector> rows, std::string_view comment = {});
/// Reads objectives_csv output; lines starting with '#' and the header are
/// skipped. Throws UsageError on ragged or non-numeric rows.
std::vector<ObjectiveVector> parse_objectives_csv(std::string_view text);

/// Writes to a temporary sibling then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

// --- Running -----------------------------------------------------------------

using RunCallback = std::function<void(const RunResult&)>;

/// Executes runs x problems x variants independent runs. Results come back
/// ordered by problem, then variant, then run index, whatever `jobs` is.
/// With an output directory, each run writes <stem>.json, <stem>_front.csv
/// and <stem>_timing.json. `on_finish` is called (serialized) as each run
/// completes.
std::vector<RunResult> run_experiment(const ExperimentConfig& config, const RunCallback& on_finish = {});

/// One run; the reference front is used for IGD.
RunResult run_single(const ProblemSpec& spec, NormalizationVariant variant, std::size_t run_index,
                     const ExperimentConfig& config, std::span<const ObjectiveVector> reference);

/// The IGD reference front for a problem under `metrics`.
std::vector<ObjectiveVector> reference_front(const ProblemSpec& spec, const MetricConfig& metrics);

/// Every "*.json" record under `dir` except timing files, with timings
/// attached when present, sorted by problem, m, variant, run index.
std::vector<RunResult> load_results(const std::filesystem::path& dir);

// --- Summary -----------------------------------------------------------------

struct CellSummary
{
  std::string problem;
  std::size_t m = 0;
  NormalizationVariant variant = NormalizationVariant::None;
  std::size_t runs = 0;
  double hv_mean = 0.0;
  double hv_std = 0.0; // sample standard deviation, 0 for a single run
  double igd_mean = 0.0;
  double igd_std = 0.0;
  bool best_hv = false;  // highest mean HV among variants of this problem
  bool best_igd = false; // lowest mean IGD among variants of this problem
};

/// Variant `a` against variant `b` on one problem. Outcomes are from a's
/// point of view: Win means a is better (larger HV, smaller IGD).
struct PairVerdict
{
  std::string problem;
  std::size_t m = 0;
  NormalizationVariant a = NormalizationVariant::None;
  NormalizationVariant b = NormalizationVariant::None;
  ComparisonVerdict hv;
  ComparisonVerdict igd;
  Outcome hv_outcome = Outcome::Tie;
  Outcome igd_outcome = Outcome::Tie;
};

struct Summary
{
  std::vector<CellSummary> cells;
  std::vector<PairVerdict> verdicts;
};

/// Per (problem, m, variant) means and deviations, and a rank-sum verdict for
/// every pair of variants on the same problem. Throws UsageError for empty
/// input or when a compared cell has fewer than two runs.
Summary summarize(std::span<const RunResult> results, double alpha = 0.05);

std::string summary_csv(const Summary& s);
std::string verdicts_csv(const Summary& s);
/// Fixed-width text table; best cells marked with '*'.
std::string summary_table(const Summary& s);

// --- Bias study --------------------------------------------------------------

struct BiasOptions
{
  FrontShape shape;
  std::size_t points = 1000;
  bool normalized = true;
  /// Evenly spaced parameters instead of uniform draws.
  bool grid = false;
  std::uint64_t seed = 1;
};

std::vector<ProfileEntry> bias_profile(const BiasOptions& options);
/// Columns t,f1,f2,mean_eps.
std::string profile_csv(std::span<const ProfileEntry> profile);
/// Computes the profile and, when `out` is non-empty, writes its CSV.
std::vector<ProfileEntry> bias_study(const BiasOptions& options, const std::filesystem::path& out);

} // namespace sra3

#endif // SRA3_EXPERIMENT_HPP
