#include <sra3/engine.hpp>

#include <array>
#include <chrono>
#include <string>

namespace sra3
{

namespace
{

constexpr std::array<std::string_view, 4> kVariantNames = {"none", "eps", "sde", "both"};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_candidates(std::span<const ObjectiveVector> candidates, std::size_t n, const char* who)
{
  if (n == 0)
    throw UsageError(std::string(who) + ": archive capacity must be positive");
  if (candidates.size() < n)
    throw UsageError(std::string(who) + ": fewer candidates than archive slots");
}

Archive gather(std::span<const Individual> candidates, const Selection& sel,
               std::span<const double> fitness)
{
  std::vector<Individual> members;
  members.reserve(sel.survivors.size());
  for (const auto i : sel.survivors)
  {
    members.push_back(candidates[i]);
    members.back().fitness = fitness[i];
  }
  return Archive(sel.survivors.size(), std::move(members));
}

std::vector<Individual> random_population(const ProblemSpec& problem, std::size_t count,
                                          RandomSource& rng)
{
  std::vector<Individual> pop(count);
  for (auto& ind : pop)
  {
    ind.decision.resize(problem.n);
    for (std::size_t i = 0; i < problem.n; ++i)
      ind.decision[i] = rng.uniform(problem.bounds.lower[i], problem.bounds.upper[i]);
    ind.objectives = evaluate(problem, ind.decision);
  }
  return pop;
}

} // namespace

std::string_view to_string(NormalizationVariant v) noexcept
{
  return kVariantNames[static_cast<std::size_t>(v)];
}

std::optional<NormalizationVariant> parse_variant(std::string_view name)
{
  for (std::size_t i = 0; i < kVariantNames.size(); ++i)
    if (kVariantNames[i] == name)
      return static_cast<NormalizationVariant>(i);
  return std::nullopt;
}

bool normalizes_eps(NormalizationVariant v) noexcept
{
  return v == NormalizationVariant::EpsOnly || v == NormalizationVariant::Both;
}

bool normalizes_sde(NormalizationVariant v) noexcept
{
  return v == NormalizationVariant::SdeOnly || v == NormalizationVariant::Both;
}

void Sra3Config::validate() const
{
  if (archive_capacity < 2)
    throw ConfigError("archive capacity must be at least 2");
  if (max_evaluations < 2 * archive_capacity)
    throw ConfigError("evaluation budget " + std::to_string(max_evaluations) +
                      " does not cover the " + std::to_string(2 * archive_capacity) +
                      " initial evaluations");
  eps.validate();
  variation.validate();
}

std::vector<std::size_t> select_ca_ranked(std::span<const long double> fitness, std::size_t n)
{
  return top_n(fitness, n);
}

Selection select_ca(std::span<const ObjectiveVector> candidates, std::size_t n, double k)
{
  require_candidates(candidates, n, "select_ca");
  const auto fit = eps_fitness(IndicatorMatrix::epsilon(candidates), k);
  Selection sel;
  sel.survivors = select_ca_ranked(fit.wide, n);
  sel.clamped = fit.clamped;
  return sel;
}

namespace
{

Selection normalized_ca_impl(std::span<const ObjectiveVector> candidates, std::size_t n, double k,
                             std::vector<double>* final_fitness)
{
  require_candidates(candidates, n, "select_ca_normalized");
  const auto scaled = normalize_objectives(candidates);
  const auto eps = IndicatorMatrix::epsilon(scaled.points);
  const double divisor = eps.max_abs_off_diagonal() * k;
  auto fit = eps_fitness(eps, divisor).wide;

  const auto total = candidates.size();
  std::vector<char> alive(total, 1);
  Selection sel;
  for (std::size_t remaining = total; remaining > n; --remaining)
  {
    // Worst = smallest fitness; among ties the newest (highest index) goes.
    std::size_t worst = total;
    for (std::size_t i = 0; i < total; ++i)
      if (alive[i] && (worst == total || fit[i] <= fit[worst]))
        worst = i;
    alive[worst] = 0;
    ++sel.removals;
    for (std::size_t i = 0; i < total; ++i)
      if (alive[i])
      {
        fit[i] += eps_contribution(eps(worst, i), divisor);
        ++sel.fitness_updates;
      }
  }
  for (std::size_t i = 0; i < total; ++i)
    if (alive[i])
      sel.survivors.push_back(i);
  if (final_fitness)
  {
    final_fitness->resize(total);
    for (std::size_t i = 0; i < total; ++i)
      (*final_fitness)[i] = static_cast<double>(fit[i]);
  }
  return sel;
}

} // namespace

Selection select_ca_normalized(std::span<const ObjectiveVector> candidates, std::size_t n, double k)
{
  return normalized_ca_impl(candidates, n, k, nullptr);
}

Selection select_da(std::span<const ObjectiveVector> candidates, std::size_t n, bool normalize)
{
  require_candidates(candidates, n, "select_da");
  const auto fit = normalize
                     ? fitness_I2(IndicatorMatrix::sde(normalize_objectives(candidates).points), n)
                     : fitness_I2(IndicatorMatrix::sde(candidates), n);
  Selection sel;
  sel.survivors = top_n(std::span<const double>(fit), n);
  return sel;
}

Archive update_ca(std::span<const Individual> candidates, const Sra3Config& config, Selection* trace)
{
  const auto objs = objectives_of(candidates);
  const auto n = config.archive_capacity;
  Selection sel;
  std::vector<double> fitness;
  if (normalizes_eps(config.variant))
  {
    sel = normalized_ca_impl(objs, n, config.eps.k, &fitness);
  }
  else
  {
    require_candidates(objs, n, "update_ca");
    const auto fit = eps_fitness(IndicatorMatrix::epsilon(objs), config.eps.k);
    sel.survivors = select_ca_ranked(fit.wide, n);
    sel.clamped = fit.clamped;
    fitness = fit.values;
  }
  if (trace)
    *trace = sel;
  return gather(candidates, sel, fitness);
}

Archive update_da(std::span<const Individual> candidates, const Sra3Config& config, Selection* trace)
{
  const auto objs = objectives_of(candidates);
  const auto n = config.archive_capacity;
  require_candidates(objs, n, "update_da");
  const bool normalize = normalizes_sde(config.variant);
  const auto fit = normalize ? fitness_I2(IndicatorMatrix::sde(normalize_objectives(objs).points), n)
                             : fitness_I2(IndicatorMatrix::sde(objs), n);
  Selection sel;
  sel.survivors = top_n(std::span<const double>(fit), n);
  if (trace)
    *trace = sel;
  return gather(candidates, sel, fit);
}

double ParentSelectionStats::parent2_ca_probability() const noexcept
{
  const double total = rho_c + rho_d;
  return total > 0.0 ? rho_c / total : 0.5;
}

ParentSelectionStats parent_selection_stats(const Archive& ca, const Archive& da)
{
  if (ca.empty() || da.empty())
    throw UsageError("parent_selection_stats: archives must not be empty");
  const auto ca_objs = objectives_of(ca.members());
  const auto da_objs = objectives_of(da.members());

  ParentSelectionStats st;
  st.p_c = static_cast<double>(nondominated_indices(ca_objs).size()) / static_cast<double>(ca.size());
  st.p_d = static_cast<double>(nondominated_indices(da_objs).size()) / static_cast<double>(da.size());

  std::vector<ObjectiveVector> joint = ca_objs;
  joint.insert(joint.end(), da_objs.begin(), da_objs.end());
  const auto nd = nondominated_indices(joint);
  std::size_t from_ca = 0;
  for (const auto i : nd)
    if (i < ca.size())
      ++from_ca;
  if (!nd.empty())
  {
    st.rho_c = static_cast<double>(from_ca) / static_cast<double>(nd.size());
    st.rho_d = static_cast<double>(nd.size() - from_ca) / static_cast<double>(nd.size());
  }
  return st;
}

std::vector<Individual> generate_offspring(const Archive& ca, const Archive& da,
                                           const VariableBounds& bounds,
                                           const VariationParams& params, RandomSource& rng)
{
  const auto st = parent_selection_stats(ca, da);
  const bool first_from_ca = st.parent1_from_ca();
  const double second_ca = st.parent2_ca_probability();

  std::vector<Individual> offspring;
  offspring.reserve(ca.size());
  for (std::size_t i = 0; i < ca.size(); ++i)
  {
    const Archive& first = first_from_ca ? ca : da;
    const Individual& p1 = first[rng.below(first.size())];
    const Archive& second = rng.uniform() < second_ca ? ca : da;
    const Individual& p2 = second[rng.below(second.size())];

    auto children = sbx_crossover(p1.decision, p2.decision, params, bounds, rng);
    Individual child;
    child.decision = polynomial_mutation(children.first, params, bounds, rng);
    offspring.push_back(std::move(child));
  }
  return offspring;
}

Sra3Result run(const ProblemSpec& problem, const Sra3Config& config, const GenerationObserver& observer)
{
  config.validate();
  const auto n = config.archive_capacity;
  RandomSource rng(config.seed);

  Archive ca(n, random_population(problem, n, rng));
  Archive da(n, random_population(problem, n, rng));

  Sra3Result result;
  result.evaluations = 2 * n;
  if (observer)
    observer(GenerationSnapshot{0, result.evaluations, ca, da});

  while (result.evaluations + n <= config.max_evaluations)
  {
    auto start = Clock::now();
    auto offspring = generate_offspring(ca, da, problem.bounds, config.variation, rng);
    for (auto& child : offspring)
      child.objectives = evaluate(problem, child.decision);
    result.evaluations += offspring.size();
    result.timings.offspring += seconds_since(start);

    start = Clock::now();
    std::vector<Individual> h1(ca.begin(), ca.end());
    h1.insert(h1.end(), offspring.begin(), offspring.end());
    Selection trace;
    ca = update_ca(h1, config, &trace);
    result.fitness_clamps += trace.clamped;
    result.timings.update_ca += seconds_since(start);

    start = Clock::now();
    std::vector<Individual> h2(da.begin(), da.end());
    h2.insert(h2.end(), offspring.begin(), offspring.end());
    da = update_da(h2, config);
    result.timings.update_da += seconds_since(start);

    ++result.generations;
    if (observer)
      observer(GenerationSnapshot{result.generations, result.evaluations, ca, da});
  }

  result.front = nondominated_subset(ca.members());
  return result;
}

} // namespace sra3
