#include <sra3/experiment.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

namespace sra3
{

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace
{

using Clock = std::chrono::steady_clock;

std::string format_double(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int problem_order(const std::string& name)
{
  const auto id = parse_problem(name);
  return id ? static_cast<int>(*id) : 1 << 20;
}

auto record_key(const RunResult& r)
{
  return std::make_tuple(problem_order(r.problem), r.problem, r.m, static_cast<int>(r.variant), r.run_index);
}

template <typename T>
T field(const Json& j, const char* key)
{
  if (!j.contains(key))
    throw UsageError(std::string("run record is missing \"") + key + "\"");
  return j.at(key).get<T>();
}

} // namespace

// --- Configuration -----------------------------------------------------------

std::optional<std::size_t> default_archive_size(std::size_t m)
{
  switch (m)
  {
  case 5:
    return 210;
  case 10:
    return 275;
  case 15:
  case 20:
  case 25:
    return 135;
  default:
    return std::nullopt;
  }
}

std::size_t ExperimentConfig::archive_size_for(std::size_t m) const
{
  if (archive_size)
    return *archive_size;
  if (const auto n = default_archive_size(m))
    return *n;
  throw ConfigError("no default archive size for " + std::to_string(m) +
                    " objectives; set one explicitly");
}

void ExperimentConfig::validate() const
{
  if (problems.empty())
    throw ConfigError("no problems configured");
  if (variants.empty())
    throw ConfigError("no normalization variants configured");
  if (runs < 1)
    throw ConfigError("runs must be at least 1");
  if (jobs < 1)
    throw ConfigError("jobs must be at least 1");
  metrics.validate();
  for (const auto& cell : problems)
  {
    const auto spec = ProblemSpec::make(cell.id, cell.m);
    Sra3Config sc;
    sc.archive_capacity = archive_size_for(cell.m);
    sc.max_evaluations = max_evaluations;
    sc.eps = eps;
    sc.variation = variation;
    sc.validate();
    if (!metrics.hv_reference.empty() && metrics.hv_reference.size() != spec.m)
      throw ConfigError("hypervolume reference point does not match " + spec.name() + " with " +
                        std::to_string(spec.m) + " objectives");
  }
}

// --- Run records -------------------------------------------------------------

std::string run_stem(const RunResult& r)
{
  return r.problem + "_m" + std::to_string(r.m) + "_" + std::string(to_string(r.variant)) + "_r" +
         std::to_string(r.run_index);
}

std::string serialize_record(const RunResult& r)
{
  Json j;
  j["format"] = "sra3-run-1";
  j["problem"] = r.problem;
  j["objectives"] = r.m;
  j["variant"] = std::string(to_string(r.variant));
  j["run_index"] = r.run_index;
  j["seed"] = r.seed;
  j["archive_size"] = r.archive_size;
  j["max_evaluations"] = r.max_evaluations;
  j["evaluations"] = r.evaluations;
  j["generations"] = r.generations;
  j["fitness_clamps"] = r.fitness_clamps;
  j["eps_k"] = r.eps_k;
  j["p_crossover"] = r.p_crossover;
  j["p_mutation"] = r.p_mutation;
  j["eta_c"] = r.eta_c;
  j["eta_m"] = r.eta_m;
  j["hv"] = r.hv;
  j["igd"] = r.igd;
  j["hv_mc_samples"] = r.hv_mc_samples;
  j["hv_mc_seed"] = r.hv_mc_seed;
  j["igd_reference_size"] = r.igd_reference_size;
  j["front"] = r.front;
  return j.dump(2) + "\n";
}

std::string serialize_timings(const PhaseTimings& t)
{
  Json j;
  j["offspring_seconds"] = t.offspring;
  j["update_ca_seconds"] = t.update_ca;
  j["update_da_seconds"] = t.update_da;
  j["metrics_seconds"] = t.metrics;
  return j.dump(2) + "\n";
}

RunResult parse_record(std::string_view record_json, std::string_view timings_json)
{
  try
  {
    const auto j = Json::parse(record_json);
    if (!j.is_object() || j.value("format", "") != "sra3-run-1")
      throw UsageError("not an sra3 run record");
    RunResult r;
    r.problem = field<std::string>(j, "problem");
    r.m = field<std::size_t>(j, "objectives");
    const auto variant = parse_variant(field<std::string>(j, "variant"));
    if (!variant)
      throw UsageError("run record has an unknown variant");
    r.variant = *variant;
    r.run_index = field<std::size_t>(j, "run_index");
    r.seed = field<std::uint64_t>(j, "seed");
    r.archive_size = field<std::size_t>(j, "archive_size");
    r.max_evaluations = field<std::size_t>(j, "max_evaluations");
    r.evaluations = field<std::size_t>(j, "evaluations");
    r.generations = field<std::size_t>(j, "generations");
    r.fitness_clamps = field<std::size_t>(j, "fitness_clamps");
    r.eps_k = field<double>(j, "eps_k");
    r.p_crossover = field<double>(j, "p_crossover");
    r.p_mutation = field<double>(j, "p_mutation");
    r.eta_c = field<double>(j, "eta_c");
    r.eta_m = field<double>(j, "eta_m");
    r.hv = field<double>(j, "hv");
    r.igd = field<double>(j, "igd");
    r.hv_mc_samples = field<std::size_t>(j, "hv_mc_samples");
    r.hv_mc_seed = field<std::uint64_t>(j, "hv_mc_seed");
    r.igd_reference_size = field<std::size_t>(j, "igd_reference_size");
    r.front = field<std::vector<ObjectiveVector>>(j, "front");
    for (const auto& row : r.front)
      if (row.size() != r.m)
        throw UsageError("run record front row has the wrong length");

    if (!timings_json.empty())
    {
      const auto t = Json::parse(timings_json);
      r.timings.offspring = field<double>(t, "offspring_seconds");
      r.timings.update_ca = field<double>(t, "update_ca_seconds");
      r.timings.update_da = field<double>(t, "update_da_seconds");
      r.timings.metrics = field<double>(t, "metrics_seconds");
    }
    return r;
  }
  catch (const nlohmann::json::exception& e)
  {
    throw UsageError(std::string("malformed run record: ") + e.what());
  }
}

std::string objectives_csv(std::span<const ObjectiveVector> rows, std::string_view comment)
{
  std::string out;
  if (!comment.empty())
    out.append("# ").append(comment).append("\n");
  const auto m = rows.empty() ? 0 : rows.front().size();
  for (std::size_t i = 0; i < m; ++i)
    out.append(i ? ",f" : "f").append(std::to_string(i + 1));
  out.append("\n");
  for (const auto& row : rows)
  {
    if (row.size() != m)
      throw UsageError("objectives_csv: rows differ in length");
    for (std::size_t i = 0; i < m; ++i)
    {
      if (i)
        out.push_back(',');
      out.append(format_double(row[i]));
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<ObjectiveVector> parse_objectives_csv(std::string_view text)
{
  std::vector<ObjectiveVector> rows;
  bool header_seen = false;
  std::size_t width = 0;
  while (!text.empty())
  {
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (line.empty() || line.front() == '#')
      continue;
    if (!header_seen)
    {
      header_seen = true;
      continue;
    }
    ObjectiveVector row;
    while (true)
    {
      const auto comma = line.find(',');
      const auto cell = line.substr(0, comma);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw UsageError("objectives CSV has a non-numeric cell: " + std::string(cell));
      row.push_back(v);
      if (comma == std::string_view::npos)
        break;
      line.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != width)
      throw UsageError("objectives CSV rows differ in length");
    width = row.size();
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_file_atomic(const fs::path& path, std::string_view contents)
{
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
      throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --- Running -----------------------------------------------------------------

std::vector<ObjectiveVector> reference_front(const ProblemSpec& spec, const MetricConfig& metrics)
{
  const auto stream = static_cast<std::uint64_t>(spec.id) * 1000 + spec.m;
  auto rng = RandomSource(metrics.igd_reference_seed).derive(stream);
  return sample_reference_front(spec, metrics.igd_reference_size, rng);
}

RunResult run_single(const ProblemSpec& spec, NormalizationVariant variant, std::size_t run_index,
                     const ExperimentConfig& config, std::span<const ObjectiveVector> reference)
{
  Sra3Config sc;
  sc.archive_capacity = config.archive_size_for(spec.m);
  sc.max_evaluations = config.max_evaluations;
  sc.eps = config.eps;
  sc.variation = config.variation;
  sc.variant = variant;
  sc.seed = config.base_seed + run_index;
  const auto res = run(spec, sc);

  RunResult r;
  r.problem = spec.name();
  r.m = spec.m;
  r.variant = variant;
  r.run_index = run_index;
  r.seed = sc.seed;
  r.archive_size = sc.archive_capacity;
  r.max_evaluations = sc.max_evaluations;
  r.evaluations = res.evaluations;
  r.generations = res.generations;
  r.fitness_clamps = res.fitness_clamps;
  r.eps_k = sc.eps.k;
  r.p_crossover = sc.variation.p_crossover;
  r.p_mutation = sc.variation.mutation_probability(spec.n);
  r.eta_c = sc.variation.eta_c;
  r.eta_m = sc.variation.eta_m;
  r.hv_mc_samples = spec.m > config.metrics.hv_exact_max_objectives ? config.metrics.hv_mc_samples : 0;
  r.hv_mc_seed = config.metrics.hv_mc_seed;
  r.igd_reference_size = reference.size();
  r.front = objectives_of(res.front);
  r.timings = res.timings;

  const auto start = Clock::now();
  r.hv = normalized_hv(r.front, spec, config.metrics);
  r.igd = igd(r.front, reference);
  r.timings.metrics = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::vector<RunResult> run_experiment(const ExperimentConfig& config, const RunCallback& on_finish)
{
  config.validate();

  if (!config.output_dir.empty())
  {
    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    if (ec || !fs::is_directory(config.output_dir))
      throw std::runtime_error("cannot create output directory " + config.output_dir.string());
  }

  std::vector<ProblemSpec> specs;
  std::vector<std::vector<ObjectiveVector>> references;
  for (const auto& cell : config.problems)
  {
    specs.push_back(ProblemSpec::make(cell.id, cell.m));
    references.push_back(reference_front(specs.back(), config.metrics));
  }

  struct Task
  {
    std::size_t cell;
    NormalizationVariant variant;
    std::size_t run;
  };
  std::vector<Task> tasks;
  for (std::size_t c = 0; c < specs.size(); ++c)
    for (const auto v : config.variants)
      for (std::size_t i = 0; i < config.runs; ++i)
        tasks.push_back({c, v, i});

  std::vector<RunResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++)
    {
      {
        std::lock_guard lock(mutex);
        if (failure)
          return;
      }
      try
      {
        const auto& task = tasks[t];
        auto r = run_single(specs[task.cell], task.variant, task.run, config, references[task.cell]);
        if (!config.output_dir.empty())
        {
          const auto base = config.output_dir / run_stem(r);
          write_file_atomic(fs::path(base).concat(".json"), serialize_record(r));
          write_file_atomic(fs::path(base).concat("_front.csv"), objectives_csv(r.front));
          write_file_atomic(fs::path(base).concat("_timing.json"), serialize_timings(r.timings));
        }
        std::lock_guard lock(mutex);
        results[t] = std::move(r);
        if (on_finish)
          on_finish(results[t]);
      }
      catch (...)
      {
        std::lock_guard lock(mutex);
        if (!failure)
          failure = std::current_exception();
        return;
      }
    }
  };

  const auto workers = std::min(config.jobs, tasks.size());
  if (workers <= 1)
    worker();
  else
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(worker);
  }
  if (failure)
    std::rethrow_exception(failure);
  return results;
}

std::vector<RunResult> load_results(const fs::path& dir)
{
  if (!fs::is_directory(dir))
    throw UsageError("not a directory: " + dir.string());
  std::vector<RunResult> out;
  for (const auto& entry : fs::directory_iterator(dir))
  {
    const auto name = entry.path().filename().string();
    if (!entry.is_regular_file() || entry.path().extension() != ".json" || name.ends_with("_timing.json"))
      continue;
    auto timing = entry.path();
    timing.replace_extension();
    timing += "_timing.json";
    const auto timing_text = fs::exists(timing) ? read_file(timing) : std::string{};
    out.push_back(parse_record(read_file(entry.path()), timing_text));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return record_key(a) < record_key(b); });
  return out;
}

// --- Summary -----------------------------------------------------------------

namespace
{

double mean_of(const std::vector<double>& v)
{
  double s = 0.0;
  for (const double x : v)
    s += x;
  return s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v, double mean)
{
  if (v.size() < 2)
    return 0.0;
  double s = 0.0;
  for (const double x : v)
    s += (x - mean) * (x - mean);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

Outcome flipped(Outcome o)
{
  return o == Outcome::Win ? Outcome::Loss : o == Outcome::Loss ? Outcome::Win : Outcome::Tie;
}

std::string sci(double v, int digits)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*e", digits, v);
  return buf;
}

} // namespace

Summary summarize(std::span<const RunResult> results, double alpha)
{
  if (results.empty())
    throw UsageError("summarize: no results");

  using CellKey = std::tuple<int, std::string, std::size_t>;
  struct Samples
  {
    std::vector<double> hv;
    std::vector<double> igd;
  };
  std::map<CellKey, std::map<int, Samples>> groups;
  for (const auto& r : results)
  {
    auto& s = groups[{problem_order(r.problem), r.problem, r.m}][static_cast<int>(r.variant)];
    s.hv.push_back(r.hv);
    s.igd.push_back(r.igd);
  }

  Summary out;
  for (const auto& [key, variants] : groups)
  {
    const auto& [order, problem, m] = key;
    const auto first = out.cells.size();
    for (const auto& [v, s] : variants)
    {
      CellSummary c;
      c.problem = problem;
      c.m = m;
      c.variant = static_cast<NormalizationVariant>(v);
      c.runs = s.hv.size();
      c.hv_mean = mean_of(s.hv);
      c.hv_std = sample_std(s.hv, c.hv_mean);
      c.igd_mean = mean_of(s.igd);
      c.igd_std = sample_std(s.igd, c.igd_mean);
      out.cells.push_back(c);
    }
    double best_hv = -std::numeric_limits<double>::infinity();
    double best_igd = std::numeric_limits<double>::infinity();
    for (auto i = first; i < out.cells.size(); ++i)
    {
      best_hv = std::max(best_hv, out.cells[i].hv_mean);
      best_igd = std::min(best_igd, out.cells[i].igd_mean);
    }
    for (auto i = first; i < out.cells.size(); ++i)
    {
      out.cells[i].best_hv = out.cells[i].hv_mean == best_hv;
      out.cells[i].best_igd = out.cells[i].igd_mean == best_igd;
    }

    for (auto a = variants.begin(); a != variants.end(); ++a)
      for (auto b = std::next(a); b != variants.end(); ++b)
      {
        if (a->second.hv.size() < 2 || b->second.hv.size() < 2)
          throw UsageError("summarize: comparing variants needs at least two runs per cell (" + problem +
                           ", m=" + std::to_string(m) + ")");
        PairVerdict pv;
        pv.problem = problem;
        pv.m = m;
        pv.a = static_cast<NormalizationVariant>(a->first);
        pv.b = static_cast<NormalizationVariant>(b->first);
        pv.hv = wilcoxon_rank_sum(a->second.hv, b->second.hv, alpha);
        pv.igd = wilcoxon_rank_sum(a->second.igd, b->second.igd, alpha);
        pv.hv_outcome = pv.hv.outcome;
        pv.igd_outcome = flipped(pv.igd.outcome);
        out.verdicts.push_back(pv);
      }
  }
  return out;
}

std::string summary_csv(const Summary& s)
{
  std::string out = "problem,m,variant,runs,hv_mean,hv_std,igd_mean,igd_std,best_hv,best_igd\n";
  for (const auto& c : s.cells)
    out += c.problem + "," + std::to_string(c.m) + "," + std::string(to_string(c.variant)) + "," +
           std::to_string(c.runs) + "," + format_double(c.hv_mean) + "," + format_double(c.hv_std) + "," +
           format_double(c.igd_mean) + "," + format_double(c.igd_std) + "," + (c.best_hv ? "1" : "0") + "," +
           (c.best_igd ? "1" : "0") + "\n";
  return out;
}

std::string verdicts_csv(const Summary& s)
{
  std::string out = "problem,m,a,b,hv_u,hv_p,hv,igd_u,igd_p,igd\n";
  for (const auto& v : s.verdicts)
    out += v.problem + "," + std::to_string(v.m) + "," + std::string(to_string(v.a)) + "," +
           std::string(to_string(v.b)) + "," + format_double(v.hv.statistic) + "," + format_double(v.hv.p_value) +
           "," + std::string(symbol(v.hv_outcome)) + "," + format_double(v.igd.statistic) + "," +
           format_double(v.igd.p_value) + "," + std::string(symbol(v.igd_outcome)) + "\n";
  return out;
}

std::string summary_table(const Summary& s)
{
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-8s %3s  %-5s %4s  %-22s %-22s\n", "problem", "m", "var", "runs",
                "HV mean (std)", "IGD mean (std)");
  out << line;
  for (const auto& c : s.cells)
  {
    const auto hv = sci(c.hv_mean, 3) + " (" + sci(c.hv_std, 1) + ")" + (c.best_hv ? "*" : "");
    const auto ig = sci(c.igd_mean, 3) + " (" + sci(c.igd_std, 1) + ")" + (c.best_igd ? "*" : "");
    std::snprintf(line, sizeof line, "%-8s %3zu  %-5s %4zu  %-22s %-22s\n", c.problem.c_str(), c.m,
                  std::string(to_string(c.variant)).c_str(), c.runs, hv.c_str(), ig.c_str());
    out << line;
  }
  if (!s.verdicts.empty())
  {
    out << "\nrank-sum verdicts (+ first better, = no significant difference, − first worse)\n";
    for (const auto& v : s.verdicts)
      out << v.problem << " m=" << v.m << "  " << to_string(v.a) << " vs " << to_string(v.b) << "  HV "
          << symbol(v.hv_outcome) << " (p=" << sci(v.hv.p_value, 2) << ")  IGD " << symbol(v.igd_outcome)
          << " (p=" << sci(v.igd.p_value, 2) << ")\n";
  }
  return out.str();
}

// --- Bias study --------------------------------------------------------------

std::vector<ProfileEntry> bias_profile(const BiasOptions& options)
{
  for (const double s : options.shape.scale)
    if (!(s > 0.0) || !std::isfinite(s))
      throw ConfigError("front scales must be positive");
  if (options.points < 2)
    throw ConfigError("the bias study needs at least two points");
  RandomSource rng(options.seed);
  const auto points = options.grid ? grid_similar_front(options.shape, options.points)
                                   : sample_similar_front(options.shape, options.points, rng);
  return mean_eps_profile(points, options.normalized);
}

std::string profile_csv(std::span<const ProfileEntry> profile)
{
  std::string out = "t,f1,f2,mean_eps\n";
  for (const auto& e : profile)
    out += format_double(e.t) + "," + format_double(e.point[0]) + "," + format_double(e.point[1]) + "," +
           format_double(e.mean_eps) + "\n";
  return out;
}

std::vector<ProfileEntry> bias_study(const BiasOptions& options, const fs::path& out)
{
  auto profile = bias_profile(options);
  if (!out.empty())
    write_file_atomic(out, profile_csv(profile));
  return profile;
}

} // namespace sra3
