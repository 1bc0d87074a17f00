// sra3: run SRA3 experiments, summarize results, study indicator bias, and
// export reference fronts.

#include <sra3/experiment.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

namespace
{

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kRuntimeError = 3;

std::vector<sra3::ProblemId> parse_problems(const std::vector<std::string>& names)
{
  std::vector<sra3::ProblemId> ids;
  for (const auto& name : names)
  {
    const auto id = sra3::parse_problem(name);
    if (!id)
      throw sra3::ConfigError("unknown problem '" + name + "'");
    ids.push_back(*id);
  }
  return ids;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"SRA3 many-objective optimizer: experiments, summaries, bias study, reference fronts"};
  app.require_subcommand(1);

  const std::vector<std::string> variant_names{"none", "eps", "sde", "both"};

  // run
  auto* run_cmd = app.add_subcommand("run", "Run the problem x variant x seed matrix and write result files");
  std::vector<std::string> run_problems;
  std::vector<std::size_t> run_objectives{5};
  std::vector<std::string> run_variants{"none"};
  std::optional<std::size_t> run_archive;
  sra3::ExperimentConfig run_cfg;
  std::string run_out = "results";
  bool quiet = false;
  run_cmd->add_option("--problem", run_problems, "Problems (DTLZ1-4, WFG1-9)")->required()->delimiter(',');
  run_cmd->add_option("--objectives", run_objectives, "Objective counts")->delimiter(',')->capture_default_str();
  run_cmd->add_option("--variant", run_variants, "Normalization variants")
    ->delimiter(',')
    ->check(CLI::IsMember(variant_names))
    ->capture_default_str();
  run_cmd->add_option("--archive-size", run_archive, "Archive size N (default depends on m)");
  run_cmd->add_option("--max-evals", run_cfg.max_evaluations, "Evaluation budget per run")->capture_default_str();
  run_cmd->add_option("--runs", run_cfg.runs, "Independent runs per cell")->capture_default_str();
  run_cmd->add_option("--seed", run_cfg.base_seed, "Base seed; run i uses seed + i")->capture_default_str();
  run_cmd->add_option("--out", run_out, "Output directory")->capture_default_str();
  run_cmd->add_option("--jobs", run_cfg.jobs, "Concurrent runs")->capture_default_str();
  run_cmd->add_option("--mc-samples", run_cfg.metrics.hv_mc_samples, "Monte Carlo hypervolume samples")
    ->capture_default_str();
  run_cmd->add_option("--reference-size", run_cfg.metrics.igd_reference_size, "IGD reference front size")
    ->capture_default_str();
  run_cmd->add_flag("--quiet", quiet, "No per-run progress lines");

  // summarize
  auto* sum_cmd = app.add_subcommand("summarize", "Mean HV/IGD per cell and pairwise rank-sum verdicts");
  std::string sum_in = "results";
  std::string sum_out;
  double alpha = 0.05;
  sum_cmd->add_option("--in", sum_in, "Directory of run records")->capture_default_str();
  sum_cmd->add_option("--out", sum_out, "Directory for summary.csv and verdicts.csv");
  sum_cmd->add_option("--alpha", alpha, "Significance level")->check(CLI::Range(0.0, 1.0))->capture_default_str();

  // bias
  auto* bias_cmd = app.add_subcommand("bias", "Mean epsilon-indicator profile along a two-objective front");
  std::string shape_name = "linear";
  std::vector<double> scale{1.0, 1.0};
  sra3::BiasOptions bias;
  bool raw = false;
  std::string bias_out;
  bias_cmd->add_option("--shape", shape_name, "Front shape")
    ->check(CLI::IsMember({"linear", "concave", "convex"}))
    ->capture_default_str();
  bias_cmd->add_option("--scale", scale, "Objective ranges s1,s2")->delimiter(',')->expected(2);
  bias_cmd->add_option("--points", bias.points, "Number of points")->capture_default_str();
  bias_cmd->add_flag("--raw", raw, "Skip min-max normalization");
  bias_cmd->add_flag("--grid", bias.grid, "Evenly spaced points instead of uniform draws");
  bias_cmd->add_option("--seed", bias.seed, "Sampling seed")->capture_default_str();
  bias_cmd->add_option("--out", bias_out, "CSV path (stdout when omitted)");

  // front
  auto* front_cmd = app.add_subcommand("front", "Export a sampled reference front as CSV");
  std::string front_problem;
  std::size_t front_m = 5;
  std::size_t front_count = 10'000;
  std::uint64_t front_seed = sra3::MetricConfig{}.igd_reference_seed;
  std::string front_out;
  front_cmd->add_option("--problem", front_problem, "Problem")->required();
  front_cmd->add_option("--objectives", front_m, "Objective count")->capture_default_str();
  front_cmd->add_option("--count", front_count, "Number of points")->capture_default_str();
  front_cmd->add_option("--seed", front_seed, "Sampling seed")->capture_default_str();
  front_cmd->add_option("--out", front_out, "CSV path (stdout when omitted)");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp& e)
  {
    return app.exit(e);
  }
  catch (const CLI::CallForAllHelp& e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError& e)
  {
    app.exit(e);
    return kConfigError;
  }

  try
  {
    if (*run_cmd)
    {
      for (const auto id : parse_problems(run_problems))
        for (const auto m : run_objectives)
          run_cfg.problems.push_back({id, m});
      run_cfg.variants.clear();
      for (const auto& v : run_variants)
        run_cfg.variants.push_back(*sra3::parse_variant(v));
      run_cfg.archive_size = run_archive;
      run_cfg.output_dir = run_out;
      run_cfg.validate();
      const auto results = sra3::run_experiment(run_cfg, [&](const sra3::RunResult& r) {
        if (!quiet)
          std::fprintf(stderr, "%s  evals=%zu  hv=%.6g  igd=%.6g\n", sra3::run_stem(r).c_str(), r.evaluations,
                       r.hv, r.igd);
      });
      std::printf("%zu runs written to %s\n", results.size(), run_out.c_str());
    }
    else if (*sum_cmd)
    {
      const auto results = sra3::load_results(sum_in);
      const auto summary = sra3::summarize(results, alpha);
      std::fputs(sra3::summary_table(summary).c_str(), stdout);
      if (!sum_out.empty())
      {
        std::filesystem::create_directories(sum_out);
        sra3::write_file_atomic(std::filesystem::path(sum_out) / "summary.csv", sra3::summary_csv(summary));
        sra3::write_file_atomic(std::filesystem::path(sum_out) / "verdicts.csv", sra3::verdicts_csv(summary));
      }
    }
    else if (*bias_cmd)
    {
      bias.shape.kind = *sra3::parse_shape(shape_name);
      bias.shape.scale = {scale[0], scale[1]};
      bias.normalized = !raw;
      const auto profile = sra3::bias_study(bias, bias_out);
      if (bias_out.empty())
        std::fputs(sra3::profile_csv(profile).c_str(), stdout);
      else
      {
        const auto& top = profile[sra3::profile_argmax(profile)];
        std::printf("max mean_eps %.6g at t=%.6g (%.6g, %.6g)\n", top.mean_eps, top.t, top.point[0], top.point[1]);
      }
    }
    else if (*front_cmd)
    {
      const auto id = parse_problems({front_problem}).front();
      const auto spec = sra3::ProblemSpec::make(id, front_m);
      if (front_count == 0)
        throw sra3::ConfigError("--count must be positive");
      sra3::MetricConfig mc;
      mc.igd_reference_size = front_count;
      mc.igd_reference_seed = front_seed;
      const auto points = sra3::reference_front(spec, mc);
      const auto csv = sra3::objectives_csv(
        points, spec.name() + "," + std::to_string(spec.m) + "," + std::to_string(points.size()));
      if (front_out.empty())
        std::fputs(csv.c_str(), stdout);
      else
        sra3::write_file_atomic(front_out, csv);
    }
  }
  catch (const sra3::ConfigError& e)
  {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kConfigError;
  }
  catch (const std::exception& e)
  {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kRuntimeError;
  }
  return kOk;
}
