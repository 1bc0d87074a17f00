#include <sra3/experiment.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>

namespace fs = std::filesystem;

namespace
{

fs::path fresh_dir(const std::string& name)
{
  const auto dir = fs::temp_directory_path() / ("sra3_test_" + name);
  fs::remove_all(dir);
  return dir;
}

sra3::ExperimentConfig small_config()
{
  sra3::ExperimentConfig c;
  c.problems = {{sra3::ProblemId::DTLZ2, 3}};
  c.archive_size = 20;
  c.max_evaluations = 600;
  c.runs = 2;
  c.base_seed = 11;
  c.metrics.igd_reference_size = 500;
  return c;
}

sra3::RunResult fake(const std::string& problem, sra3::NormalizationVariant v, std::size_t run, double hv,
                     double igd)
{
  sra3::RunResult r;
  r.problem = problem;
  r.m = 5;
  r.variant = v;
  r.run_index = run;
  r.hv = hv;
  r.igd = igd;
  return r;
}

} // namespace

TEST(ExperimentConfig, DefaultArchiveSizes)
{
  EXPECT_EQ(sra3::default_archive_size(5), 210u);
  EXPECT_EQ(sra3::default_archive_size(10), 275u);
  EXPECT_EQ(sra3::default_archive_size(15), 135u);
  EXPECT_EQ(sra3::default_archive_size(20), 135u);
  EXPECT_EQ(sra3::default_archive_size(25), 135u);
  EXPECT_FALSE(sra3::default_archive_size(3).has_value());

  sra3::ExperimentConfig c;
  EXPECT_EQ(c.archive_size_for(10), 275u);
  EXPECT_THROW(c.archive_size_for(4), sra3::ConfigError);
  c.archive_size = 40;
  EXPECT_EQ(c.archive_size_for(4), 40u);
}

TEST(ExperimentConfig, ValidationRejectsBadSettings)
{
  auto c = small_config();
  EXPECT_NO_THROW(c.validate());

  auto empty = c;
  empty.problems.clear();
  EXPECT_THROW(empty.validate(), sra3::ConfigError);

  auto no_variants = c;
  no_variants.variants.clear();
  EXPECT_THROW(no_variants.validate(), sra3::ConfigError);

  auto zero_runs = c;
  zero_runs.runs = 0;
  EXPECT_THROW(zero_runs.validate(), sra3::ConfigError);

  auto tiny_budget = c;
  tiny_budget.max_evaluations = 10;
  EXPECT_THROW(tiny_budget.validate(), sra3::ConfigError);

  auto bad_ref = c;
  bad_ref.metrics.hv_reference = {1.0, 1.0};
  EXPECT_THROW(bad_ref.validate(), sra3::ConfigError);

  auto no_default = c;
  no_default.archive_size.reset();
  EXPECT_THROW(no_default.validate(), sra3::ConfigError);
}

TEST(Experiment, RunsAreSeededDeterministicAndWritten)
{
  auto c = small_config();
  c.variants = {sra3::NormalizationVariant::None, sra3::NormalizationVariant::Both};
  c.output_dir = fresh_dir("run");
  std::size_t callbacks = 0;
  const auto first = sra3::run_experiment(c, [&](const sra3::RunResult&) { ++callbacks; });
  ASSERT_EQ(first.size(), 4u);
  EXPECT_EQ(callbacks, 4u);
  EXPECT_EQ(first[0].variant, sra3::NormalizationVariant::None);
  EXPECT_EQ(first[2].variant, sra3::NormalizationVariant::Both);
  EXPECT_EQ(first[0].seed, 11u);
  EXPECT_EQ(first[1].seed, 12u);
  EXPECT_EQ(first[2].seed, 11u);
  EXPECT_NE(first[0].front, first[1].front);
  for (const auto& r : first)
  {
    EXPECT_EQ(r.problem, "DTLZ2");
    EXPECT_EQ(r.archive_size, 20u);
    EXPECT_LE(r.evaluations, 600u);
    EXPECT_EQ(r.hv_mc_samples, 0u);
    EXPECT_EQ(r.igd_reference_size, 500u);
    EXPECT_GE(r.hv, 0.0);
    EXPECT_LE(r.hv, 1.0);
    EXPECT_GT(r.igd, 0.0);
    EXPECT_FALSE(r.front.empty());
    const auto stem = c.output_dir / sra3::run_stem(r);
    EXPECT_TRUE(fs::exists(fs::path(stem).concat(".json")));
    EXPECT_TRUE(fs::exists(fs::path(stem).concat("_front.csv")));
    EXPECT_TRUE(fs::exists(fs::path(stem).concat("_timing.json")));
  }
  EXPECT_EQ(sra3::run_stem(first[3]), "DTLZ2_m3_both_r1");

  const auto record = sra3::read_file(c.output_dir / "DTLZ2_m3_none_r0.json");
  const auto csv = sra3::read_file(c.output_dir / "DTLZ2_m3_none_r0_front.csv");

  c.jobs = 3;
  const auto second = sra3::run_experiment(c);
  ASSERT_EQ(second.size(), first.size());
  for (std::size_t i = 0; i < first.size(); ++i)
  {
    EXPECT_EQ(second[i].front, first[i].front);
    EXPECT_EQ(second[i].hv, first[i].hv);
    EXPECT_EQ(second[i].igd, first[i].igd);
  }
  EXPECT_EQ(sra3::read_file(c.output_dir / "DTLZ2_m3_none_r0.json"), record);
  EXPECT_EQ(sra3::read_file(c.output_dir / "DTLZ2_m3_none_r0_front.csv"), csv);
  EXPECT_EQ(sra3::parse_objectives_csv(csv), first[0].front);

  const auto loaded = sra3::load_results(c.output_dir);
  ASSERT_EQ(loaded.size(), first.size());
  for (std::size_t i = 0; i < first.size(); ++i)
  {
    auto expected = second[i];
    EXPECT_EQ(loaded[i], expected);
  }
  fs::remove_all(c.output_dir);
}

TEST(Experiment, ManyObjectiveRecordUsesMonteCarlo)
{
  sra3::ExperimentConfig c;
  c.problems = {{sra3::ProblemId::WFG3, 10}};
  c.max_evaluations = 600;
  c.archive_size = 20;
  c.runs = 1;
  c.metrics.hv_mc_samples = 20'000;
  c.metrics.igd_reference_size = 300;
  const auto r = sra3::run_experiment(c);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].hv_mc_samples, 20'000u);
  EXPECT_GE(r[0].hv, 0.0);
  EXPECT_LE(r[0].hv, 1.0);
  EXPECT_TRUE(std::isfinite(r[0].igd));
}

TEST(Records, RoundTrip)
{
  sra3::RunResult r;
  r.problem = "WFG7";
  r.m = 3;
  r.variant = sra3::NormalizationVariant::SdeOnly;
  r.run_index = 4;
  r.seed = 18446744073709551615ULL;
  r.archive_size = 275;
  r.max_evaluations = 90000;
  r.evaluations = 89925;
  r.generations = 326;
  r.fitness_clamps = 3;
  r.eps_k = 0.05;
  r.p_crossover = 1.0;
  r.p_mutation = 1.0 / 29.0;
  r.eta_c = 30;
  r.eta_m = 20;
  r.hv = 0.1 + 0.2;
  r.igd = 1e-310;
  r.hv_mc_samples = 1'000'000;
  r.hv_mc_seed = 0x243f6a8885a308d3ULL;
  r.igd_reference_size = 10000;
  r.front = {{1.0 / 3.0, 2.0, -0.0}, {5e-324, 1e300, 7.0}};
  r.timings = {0.25, 1.5, 0.125, 3.0};

  const auto text = sra3::serialize_record(r);
  EXPECT_EQ(text.find("seconds"), std::string::npos);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["format"], "sra3-run-1");
  EXPECT_EQ(j["variant"], "sde");
  EXPECT_EQ(j["objectives"], 3);

  const auto back = sra3::parse_record(text, sra3::serialize_timings(r.timings));
  EXPECT_EQ(back, r);
  const auto no_timing = sra3::parse_record(text);
  EXPECT_EQ(no_timing.timings, sra3::PhaseTimings{});
  EXPECT_EQ(sra3::serialize_record(back), text);
}

TEST(Records, MalformedInputThrows)
{
  EXPECT_THROW(sra3::parse_record("not json"), sra3::UsageError);
  EXPECT_THROW(sra3::parse_record("{}"), sra3::UsageError);
  EXPECT_THROW(sra3::parse_record(R"({"format":"sra3-run-1","problem":"DTLZ2"})"), sra3::UsageError);
  auto text = sra3::serialize_record(fake("DTLZ2", sra3::NormalizationVariant::None, 0, 0.5, 0.5));
  const auto pos = text.find("\"none\"");
  text.replace(pos, 6, "\"half\"");
  EXPECT_THROW(sra3::parse_record(text), sra3::UsageError);
}

TEST(Csv, RoundTripAndComment)
{
  const std::vector<sra3::ObjectiveVector> rows{{0.1, 0.2}, {1.0 / 3.0, 1e-300}};
  const auto csv = sra3::objectives_csv(rows, "DTLZ2,2,2");
  EXPECT_EQ(csv.rfind("# DTLZ2,2,2\nf1,f2\n", 0), 0u);
  EXPECT_EQ(sra3::parse_objectives_csv(csv), rows);
  EXPECT_THROW(sra3::parse_objectives_csv("f1,f2\n1,2\n3\n"), sra3::UsageError);
  EXPECT_THROW(sra3::parse_objectives_csv("f1,f2\n1,x\n"), sra3::UsageError);
  EXPECT_THROW(sra3::objectives_csv(std::vector<sra3::ObjectiveVector>{{1.0}, {1.0, 2.0}}), sra3::UsageError);
}

TEST(Summary, IdenticalSetsTie)
{
  std::vector<sra3::RunResult> rs;
  for (const auto v : {sra3::NormalizationVariant::None, sra3::NormalizationVariant::EpsOnly})
    for (std::size_t i = 0; i < 6; ++i)
      rs.push_back(fake("DTLZ1", v, i, 0.1 * i, 0.2 + 0.01 * i));
  const auto s = sra3::summarize(rs);
  ASSERT_EQ(s.cells.size(), 2u);
  ASSERT_EQ(s.verdicts.size(), 1u);
  EXPECT_EQ(s.verdicts[0].hv_outcome, sra3::Outcome::Tie);
  EXPECT_EQ(s.verdicts[0].igd_outcome, sra3::Outcome::Tie);
  EXPECT_TRUE(s.cells[0].best_hv && s.cells[1].best_hv);
}

TEST(Summary, HandMeansAndDirections)
{
  std::vector<sra3::RunResult> rs;
  const std::vector<double> good{0.9, 0.91, 0.92, 0.93, 0.94};
  const std::vector<double> bad{0.5, 0.51, 0.52, 0.53, 0.54};
  for (std::size_t i = 0; i < 5; ++i)
  {
    rs.push_back(fake("WFG4", sra3::NormalizationVariant::Both, i, good[i], 0.1 + 0.01 * i));
    rs.push_back(fake("WFG4", sra3::NormalizationVariant::None, i, bad[i], 0.3 + 0.01 * i));
    rs.push_back(fake("DTLZ3", sra3::NormalizationVariant::None, i, 0.4, 0.2));
  }
  const auto s = sra3::summarize(rs);
  ASSERT_EQ(s.cells.size(), 3u);
  EXPECT_EQ(s.cells[0].problem, "DTLZ3");
  EXPECT_EQ(s.cells[1].variant, sra3::NormalizationVariant::None);
  EXPECT_NEAR(s.cells[1].hv_mean, 0.52, 1e-15);
  EXPECT_NEAR(s.cells[1].hv_std, std::sqrt(0.00025), 1e-15);
  EXPECT_NEAR(s.cells[2].hv_mean, 0.92, 1e-15);
  EXPECT_NEAR(s.cells[2].igd_mean, 0.12, 1e-15);
  EXPECT_EQ(s.cells[0].hv_std, 0.0);
  EXPECT_TRUE(s.cells[2].best_hv);
  EXPECT_TRUE(s.cells[2].best_igd);
  EXPECT_FALSE(s.cells[1].best_hv);

  ASSERT_EQ(s.verdicts.size(), 1u);
  const auto& v = s.verdicts[0];
  EXPECT_EQ(v.a, sra3::NormalizationVariant::None);
  EXPECT_EQ(v.b, sra3::NormalizationVariant::Both);
  EXPECT_EQ(v.hv_outcome, sra3::Outcome::Loss);
  EXPECT_EQ(v.igd_outcome, sra3::Outcome::Loss);
  EXPECT_NEAR(v.hv.p_value, 2.0 / 252.0, 1e-12);

  const auto csv = sra3::verdicts_csv(s);
  EXPECT_NE(csv.find("WFG4,5,none,both,"), std::string::npos);
  EXPECT_NE(sra3::summary_csv(s).find("DTLZ3,5,none,5,"), std::string::npos);
  EXPECT_NE(sra3::summary_table(s).find("WFG4"), std::string::npos);
}

TEST(Summary, InputErrors)
{
  EXPECT_THROW(sra3::summarize(std::vector<sra3::RunResult>{}), sra3::UsageError);
  std::vector<sra3::RunResult> rs{fake("DTLZ2", sra3::NormalizationVariant::None, 0, 0.5, 0.1),
                                  fake("DTLZ2", sra3::NormalizationVariant::Both, 0, 0.6, 0.1)};
  EXPECT_THROW(sra3::summarize(rs), sra3::UsageError);
  rs.pop_back();
  EXPECT_NO_THROW(sra3::summarize(rs));
}

TEST(Bias, StudyWritesProfile)
{
  const auto dir = fresh_dir("bias");
  fs::create_directories(dir);
  sra3::BiasOptions o;
  o.shape = {sra3::ShapeKind::Linear, {1.0, 1.0}};
  o.points = 200;
  const auto prof = sra3::bias_study(o, dir / "p.csv");
  ASSERT_EQ(prof.size(), 200u);
  const auto i = sra3::profile_argmax(prof);
  EXPECT_TRUE(i == 0 || i == 199);
  const auto text = sra3::read_file(dir / "p.csv");
  EXPECT_EQ(text.rfind("t,f1,f2,mean_eps\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 201);
  fs::remove_all(dir);
}

TEST(Bias, ConcavePairIsSymmetric)
{
  sra3::BiasOptions o;
  o.shape = {sra3::ShapeKind::Concave, {1.0, 1.0}};
  o.points = 2;
  o.grid = true;
  const auto prof = sra3::bias_profile(o);
  EXPECT_DOUBLE_EQ(prof[0].mean_eps, prof[1].mean_eps);
}

TEST(Bias, RawScaledArgmaxAndErrors)
{
  sra3::BiasOptions o;
  o.shape = {sra3::ShapeKind::Linear, {1.0, 2.0}};
  o.normalized = false;
  o.points = 300;
  const auto prof = sra3::bias_profile(o);
  EXPECT_EQ(sra3::profile_argmax(prof), prof.size() - 1);

  o.shape.scale = {0.0, 1.0};
  EXPECT_THROW(sra3::bias_profile(o), sra3::ConfigError);
  o.shape.scale = {1.0, 1.0};
  o.points = 1;
  EXPECT_THROW(sra3::bias_profile(o), sra3::ConfigError);
}

TEST(LoadResults, MissingDirectoryThrows)
{
  EXPECT_THROW(sra3::load_results(fresh_dir("missing")), sra3::UsageError);
}
