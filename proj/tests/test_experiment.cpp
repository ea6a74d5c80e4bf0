#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ncast/experiment.hpp"

using namespace ncast;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.suite = "unit";
  c.families = {{Family::random, false}, {Family::random, true}, {Family::lattice, true}};
  c.sizes = {36};
  c.densities = {12};
  c.seed_count = 3;
  c.heuristics = {Heuristic::iron, Heuristic::iren_iron, Heuristic::irms};
  c.baselines = true;
  c.lp = LpMode::builtin;
  return c;
}

std::string summary_text(const ExperimentReport& r) {
  std::ostringstream os;
  write_summary_csv(os, r.rows);
  write_aggregate_csv(os, r.aggregates);
  write_skipped_csv(os, r.skipped);
  return os.str();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Presets, AllValidate) {
  for (const auto& name : preset_names()) {
    const auto cfg = preset(name);
    ASSERT_TRUE(cfg) << name;
    EXPECT_NO_THROW(cfg->validate()) << name;
    EXPECT_EQ(cfg->suite, name);
  }
  EXPECT_FALSE(preset("no-such-suite"));
  EXPECT_TRUE(preset("fig-N800")->long_running);
  EXPECT_FALSE(preset("fig-N400")->long_running);
}

TEST(Presets, FigEfficiencyHasTwoHundredInstances) {
  const auto cfg = *preset("fig-efficiency");
  EXPECT_EQ(enumerate_instances(cfg).size(), 200u);
  EXPECT_EQ(cfg.sizes, std::vector<std::size_t>{196});
  EXPECT_EQ(cfg.densities, (std::vector<double>{4, 12, 28, 48, 80}));
}

TEST(Presets, CostSuiteShape) {
  const auto cfg = *preset("fig-cost-N200");
  EXPECT_EQ(cfg.families.size(), 1u);
  EXPECT_EQ(cfg.families[0].name(), "random-plane");
  EXPECT_TRUE(cfg.baselines);
  EXPECT_EQ(cfg.lp, LpMode::builtin);
  EXPECT_EQ(cfg.heuristics, (std::vector<Heuristic>{Heuristic::iron, Heuristic::irms}));
}

TEST(Config, ParsesKeyValueFile) {
  std::istringstream in(
      "# comment\n"
      "families = random-plane, lattice-torus\n"
      "N = 49\n"
      "M = 4,12   # trailing comment\n"
      "seeds = 2\n"
      "seed = 9\n"
      "heuristics = IRON,IR-MS\n"
      "baselines = on\n"
      "lp = export\n"
      "jobs = 2\n");
  const auto cfg = parse_config(in);
  EXPECT_EQ(cfg.families.size(), 2u);
  EXPECT_EQ(cfg.families[1], (FamilySpec{Family::lattice, true}));
  EXPECT_EQ(cfg.sizes, std::vector<std::size_t>{49});
  EXPECT_EQ(cfg.densities, (std::vector<double>{4, 12}));
  EXPECT_EQ(cfg.seed_count, 2u);
  EXPECT_EQ(cfg.base_seed, 9u);
  EXPECT_EQ(cfg.heuristics.size(), 2u);
  EXPECT_TRUE(cfg.baselines);
  EXPECT_EQ(cfg.lp, LpMode::export_files);
  EXPECT_EQ(cfg.jobs, 2u);
  EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, OverridesApplyOnTopOfPreset) {
  auto cfg = *preset("fig-cost-N200");
  apply_setting(cfg, "M", "12,20");
  apply_setting(cfg, "lp", "off");
  EXPECT_EQ(cfg.densities, (std::vector<double>{12, 20}));
  EXPECT_EQ(cfg.lp, LpMode::off);
}

TEST(Config, Errors) {
  ExperimentConfig cfg;
  EXPECT_THROW(apply_setting(cfg, "colour", "red"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "N", "12x"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "families", "hexagonal"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "baselines", "maybe"), ConfigError);
  std::istringstream no_eq("N 12\n");
  EXPECT_THROW(parse_config(no_eq), ConfigError);

  auto lattice = small_config();
  lattice.sizes = {50};
  EXPECT_THROW(lattice.validate(), ConfigError);
  lattice.sizes = {49};
  lattice.densities = {10};
  EXPECT_THROW(lattice.validate(), ConfigError);
  auto empty = small_config();
  empty.heuristics.clear();
  EXPECT_THROW(empty.validate(), ConfigError);
  empty = small_config();
  empty.seed_count = 0;
  EXPECT_THROW(empty.validate(), ConfigError);
}

TEST(Seeds, DerivationIsStableAndSpread) {
  const FamilySpec f{Family::random, false};
  EXPECT_EQ(derive_seed(1, f, 200, 12, 0), derive_seed(1, f, 200, 12, 0));
  std::set<std::uint64_t> seen;
  for (std::size_t r = 0; r < 10; ++r) {
    for (double m : {8.0, 12.0}) {
      seen.insert(derive_seed(1, f, 200, m, r));
      seen.insert(derive_seed(1, {Family::random, true}, 200, m, r));
      seen.insert(derive_seed(2, f, 200, m, r));
    }
  }
  EXPECT_EQ(seen.size(), 60u);
}

TEST(Suite, DeterministicAcrossRunsAndThreadCounts) {
  auto cfg = small_config();
  const std::string once = summary_text(run_suite(cfg));
  EXPECT_EQ(summary_text(run_suite(cfg)), once);
  cfg.jobs = 3;
  EXPECT_EQ(summary_text(run_suite(cfg)), once);
}

TEST(Suite, RowsPerInstance) {
  const auto report = run_suite(small_config());
  EXPECT_EQ(report.attempted, 9u);
  EXPECT_TRUE(report.skipped.empty());
  // three heuristics, two baselines and the LP row per instance
  EXPECT_EQ(report.rows.size(), 9u * 6u);
  for (const auto& r : report.rows) {
    ASSERT_TRUE(r.e_opt);
    EXPECT_EQ(r.opt_kind, "lp");
    EXPECT_LE(*r.report.e_rel_eff, 1.0 + 1e-6);
  }
}

TEST(Suite, AggregatesRecomputableFromRows) {
  const auto report = run_suite(small_config());
  std::map<std::string, std::vector<double>> groups;
  for (const auto& r : report.rows) {
    groups[r.key.family.name() + std::to_string(r.key.n) + format_double(r.key.m) + r.heuristic].push_back(
        r.report.e_cost);
  }
  ASSERT_EQ(groups.size(), report.aggregates.size());
  for (const auto& a : report.aggregates) {
    const auto& xs = groups.at(a.family.name() + std::to_string(a.n) + format_double(a.m) + a.heuristic);
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    EXPECT_EQ(a.count, xs.size());
    EXPECT_NEAR(a.mean_e_cost, mean, 1e-12 * mean);
    EXPECT_NEAR(a.sd_e_cost, std::sqrt(ss / static_cast<double>(xs.size() - 1)), 1e-12 * mean);
  }
}

TEST(Suite, SkippedInstancesAreCounted) {
  ExperimentConfig cfg;
  cfg.suite = "sparse";
  cfg.families = {{Family::random, false}};
  cfg.sizes = {196};
  cfg.densities = {4, 12};
  cfg.seed_count = 2;
  const auto report = run_suite(cfg);
  EXPECT_EQ(report.attempted, 4u);
  EXPECT_EQ(report.skipped.size(), 2u);
  EXPECT_EQ(reported_instances(report) + report.skipped.size(), report.attempted);
  for (const auto& s : report.skipped) EXPECT_EQ(s.key.m, 4.0);
}

TEST(Suite, SurrogateOnlyOnTorusLattices) {
  ExperimentConfig cfg;
  cfg.families = {{Family::lattice, true}, {Family::lattice, false}};
  cfg.sizes = {49};
  cfg.densities = {4};
  cfg.seed_count = 1;
  const auto report = run_suite(cfg);
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.rows[0].opt_kind, "surrogate");
  EXPECT_EQ(*report.rows[0].e_opt, 48.0 / 4.0);
  EXPECT_EQ(report.rows[1].opt_kind, "none");
  EXPECT_FALSE(report.rows[1].report.e_rel_eff);
}

TEST(Suite, WritesReportAndLpFiles) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "ncast_test_suite";
  fs::remove_all(dir);
  auto cfg = small_config();
  cfg.families = {{Family::random, true}};
  cfg.seed_count = 2;
  cfg.lp = LpMode::export_files;
  cfg.dump_topology = true;
  cfg.out_dir = dir.string();
  const auto report = run_suite(cfg);
  write_report(report, cfg.out_dir);
  for (const char* f : {"summary.csv", "aggregate.csv", "skipped.csv", "plot.gp"}) {
    EXPECT_TRUE(fs::is_regular_file(dir / f)) << f;
  }
  EXPECT_EQ(std::distance(fs::directory_iterator(dir / "lp"), fs::directory_iterator{}), 2);
  EXPECT_EQ(std::distance(fs::directory_iterator(dir / "topo"), fs::directory_iterator{}), 2);
  EXPECT_EQ(slurp(dir / "summary.csv").substr(0, 7), "family,");
  for (const auto& r : report.rows) EXPECT_EQ(r.opt_kind, "export");
  fs::remove_all(dir);
}

TEST(RunSingle, PlaneLatticeIronCorners) {
  const auto run = run_single(Family::lattice, 400, 4, false, 0, Heuristic::iron);
  std::ostringstream csv;
  write_surface_csv(csv, run.network, run.capacity.per_destination);
  for (const auto& d : run.capacity.per_destination) {
    const Point& p = run.network.position(d.destination);
    const bool corner = (p.x == 0 || p.x == 19) && (p.y == 0 || p.y == 19);
    if (corner) EXPECT_EQ(d.mincut, 2.0);
  }
  EXPECT_NE(csv.str().find("\n0,0,0,2\n"), std::string::npos);
}

TEST(RunSingle, TorusLatticeIrmsFlat) {
  const auto run = run_single(Family::lattice, 196, 4, true, 0, Heuristic::irms);
  for (const auto& d : run.capacity.per_destination) EXPECT_EQ(d.mincut, 4.0);
  EXPECT_EQ(run.report.e_cost, 49.75);
}

TEST(RunSingle, RandomIrmsCdfPeaksAtTarget) {
  const auto run = run_single(Family::random, 400, 20, false, 1, Heuristic::irms);
  std::map<long, std::size_t> histogram;
  for (const auto& d : run.capacity.per_destination) ++histogram[std::lround(d.mincut)];
  auto peak = histogram.begin();
  for (auto it = histogram.begin(); it != histogram.end(); ++it) {
    if (it->second > peak->second) peak = it;
  }
  EXPECT_EQ(peak->first, 20);
}

TEST(Regression, SparseCutFixture) {
  const auto rep = regression_sparse_cut();
  EXPECT_LT(rep.capacity, rep.density);
  EXPECT_LE(rep.frontier.size(), 3u);
  EXPECT_TRUE(rep.frontier_matches());
  EXPECT_GE(rep.restored_capacity, 0.75 * rep.density);
  EXPECT_TRUE(rep.passed());
}
