// Acceptance checks, one PASS/FAIL line each. Usage: acceptance [criterion...]
// With no argument every criterion runs. Exit status is non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ncast/ncast.hpp"

using namespace ncast;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

RateAssignment random_integer_rates(const Network& net, NodeId s, SplitMix64& rng) {
  RateAssignment ra{std::vector<double>(net.size()), s};
  for (double& c : ra.rates) c = static_cast<double>(1 + rng() % 5);
  return ra;
}

// 1. maxflow min-cut equals exhaustive enumeration on small random networks
Outcome oracle_equivalence() {
  SplitMix64 rng(0xacce55);
  std::size_t instances = 0;
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  while (instances < 240) {
    const std::size_t n = 4 + rng() % 9;
    const double m = 2.0 + unit_uniform(rng) * (0.7 * static_cast<double>(n) - 2.0);
    Network net = [&] {
      try {
        return generate_connected_random_unit_disk(n, m, rng() % 2 == 0, rng(), 50);
      } catch (const DisconnectedError&) {
        return Network({{0, 0}}, 1.0, false, 1.0, {});
      }
    }();
    if (net.size() < 2) continue;
    ++instances;
    for (std::size_t s = 0; s < n; ++s) {
      const auto ra = random_integer_rates(net, node_at(s), rng);
      MinCutSolver solver(net, ra);
      for (std::size_t t = 0; t < n; ++t) {
        if (s == t) continue;
        ++pairs;
        if (solver.cut(node_at(s), node_at(t)).capacity !=
            brute_force_min_cut(net, ra, node_at(s), node_at(t)).capacity) {
          ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0, std::to_string(instances) + " instances, " + std::to_string(pairs) +
                               " (s,t) pairs, " + std::to_string(mismatches) + " mismatches"};
}

// 2. plane lattice border effect under uniform rates
Outcome border_effect() {
  const Network net = generate_lattice(20, 1, false);
  const NodeId s = pick_source(net);
  const auto bc = broadcast_capacity(net, rates_iron(net, s, 4.0), s);
  bool ok = true;
  double corner_max = 0.0;
  double corner_min = 1e9;
  double inner_min = 1e9;
  double inner_max = 0.0;
  for (const auto& d : bc.per_destination) {
    const Point& p = net.position(d.destination);
    if ((p.x == 0 || p.x == 19) && (p.y == 0 || p.y == 19)) {
      corner_min = std::min(corner_min, d.mincut);
      corner_max = std::max(corner_max, d.mincut);
      ok = ok && d.mincut == 2.0;
    }
    if (border_distance(net, d.destination) >= 2.0) {
      inner_min = std::min(inner_min, d.mincut);
      inner_max = std::max(inner_max, d.mincut);
      ok = ok && d.mincut == 4.0;
    }
  }
  return {ok, "corners in [" + fmt(corner_min) + ", " + fmt(corner_max) + "], border distance >= 2 in [" +
                  fmt(inner_min) + ", " + fmt(inner_max) + "]"};
}

// 3. IR-MS on torus lattices: capacity M and surrogate efficiency
Outcome torus_irms() {
  bool ok = true;
  std::string detail;
  for (int k : {1, 2}) {
    const Network net = generate_lattice(14, k, true);
    const NodeId s = pick_source(net);
    const double m = static_cast<double>(lattice_degree(k));
    const auto ra = rates_irms(net, s, m);
    const auto bc = broadcast_capacity(net, ra, s);
    const auto rep = make_cost_report(ra, bc.value, surrogate_optimal(net));
    const bool cap_ok = bc.value == m;
    const bool eff_ok = *rep.e_rel_eff >= 0.95;
    ok = ok && cap_ok && eff_ok;
    detail += (detail.empty() ? "" : "; ") + std::string("radius ") + std::to_string(k) + ": capacity " +
              fmt(bc.value) + " (M=" + fmt(m) + "), surrogate efficiency " + fmt(*rep.e_rel_eff);
  }
  return {ok, detail};
}

// 4. IR-MS received rate >= M on every instance of every preset
Outcome received_rate_invariant() {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  double worst = 1e9;
  for (const auto& name : preset_names()) {
    const auto cfg = *preset(name);
    for (const auto& key : enumerate_instances(cfg)) {
      std::optional<Network> net;
      try {
        net.emplace(generate_instance(key));
      } catch (const DisconnectedError&) {
        ++skipped;
        continue;
      }
      const NodeId s = pick_source(*net);
      const auto ra = rates_irms(*net, s, key.m);
      for (std::size_t v = 0; v < net->size(); ++v) {
        const double r = received_rate(*net, ra, node_at(v)) - key.m;
        worst = std::min(worst, r);
        if (r < -1e-9) ++violations;
      }
      ++checked;
    }
  }
  return {violations == 0 && checked > 0,
          std::to_string(checked) + " instances (" + std::to_string(skipped) +
              " disconnected, skipped), min received - M = " + fmt(worst) + ", " + std::to_string(violations) +
              " violations"};
}

// 5. LP optimum is tight and beats every heuristic and baseline
Outcome lp_self_consistency() {
  std::size_t instances = 0;
  std::size_t failures = 0;
  double worst_dev = 0.0;
  for (std::uint64_t seed = 1; instances < 40; ++seed) {
    const std::size_t n = 6 + seed % 10;
    const double m = std::min(3.0 + static_cast<double>(seed % 4), 0.6 * static_cast<double>(n));
    Network net = [&] {
      try {
        return generate_connected_random_unit_disk(n, m, seed % 3 == 0, seed, 200);
      } catch (const DisconnectedError&) {
        return Network({{0, 0}}, 1.0, false, 1.0, {});
      }
    }();
    if (net.size() < 2) continue;
    ++instances;
    const NodeId s = pick_source(net);
    const LpSolution sol = solve_lp(build_lp(net, s));
    if (sol.status != LpStatus::optimal) {
      ++failures;
      continue;
    }
    const double cap = broadcast_capacity(net, sol.rates(s), s).value;
    worst_dev = std::max(worst_dev, std::abs(cap - 1.0));
    bool ok = std::abs(cap - 1.0) <= 1e-6;
    for (Heuristic h : {Heuristic::iron, Heuristic::iren_iron, Heuristic::irms}) {
      const auto ra = assign_rates(h, net, s, m);
      ok = ok && sol.objective <= cost_per_broadcast(ra, broadcast_capacity(net, ra, s).value) + 1e-9;
    }
    ok = ok && sol.objective <= flooding_cost(mpr_cds(net, s)) + 1e-9;
    ok = ok && sol.objective <= flooding_cost(greedy_cds(net, s)) + 1e-9;
    if (!ok) ++failures;
  }
  return {failures == 0, std::to_string(instances) + " instances, max |capacity(z*) - 1| = " + fmt(worst_dev) +
                             ", " + std::to_string(failures) + " failures"};
}

ExperimentConfig random_plane_config(std::string suite, std::size_t n, std::vector<double> ms, std::size_t seeds) {
  ExperimentConfig cfg;
  cfg.suite = std::move(suite);
  cfg.families = {{Family::random, false}};
  cfg.sizes = {n};
  cfg.densities = std::move(ms);
  cfg.seed_count = seeds;
  cfg.heuristics = {Heuristic::irms};
  cfg.lp = LpMode::builtin;
  return cfg;
}

// 6. mean IR-MS relative efficiency against the no-coding bound
Outcome no_coding_bound() {
  const auto report = run_suite(random_plane_config("no-coding-bound", 50, {12, 20}, 10));
  bool ok = report.skipped.empty();
  std::string detail;
  for (const auto& a : report.aggregates) {
    if (a.heuristic != "IR-MS") continue;
    const bool pass = a.mean_e_rel_eff && a.count == 10 && *a.mean_e_rel_eff > kNoCodingEfficiencyBound;
    ok = ok && pass;
    detail += (detail.empty() ? "" : "; ") + std::string("M=") + fmt(a.m) + ": mean e_rel_eff " +
              (a.mean_e_rel_eff ? fmt(*a.mean_e_rel_eff) : "n/a") + " over " + std::to_string(a.count) +
              " seeds (bound " + fmt(kNoCodingEfficiencyBound) + ")";
  }
  return {ok, detail};
}

// 7. IR-MS min-cut distribution dominates IRON's
Outcome cdf_tightening() {
  bool ok = true;
  std::string detail;
  const auto cfg = random_plane_config("cdf", 400, {20}, 5);
  for (const auto& key : enumerate_instances(cfg)) {
    const Network net = generate_instance(key);
    const NodeId s = pick_source(net);
    const auto iron = broadcast_capacity(net, rates_iron(net, s, 20.0), s);
    const auto irms = broadcast_capacity(net, rates_irms(net, s, 20.0), s);
    const bool dom = stochastically_dominates(mincut_cdf(irms.per_destination), mincut_cdf(iron.per_destination));
    const bool min_up = irms.value > iron.value;
    ok = ok && dom && min_up;
    detail += (detail.empty() ? "" : "; ") + std::string(dom ? "dominates" : "NOT dominating") + ", min " +
              fmt(irms.value) + " vs " + fmt(iron.value);
  }
  return {ok, detail};
}

// 8. E_cost ordering LP <= IR-MS <= MPR dominating set flooding
Outcome heuristic_ordering() {
  auto cfg = random_plane_config("ordering", 200, {12, 20, 28}, 10);
  cfg.baselines = true;
  const auto report = run_suite(cfg);
  std::map<double, std::map<std::string, double>> mean;
  for (const auto& a : report.aggregates) mean[a.m][a.heuristic] = a.mean_e_cost;
  bool ok = report.skipped.empty();
  std::string detail;
  for (auto& [m, by] : mean) {
    const bool pass = by.count("LP-optimal") && by["LP-optimal"] <= by["IR-MS"] && by["IR-MS"] <= by["mpr-cds"];
    ok = ok && pass;
    detail += (detail.empty() ? "" : "; ") + std::string("M=") + fmt(m) + ": LP " + fmt(by["LP-optimal"]) +
              ", IR-MS " + fmt(by["IR-MS"]) + ", mpr-cds " + fmt(by["mpr-cds"]) + ", greedy-cds " +
              fmt(by["greedy-cds"]);
  }
  return {ok, detail};
}

std::string read_all(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 9. reruns write byte-identical CSV files
Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "ncast_acceptance_determinism";
  std::size_t compared = 0;
  std::vector<std::string> differing;
  for (const auto& name : preset_names()) {
    auto cfg = *preset(name);
    // two replicates per point keep the large presets affordable; the LP stays
    // on for presets up to N=200
    cfg.seed_count = 2;
    if (cfg.sizes.back() > 200) cfg.lp = LpMode::off;
    std::string first;
    for (int run = 0; run < 2; ++run) {
      const fs::path dir = root / (name + "_" + std::to_string(run));
      fs::remove_all(dir);
      auto c = cfg;
      c.jobs = run == 0 ? 1 : 2;
      write_report(run_suite(c), dir.string());
      std::string bytes;
      for (const char* f : {"summary.csv", "aggregate.csv", "skipped.csv", "plot.gp"}) bytes += read_all(dir / f);
      if (run == 0) {
        first = std::move(bytes);
      } else if (bytes != first) {
        differing.push_back(name);
      }
    }
    ++compared;
  }
  fs::remove_all(root);
  std::string detail = std::to_string(compared) + " presets rerun (2 replicates, 1 vs 2 threads)";
  for (const auto& d : differing) detail += ", differs: " + d;
  return {differing.empty(), detail};
}

// 10. stored sparse-cut fixture
Outcome sparse_cut() {
  const auto rep = regression_sparse_cut();
  std::string frontier;
  for (NodeId v : rep.frontier) frontier += (frontier.empty() ? "" : ",") + std::to_string(index(v));
  return {rep.passed(), "IR-MS capacity " + fmt(rep.capacity) + " < M=" + fmt(rep.density) + ", frontier {" + frontier +
                            "}" + (rep.frontier_matches() ? " matches stored" : " differs from stored") +
                            ", restored capacity " + fmt(rep.restored_capacity)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "min-cut oracle equivalence", oracle_equivalence},
      {2, "lattice border effect", border_effect},
      {3, "IR-MS on torus lattices", torus_irms},
      {4, "IR-MS received-rate invariant", received_rate_invariant},
      {5, "LP self-consistency", lp_self_consistency},
      {6, "no-coding bound comparison", no_coding_bound},
      {7, "min-cut CDF tightening", cdf_tightening},
      {8, "heuristic ordering", heuristic_ordering},
      {9, "determinism", determinism},
      {10, "sparse-cut regression", sparse_cut},
  };
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::stoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail << " ["
              << fmt(secs, 3) << " s]" << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
