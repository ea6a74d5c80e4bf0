// Command-line front end: topology generation, rate assignment, min-cut
// analysis, experiment suites and the sparse-cut regression.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncast/ncast.hpp"

namespace fs = std::filesystem;
using namespace ncast;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSkipped = 2;
constexpr int kExitRegression = 3;

struct InstanceArgs {
  std::string topology_file;
  std::string family = "random";
  bool torus = false;
  std::size_t n = 196;
  double m = 12;
  std::uint64_t seed = 1;

  void attach(CLI::App& app) {
    app.add_option("--topo", topology_file, "read the topology from a file instead of generating one");
    app.add_option("--family", family, "random or lattice")->check(CLI::IsMember({"random", "lattice"}));
    app.add_flag("--torus", torus, "wrap-around edges");
    app.add_option("-N,--nodes", n, "number of nodes (a perfect square for lattices)");
    app.add_option("-M,--density", m, "average neighbors; lattice degree 4, 12, 28, ...");
    app.add_option("--seed", seed, "generator seed (random family)");
  }

  Network load() const {
    if (!topology_file.empty()) return read_topology_file(topology_file);
    InstanceKey key{{family_from_string(family), torus}, n, m, 0, seed};
    return generate_instance(key);
  }
};

void write_file(const fs::path& path, auto&& writer) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  writer(f);
}

// With no path the output goes to stdout.
void emit(const std::string& path, auto&& writer) {
  if (path.empty()) {
    writer(std::cout);
  } else {
    write_file(path, writer);
  }
}

RateAssignment rates_for(const Network& net, const std::string& rates_file, const std::string& heuristic,
                         double m) {
  if (!rates_file.empty()) {
    std::ifstream f(rates_file);
    if (!f) throw std::runtime_error("cannot read " + rates_file);
    RateAssignment ra = read_rates_csv(f);
    ra.validate(net);
    return ra;
  }
  return assign_rates(heuristic_from_string(heuristic), net, pick_source(net), m);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rate selection and min-cut analysis for coded wireless broadcast"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a topology");
  InstanceArgs gen_args;
  gen_args.attach(*gen);
  std::string gen_out;
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  // rates
  auto* rates = app.add_subcommand("rates", "assign transmission rates");
  InstanceArgs rates_args;
  rates_args.attach(*rates);
  std::string rates_heuristic = "IR-MS";
  std::string rates_out;
  rates->add_option("--heuristic", rates_heuristic, "IRON, IREN-IRON or IR-MS");
  rates->add_option("-o,--out", rates_out, "output CSV (default stdout)");

  // mincut
  auto* mincut = app.add_subcommand("mincut", "per-destination min-cuts, CDF and border statistics");
  InstanceArgs cut_args;
  cut_args.attach(*mincut);
  std::string cut_heuristic = "IR-MS";
  std::string cut_rates;
  std::string cut_out;
  std::string cut_lp = "off";
  unsigned cut_jobs = 1;
  double bucket_width = 0.5;
  mincut->add_option("--heuristic", cut_heuristic, "IRON, IREN-IRON or IR-MS");
  mincut->add_option("--rates", cut_rates, "rates CSV to evaluate instead of a heuristic");
  mincut->add_option("-o,--out", cut_out, "directory for surface.csv, cdf.csv, border.csv");
  mincut->add_option("--lp", cut_lp, "optimum: builtin, export or off")
      ->check(CLI::IsMember({"builtin", "export", "off"}));
  mincut->add_option("--jobs", cut_jobs, "worker threads")->check(CLI::PositiveNumber);
  mincut->add_option("--bucket-width", bucket_width, "border bucket width in radio ranges");
  bool cut_dump = false;
  mincut->add_flag("--dump-topo", cut_dump, "also write topology.txt");

  // suite
  auto* suite = app.add_subcommand("suite", "run an experiment suite");
  std::string suite_name;
  std::string suite_out;
  std::optional<std::string> suite_lp;
  std::optional<unsigned> suite_jobs;
  std::optional<std::uint64_t> suite_seed;
  std::optional<std::size_t> suite_seeds;
  bool suite_dump = false;
  std::vector<std::string> suite_set;
  suite->add_option("suite", suite_name, "preset name or key=value config file")->required();
  suite->add_option("-o,--out", suite_out, "output directory (default out/<suite>)");
  suite->add_option("--lp", suite_lp, "builtin, export or off")->check(CLI::IsMember({"builtin", "export", "off"}));
  suite->add_option("--jobs", suite_jobs, "concurrent instances")->check(CLI::PositiveNumber);
  suite->add_option("--seed", suite_seed, "base seed");
  suite->add_option("--seeds", suite_seeds, "replicates per (family, N, M)");
  suite->add_flag("--dump-topo", suite_dump, "write topo/<instance>.txt");
  suite->add_option("--set", suite_set, "extra key=value overrides");

  // regress
  auto* regress = app.add_subcommand("regress", "sparse-cut regression on the stored fixture");
  std::string regress_out;
  regress->add_option("-o,--out", regress_out, "directory for the fixture topology and rates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*gen) {
      const Network net = gen_args.load();
      emit(gen_out, [&](std::ostream& os) { write_topology(os, net); });
      std::cerr << "nodes=" << net.size() << " radio_range=" << format_double(net.radio_range())
                << " mean_degree=" << format_double(net.mean_degree()) << '\n';
      return kExitOk;
    }

    if (*rates) {
      const Network net = rates_args.load();
      const RateAssignment ra = rates_for(net, "", rates_heuristic, rates_args.m);
      emit(rates_out, [&](std::ostream& os) {
        write_rates_csv(os, ra, to_string(heuristic_from_string(rates_heuristic)), rates_args.m);
      });
      return kExitOk;
    }

    if (*mincut) {
      const Network net = cut_args.load();
      const RateAssignment ra = rates_for(net, cut_rates, cut_heuristic, cut_args.m);
      const BroadcastCapacity bc = broadcast_capacity(net, ra, ra.source, cut_jobs);
      std::optional<double> e_opt;
      if (cut_lp == "builtin") {
        const LpSolution sol = solve_lp(build_lp(net, ra.source));
        if (sol.status == LpStatus::optimal) e_opt = sol.objective;
        else std::cerr << "lp: " << to_string(sol.status) << '\n';
      } else if (cut_lp == "export") {
        const fs::path path = fs::path(cut_out.empty() ? "." : cut_out) / "instance.lp";
        if (path.has_parent_path()) fs::create_directories(path.parent_path());
        export_lp(build_lp(net, ra.source), path.string());
      }
      std::cout << "source=" << index(ra.source) << " capacity=" << format_double(bc.value)
                << " argmin=" << index(bc.argmin) << " total_rate=" << format_double(ra.total());
      if (bc.value > 0.0) {
        const CostReport rep = make_cost_report(ra, bc.value, e_opt);
        std::cout << " e_cost=" << format_double(rep.e_cost);
        if (rep.e_rel_eff) {
          std::cout << " e_opt=" << format_double(*e_opt) << " e_rel_eff=" << format_double(*rep.e_rel_eff);
        }
      }
      std::cout << '\n';
      if (!cut_out.empty()) {
        const fs::path dir(cut_out);
        write_file(dir / "surface.csv", [&](std::ostream& os) { write_surface_csv(os, net, bc.per_destination); });
        write_file(dir / "cdf.csv", [&](std::ostream& os) { write_cdf_csv(os, mincut_cdf(bc.per_destination)); });
        if (!net.torus()) {
          write_file(dir / "border.csv", [&](std::ostream& os) {
            write_border_csv(os, border_distance_stats(net, bc.per_destination, bucket_width));
          });
        }
        if (cut_dump) write_topology_file((dir / "topology.txt").string(), net);
      }
      return kExitOk;
    }

    if (*suite) {
      ExperimentConfig cfg;
      if (auto p = preset(suite_name)) {
        cfg = *p;
      } else if (fs::is_regular_file(suite_name)) {
        std::ifstream f(suite_name);
        cfg.suite = fs::path(suite_name).stem().string();
        cfg = parse_config(f, cfg);
      } else {
        std::cerr << "unknown suite '" << suite_name << "'; presets:";
        for (const auto& name : preset_names()) std::cerr << ' ' << name;
        std::cerr << '\n';
        return kExitConfig;
      }
      for (const auto& kv : suite_set) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("--set expects key=value: " + kv);
        apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
      }
      if (suite_lp) cfg.lp = lp_mode_from_string(*suite_lp);
      if (suite_jobs) cfg.jobs = *suite_jobs;
      if (suite_seed) cfg.base_seed = *suite_seed;
      if (suite_seeds) cfg.seed_count = *suite_seeds;
      if (suite_dump) cfg.dump_topology = true;
      if (!suite_out.empty()) cfg.out_dir = suite_out;
      if (cfg.out_dir.empty()) cfg.out_dir = (fs::path("out") / cfg.suite).string();
      cfg.validate();
      if (cfg.long_running) std::cerr << "note: " << cfg.suite << " is a long-running suite\n";

      const ExperimentReport report = run_suite(cfg);
      write_report(report, cfg.out_dir);
      std::cerr << "attempted=" << report.attempted << " reported=" << reported_instances(report)
                << " skipped=" << report.skipped.size() << " -> " << cfg.out_dir << '\n';
      return report.skipped.empty() ? kExitOk : kExitSkipped;
    }

    if (*regress) {
      const Network net = sparse_cut_fixture();
      const SparseCutReport rep = regression_sparse_cut(net);
      std::cout << "M=" << format_double(rep.density) << " capacity=" << format_double(rep.capacity)
                << " argmin=" << index(rep.argmin) << " frontier=";
      for (std::size_t i = 0; i < rep.frontier.size(); ++i) {
        std::cout << (i ? "," : "") << index(rep.frontier[i]);
      }
      std::cout << " restored=" << format_double(rep.restored_capacity) << '\n';
      if (!regress_out.empty()) {
        fs::create_directories(regress_out);
        write_topology_file((fs::path(regress_out) / "topology.txt").string(), net);
        write_file(fs::path(regress_out) / "rates.csv", [&](std::ostream& os) {
          write_rates_csv(os, rates_irms(net, pick_source(net), rep.density), "IR-MS", rep.density);
        });
      }
      std::cout << (rep.passed() ? "ok" : "REGRESSION") << '\n';
      return rep.passed() ? kExitOk : kExitRegression;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DisconnectedError& e) {
    std::cerr << e.what() << '\n';
    return kExitSkipped;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
  return kExitOk;
}
