#ifndef NCAST_EXPERIMENT_HPP
#define NCAST_EXPERIMENT_HPP

// Batch experiments: instance generation over (family, N, M, replicate),
// heuristic evaluation, no-coding baselines, optional LP optimum, and the
// CSV/gnuplot outputs.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "ncast/baselines.hpp"
#include "ncast/format.hpp"
#include "ncast/lp.hpp"
#include "ncast/metrics.hpp"
#include "ncast/mincut.hpp"
#include "ncast/network.hpp"
#include "ncast/rates.hpp"
#include "ncast/sparse_cut_fixture.hpp"
#include "ncast/topology_io.hpp"

namespace ncast {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilySpec {
  Family family = Family::random;
  bool torus = false;

  std::string name() const {
    return std::string(to_string(family)) + (torus ? "-torus" : "-plane");
  }
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline FamilySpec family_spec_from_string(std::string_view s) {
  if (s == "random-plane") return {Family::random, false};
  if (s == "random-torus") return {Family::random, true};
  if (s == "lattice-plane") return {Family::lattice, false};
  if (s == "lattice-torus") return {Family::lattice, true};
  throw ConfigError("unknown family: " + std::string(s));
}

enum class LpMode { builtin, export_files, off };

inline std::string_view to_string(LpMode m) {
  switch (m) {
    case LpMode::builtin: return "builtin";
    case LpMode::export_files: return "export";
    case LpMode::off: return "off";
  }
  return "?";
}

inline LpMode lp_mode_from_string(std::string_view s) {
  if (s == "builtin") return LpMode::builtin;
  if (s == "export") return LpMode::export_files;
  if (s == "off") return LpMode::off;
  throw ConfigError("unknown lp mode: " + std::string(s));
}

struct ExperimentConfig {
  std::string suite = "custom";
  std::vector<FamilySpec> families;
  std::vector<std::size_t> sizes;
  std::vector<double> densities;
  std::size_t seed_count = 10;
  std::uint64_t base_seed = 1;
  std::vector<Heuristic> heuristics{Heuristic::irms};
  bool baselines = false;
  LpMode lp = LpMode::off;
  std::string out_dir;
  bool dump_topology = false;
  unsigned jobs = 1;
  bool long_running = false;

  void validate() const {
    if (families.empty()) throw ConfigError("config: families is empty");
    if (sizes.empty()) throw ConfigError("config: N is empty");
    if (densities.empty()) throw ConfigError("config: M is empty");
    if (heuristics.empty()) throw ConfigError("config: heuristics is empty");
    if (seed_count < 1) throw ConfigError("config: seeds must be >= 1");
    if (jobs < 1) throw ConfigError("config: jobs must be >= 1");
    for (double m : densities) {
      if (!(m > 0.0)) throw ConfigError("config: M must be positive");
    }
    for (const auto& f : families) {
      if (f.family != Family::lattice) continue;
      for (std::size_t n : sizes) {
        const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
        if (side * side != n) throw ConfigError("config: lattice N must be a perfect square");
      }
      for (double m : densities) {
        if (lattice_radius_for_degree(m) == 0) {
          throw ConfigError("config: lattice M must be one of 4, 12, 28, 48, 80, ...");
        }
      }
    }
  }

  /// Radius k whose lattice degree equals m, or 0 when none does.
  static int lattice_radius_for_degree(double m) {
    for (int k = 1; k <= 64; ++k) {
      const auto deg = static_cast<double>(lattice_degree(k));
      if (deg == m) return k;
      if (deg > m) break;
    }
    return 0;
  }
};

// ---------------------------------------------------------------------------
// Presets

inline std::vector<std::string> preset_names() {
  return {"fig-efficiency", "fig-cost-N200", "fig-cost-M20", "fig-N400",
          "fig-N800",       "fig-torus-N200", "fig-torus-N400", "smoke"};
}

inline std::optional<ExperimentConfig> preset(std::string_view name) {
  ExperimentConfig c;
  c.suite = std::string(name);
  const FamilySpec random_plane{Family::random, false};
  const FamilySpec random_torus{Family::random, true};
  const std::vector<double> sweep{8, 12, 16, 20, 24, 28};
  auto cost_suite = [&](FamilySpec fam, std::vector<std::size_t> sizes, std::vector<double> ms) {
    c.families = {fam};
    c.sizes = std::move(sizes);
    c.densities = std::move(ms);
    c.heuristics = {Heuristic::iron, Heuristic::irms};
    c.baselines = true;
    c.lp = LpMode::builtin;
  };
  if (name == "fig-efficiency") {
    c.families = {{Family::lattice, true}, {Family::lattice, false}, random_torus, random_plane};
    c.sizes = {196};
    c.densities = {4, 12, 28, 48, 80};
    c.heuristics = {Heuristic::irms};
    c.lp = LpMode::builtin;
  } else if (name == "fig-cost-N200") {
    cost_suite(random_plane, {200}, sweep);
  } else if (name == "fig-cost-M20") {
    // N values approximate the figure's x axis
    cost_suite(random_plane, {100, 200, 400, 800}, {20});
    c.long_running = true;
  } else if (name == "fig-N400") {
    cost_suite(random_plane, {400}, sweep);
  } else if (name == "fig-N800") {
    cost_suite(random_plane, {800}, sweep);
    c.long_running = true;
  } else if (name == "fig-torus-N200") {
    cost_suite(random_torus, {200}, sweep);
  } else if (name == "fig-torus-N400") {
    cost_suite(random_torus, {400}, sweep);
  } else if (name == "smoke") {
    c.families = {random_plane, {Family::lattice, true}};
    c.sizes = {49};
    c.densities = {12};
    c.seed_count = 3;
    c.heuristics = {Heuristic::iron, Heuristic::iren_iron, Heuristic::irms};
    c.baselines = true;
    c.lp = LpMode::builtin;
  } else {
    return std::nullopt;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Config files: flat key=value, '#' comments, lists as a,b,c.

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    auto item = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline bool parse_bool(std::string_view s) {
  if (s == "1" || s == "true" || s == "on" || s == "yes") return true;
  if (s == "0" || s == "false" || s == "off" || s == "no") return false;
  throw ConfigError("not a boolean: " + std::string(s));
}

}  // namespace detail

/// Applies one key=value setting.
inline void apply_setting(ExperimentConfig& c, std::string_view key, std::string_view value) {
  using detail::split_list;
  try {
    if (key == "suite") {
      c.suite = std::string(value);
    } else if (key == "families") {
      c.families.clear();
      for (const auto& f : split_list(value)) c.families.push_back(family_spec_from_string(f));
    } else if (key == "N") {
      c.sizes.clear();
      for (const auto& v : split_list(value)) c.sizes.push_back(parse_integer<std::size_t>(v));
    } else if (key == "M") {
      c.densities.clear();
      for (const auto& v : split_list(value)) c.densities.push_back(parse_double(v));
    } else if (key == "seeds") {
      c.seed_count = parse_integer<std::size_t>(value);
    } else if (key == "base_seed" || key == "seed") {
      c.base_seed = parse_integer<std::uint64_t>(value);
    } else if (key == "heuristics") {
      c.heuristics.clear();
      for (const auto& h : split_list(value)) c.heuristics.push_back(heuristic_from_string(h));
    } else if (key == "baselines") {
      c.baselines = detail::parse_bool(value);
    } else if (key == "lp") {
      c.lp = lp_mode_from_string(value);
    } else if (key == "out") {
      c.out_dir = std::string(value);
    } else if (key == "dump_topo") {
      c.dump_topology = detail::parse_bool(value);
    } else if (key == "jobs") {
      c.jobs = parse_integer<unsigned>(value);
    } else {
      throw ConfigError("unknown config key: " + std::string(key));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError("config: bad value for " + std::string(key) + ": " + e.what());
  }
}

inline ExperimentConfig parse_config(std::istream& is, ExperimentConfig base = {}) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto text = detail::trim(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    apply_setting(base, detail::trim(std::string_view(text).substr(0, eq)),
                  detail::trim(std::string_view(text).substr(eq + 1)));
  }
  return base;
}

// ---------------------------------------------------------------------------
// Instances

struct InstanceKey {
  FamilySpec family;
  std::size_t n = 0;
  double m = 0.0;
  std::size_t replicate = 0;
  std::uint64_t seed = 0;

  std::string label() const {
    return family.name() + "_N" + std::to_string(n) + "_M" + format_double(m) + "_seed" +
           std::to_string(seed);
  }
};

/// Mixes the base seed with the instance coordinates.
inline std::uint64_t derive_seed(std::uint64_t base, const FamilySpec& f, std::size_t n, double m,
                                 std::size_t replicate) {
  std::uint64_t h = mix64(base);
  h = mix64(h ^ (static_cast<std::uint64_t>(f.family == Family::lattice) << 1 |
                 static_cast<std::uint64_t>(f.torus)));
  h = mix64(h ^ static_cast<std::uint64_t>(n));
  h = mix64(h ^ std::bit_cast<std::uint64_t>(m));
  h = mix64(h ^ static_cast<std::uint64_t>(replicate));
  return h;
}

inline std::vector<InstanceKey> enumerate_instances(const ExperimentConfig& cfg) {
  std::vector<InstanceKey> keys;
  for (const auto& f : cfg.families) {
    for (std::size_t n : cfg.sizes) {
      for (double m : cfg.densities) {
        for (std::size_t r = 0; r < cfg.seed_count; ++r) {
          keys.push_back({f, n, m, r, derive_seed(cfg.base_seed, f, n, m, r)});
        }
      }
    }
  }
  return keys;
}

/// Lattice instances ignore the seed; random instances are regenerated until
/// connected (DisconnectedError after the retry budget).
inline Network generate_instance(const InstanceKey& key) {
  if (key.family.family == Family::lattice) {
    const int side = static_cast<int>(std::llround(std::sqrt(static_cast<double>(key.n))));
    const int radius = ExperimentConfig::lattice_radius_for_degree(key.m);
    if (side * side != static_cast<int>(key.n) || radius == 0) {
      throw ConfigError("no lattice with N=" + std::to_string(key.n) + " M=" + format_double(key.m));
    }
    return generate_lattice(side, radius, key.family.torus);
  }
  return generate_connected_random_unit_disk(key.n, key.m, key.family.torus, key.seed);
}

struct SummaryRow {
  InstanceKey key;
  std::string heuristic;
  CostReport report;
  std::optional<double> e_opt;
  std::string opt_kind;
};

struct SkippedInstance {
  InstanceKey key;
  std::string reason;
};

struct AggregateRow {
  FamilySpec family;
  std::size_t n = 0;
  double m = 0.0;
  std::string heuristic;
  std::size_t count = 0;
  double mean_e_cost = 0.0;
  double sd_e_cost = 0.0;
  double mean_capacity = 0.0;
  std::optional<double> mean_e_rel_eff;
  std::optional<double> sd_e_rel_eff;
};

struct ExperimentReport {
  std::string suite;
  std::size_t attempted = 0;
  std::vector<SummaryRow> rows;
  std::vector<AggregateRow> aggregates;
  std::vector<SkippedInstance> skipped;
};

struct InstanceOutcome {
  std::vector<SummaryRow> rows;
  std::optional<SkippedInstance> skipped;
};

inline std::string lp_file_name(const InstanceKey& key) { return key.label() + ".lp"; }

/// Evaluates one instance: every configured heuristic, optional baselines
/// and LP optimum.
inline InstanceOutcome run_instance(const ExperimentConfig& cfg, const InstanceKey& key) {
  InstanceOutcome out;
  std::optional<Network> net;
  try {
    net.emplace(generate_instance(key));
  } catch (const DisconnectedError& e) {
    out.skipped = SkippedInstance{key, e.what()};
    return out;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    out.skipped = SkippedInstance{key, e.what()};
    return out;
  }
  const NodeId s = pick_source(*net);
  namespace fs = std::filesystem;

  if (cfg.dump_topology && !cfg.out_dir.empty()) {
    fs::create_directories(fs::path(cfg.out_dir) / "topo");
    write_topology_file((fs::path(cfg.out_dir) / "topo" / (key.label() + ".txt")).string(), *net);
  }

  std::optional<double> e_opt;
  std::string opt_kind = "none";
  std::optional<LpSolution> lp_solution;
  if (cfg.lp == LpMode::builtin) {
    LpSolution sol = solve_lp(build_lp(*net, s));
    if (sol.status == LpStatus::optimal) {
      e_opt = sol.objective;
      opt_kind = "lp";
      lp_solution = std::move(sol);
    } else {
      opt_kind = std::string(to_string(sol.status));
    }
  } else if (cfg.lp == LpMode::export_files && !cfg.out_dir.empty()) {
    fs::create_directories(fs::path(cfg.out_dir) / "lp");
    export_lp(build_lp(*net, s), (fs::path(cfg.out_dir) / "lp" / lp_file_name(key)).string());
    opt_kind = "export";
  }
  if (!e_opt && key.family.family == Family::lattice && key.family.torus) {
    e_opt = surrogate_optimal(*net);
    opt_kind = "surrogate";
  }

  for (Heuristic h : cfg.heuristics) {
    const RateAssignment ra = assign_rates(h, *net, s, key.m);
    const BroadcastCapacity bc = broadcast_capacity(*net, ra, s);
    if (!(bc.value > 0.0)) {
      out.rows.clear();
      out.skipped = SkippedInstance{key, "zero broadcast capacity"};
      return out;
    }
    out.rows.push_back({key, std::string(to_string(h)), make_cost_report(ra, bc.value, e_opt), e_opt, opt_kind});
  }
  if (cfg.baselines) {
    for (const ForwarderSet& f : {mpr_cds(*net, s), greedy_cds(*net, s)}) {
      CostReport r;
      r.total_rate = flooding_cost(f);
      r.capacity = 1.0;
      r.e_cost = r.total_rate;
      if (e_opt) r.e_rel_eff = relative_efficiency(r.e_cost, *e_opt);
      out.rows.push_back({key, std::string(to_string(f.builder)), r, e_opt, opt_kind});
    }
  }
  if (lp_solution) {
    CostReport r;
    r.total_rate = lp_solution->objective;
    r.capacity = 1.0;
    r.e_cost = lp_solution->objective;
    r.e_rel_eff = 1.0;
    out.rows.push_back({key, "LP-optimal", r, e_opt, opt_kind});
  }
  return out;
}

namespace detail {

inline std::pair<double, double> mean_and_sd(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
  return {mean, sd};
}

}  // namespace detail

/// Mean and sample standard deviation over replicates, grouped by
/// (family, N, M, heuristic) in first-appearance order.
inline std::vector<AggregateRow> aggregate(const std::vector<SummaryRow>& rows) {
  struct Group {
    AggregateRow head;
    std::vector<double> e_cost;
    std::vector<double> capacity;
    std::vector<double> e_rel;
  };
  std::vector<Group> groups;
  std::map<std::string, std::size_t> where;
  for (const auto& r : rows) {
    const std::string gk = r.key.family.name() + "|" + std::to_string(r.key.n) + "|" +
                           format_double(r.key.m) + "|" + r.heuristic;
    auto [it, inserted] = where.emplace(gk, groups.size());
    if (inserted) {
      Group g;
      g.head.family = r.key.family;
      g.head.n = r.key.n;
      g.head.m = r.key.m;
      g.head.heuristic = r.heuristic;
      groups.push_back(std::move(g));
    }
    Group& g = groups[it->second];
    g.e_cost.push_back(r.report.e_cost);
    g.capacity.push_back(r.report.capacity);
    if (r.report.e_rel_eff) g.e_rel.push_back(*r.report.e_rel_eff);
  }
  std::vector<AggregateRow> out;
  for (auto& g : groups) {
    AggregateRow a = g.head;
    a.count = g.e_cost.size();
    std::tie(a.mean_e_cost, a.sd_e_cost) = detail::mean_and_sd(g.e_cost);
    a.mean_capacity = detail::mean_and_sd(g.capacity).first;
    // efficiency is reported only when every replicate has one
    if (!g.e_rel.empty() && g.e_rel.size() == g.e_cost.size()) {
      const auto [mean, sd] = detail::mean_and_sd(g.e_rel);
      a.mean_e_rel_eff = mean;
      a.sd_e_rel_eff = sd;
    }
    out.push_back(std::move(a));
  }
  return out;
}

inline ExperimentReport run_suite(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto keys = enumerate_instances(cfg);
  std::vector<InstanceOutcome> outcomes(keys.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(keys.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < keys.size(); ++i) outcomes[i] = run_instance(cfg, keys[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < keys.size(); i = next++) {
            try {
              outcomes[i] = run_instance(cfg, keys[i]);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  ExperimentReport report;
  report.suite = cfg.suite;
  report.attempted = keys.size();
  for (auto& o : outcomes) {
    if (o.skipped) report.skipped.push_back(std::move(*o.skipped));
    for (auto& r : o.rows) report.rows.push_back(std::move(r));
  }
  report.aggregates = aggregate(report.rows);
  return report;
}

/// Instances that produced rows; with skipped ones this adds up to attempted.
inline std::size_t reported_instances(const ExperimentReport& report) {
  std::size_t count = 0;
  std::string prev;
  for (const auto& r : report.rows) {
    auto label = r.key.label();
    if (label != prev) ++count;
    prev = std::move(label);
  }
  return count;
}

// ---------------------------------------------------------------------------
// Report files

inline void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
  os << "family,N,M,torus,seed,heuristic,total_rate,capacity,e_cost,e_opt,e_rel_eff,opt_kind\n";
  for (const auto& r : rows) {
    os << to_string(r.key.family.family) << ',' << r.key.n << ',' << format_double(r.key.m) << ','
       << (r.key.family.torus ? 1 : 0) << ',' << r.key.seed << ',' << r.heuristic << ','
       << format_double(r.report.total_rate) << ',' << format_double(r.report.capacity) << ','
       << format_double(r.report.e_cost) << ',' << format_optional(r.e_opt) << ','
       << format_optional(r.report.e_rel_eff) << ',' << r.opt_kind << '\n';
  }
}

inline void write_aggregate_csv(std::ostream& os, const std::vector<AggregateRow>& rows) {
  os << "family,N,M,torus,heuristic,count,mean_e_cost,sd_e_cost,mean_capacity,mean_e_rel_eff,"
        "sd_e_rel_eff,no_coding_bound\n";
  for (const auto& a : rows) {
    os << to_string(a.family.family) << ',' << a.n << ',' << format_double(a.m) << ','
       << (a.family.torus ? 1 : 0) << ',' << a.heuristic << ',' << a.count << ','
       << format_double(a.mean_e_cost) << ',' << format_double(a.sd_e_cost) << ','
       << format_double(a.mean_capacity) << ',' << format_optional(a.mean_e_rel_eff) << ','
       << format_optional(a.sd_e_rel_eff) << ',' << format_double(kNoCodingEfficiencyBound) << '\n';
  }
}

inline void write_skipped_csv(std::ostream& os, const std::vector<SkippedInstance>& rows) {
  os << "family,N,M,torus,seed,reason\n";
  for (const auto& s : rows) {
    os << to_string(s.key.family.family) << ',' << s.key.n << ',' << format_double(s.key.m) << ','
       << (s.key.family.torus ? 1 : 0) << ',' << s.key.seed << ',' << s.reason << '\n';
  }
}

/// Sample gnuplot script over aggregate.csv: mean E_cost against M, one curve
/// per heuristic and family.
inline void write_gnuplot_script(std::ostream& os, const ExperimentReport& report) {
  os << "# gnuplot -persist plot.gp\n"
     << "set datafile separator ','\n"
     << "set key outside right\n"
     << "set xlabel 'M (average neighbors)'\n"
     << "set ylabel 'transmissions per broadcast packet'\n"
     << "set title '" << report.suite << "'\n";
  std::vector<std::string> series;
  for (const auto& a : report.aggregates) {
    const std::string name = a.family.name() + " N=" + std::to_string(a.n) + " " + a.heuristic;
    if (std::find(series.begin(), series.end(), name) == series.end()) series.push_back(name);
  }
  os << "plot \\\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& a = *std::find_if(report.aggregates.begin(), report.aggregates.end(), [&](const AggregateRow& r) {
      return r.family.name() + " N=" + std::to_string(r.n) + " " + r.heuristic == series[i];
    });
    os << "  'aggregate.csv' using ($2==" << a.n << " && strcol(1) eq '" << to_string(a.family.family)
       << "' && $4==" << (a.family.torus ? 1 : 0) << " && strcol(5) eq '" << a.heuristic
       << "' ? $3 : 1/0):7:8 with yerrorlines title '" << series[i] << "'"
       << (i + 1 < series.size() ? ", \\\n" : "\n");
  }
}

inline void write_report(const ExperimentReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream f(fs::path(dir) / name);
    if (!f) throw std::runtime_error("cannot write " + (fs::path(dir) / name).string());
    return f;
  };
  {
    auto f = open("summary.csv");
    write_summary_csv(f, report.rows);
  }
  {
    auto f = open("aggregate.csv");
    write_aggregate_csv(f, report.aggregates);
  }
  {
    auto f = open("skipped.csv");
    write_skipped_csv(f, report.skipped);
  }
  {
    auto f = open("plot.gp");
    write_gnuplot_script(f, report);
  }
}

// ---------------------------------------------------------------------------
// Single instance

struct SingleRun {
  Network network;
  RateAssignment rates;
  CostReport report;
  BroadcastCapacity capacity;
};

/// One instance end to end, with the seed used as given (no derivation).
inline SingleRun run_single(Family family, std::size_t n, double m, bool torus, std::uint64_t seed,
                            Heuristic heuristic, unsigned jobs = 1) {
  InstanceKey key{{family, torus}, n, m, 0, seed};
  Network net = generate_instance(key);
  const NodeId s = pick_source(net);
  RateAssignment ra = assign_rates(heuristic, net, s, m);
  BroadcastCapacity bc = broadcast_capacity(net, ra, s, jobs);
  CostReport report = make_cost_report(ra, bc.value);
  return {std::move(net), std::move(ra), report, std::move(bc)};
}

// ---------------------------------------------------------------------------
// Sparse-cut regression

struct SparseCutReport {
  double density = 0.0;
  double capacity = 0.0;
  NodeId argmin{};
  std::vector<NodeId> frontier;
  std::vector<NodeId> stored_frontier;
  double restored_capacity = 0.0;

  bool frontier_matches() const { return frontier == stored_frontier; }
  bool below_target() const { return capacity < density; }
  bool restored() const { return restored_capacity >= 0.75 * density; }
  bool passed() const {
    return below_target() && frontier_matches() && frontier.size() <= 3 && restored();
  }
};

inline Network sparse_cut_fixture() {
  std::istringstream in{std::string(fixtures::kSparseCutTopology)};
  return read_topology(in);
}

/// IR-MS on the stored corner-pocket topology: capacity below M, the argmin
/// witness cut's frontier, and the capacity once the frontier sends at M.
inline SparseCutReport regression_sparse_cut(const Network& net = sparse_cut_fixture()) {
  SparseCutReport rep;
  rep.density = fixtures::kSparseCutDensity;
  for (unsigned v : fixtures::kSparseCutFrontier) rep.stored_frontier.push_back(node_at(v));
  const NodeId s = pick_source(net);
  RateAssignment ra = rates_irms(net, s, rep.density);
  const BroadcastCapacity bc = broadcast_capacity(net, ra, s);
  rep.capacity = bc.value;
  rep.argmin = bc.argmin;
  rep.frontier = cut_frontier(net, membership(net, bc.argmin_cut.source_side));
  for (NodeId v : rep.frontier) ra.rates[index(v)] = std::max(ra.rates[index(v)], rep.density);
  rep.restored_capacity = broadcast_capacity(net, ra, s).value;
  return rep;
}

}  // namespace ncast

#endif  // NCAST_EXPERIMENT_HPP
