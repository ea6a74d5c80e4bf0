#ifndef NCAST_LP_HPP
#define NCAST_LP_HPP

// Minimum total rate supporting unit broadcast rate with network coding.
//
//   minimize   sum_v z_v
//   subject to for every destination t != s: a unit s_in -> t_in flow f^t on
//              the node-split graph with f^t(splitter v) <= z_v.
//
// Flows of different destinations share z without adding up; that is the
// network-coding relaxation. Two solvers are provided:
//
//   * cut_generation (default): by maxflow/min-cut duality the program equals
//     min sum z s.t. sum_{v in frontier(S)} z_v >= 1 for every s-t partition.
//     Violated partitions are found with the min-cut engine and added to a
//     master program solved through its dual with a warm-started simplex.
//   * dense_flow: the flow formulation above, materialized and handed to the
//     dense two-phase simplex. Only for small instances.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncast/format.hpp"
#include "ncast/mincut.hpp"
#include "ncast/network.hpp"
#include "ncast/simplex.hpp"

namespace ncast {

enum class LpStatus { optimal, infeasible, scale_exceeded };

inline std::string_view to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::scale_exceeded: return "scale-exceeded";
  }
  return "?";
}

enum class LpMethod { cut_generation, dense_flow };

struct LpLimits {
  std::size_t max_nodes = 1024;
  std::size_t max_hyperarcs = 200'000;
  // dense_flow only
  std::size_t max_dense_variables = 6'000;
  std::size_t max_dense_rows = 4'000;
};

struct LpOptions {
  LpMethod method = LpMethod::cut_generation;
  LpLimits limits;
  double cut_tolerance = 1e-9;
  std::size_t max_rounds = 10'000;
};

struct LpSolution {
  std::vector<double> z;
  double objective = 0.0;
  LpStatus status = LpStatus::infeasible;
  std::size_t cuts = 0;    // cut_generation: master rows at termination
  std::size_t rounds = 0;  // cut_generation: separation rounds

  RateAssignment rates(NodeId source) const { return {z, source}; }
};

/// The per-destination flow program for one (network, source) pair.
class LpInstance {
 public:
  LpInstance(Network net, NodeId source) : net_(std::move(net)), source_(source) {
    if (index(source_) >= net_.size()) throw std::invalid_argument("build_lp: source out of range");
    RateAssignment unit{std::vector<double>(net_.size(), 1.0), source_};
    graph_ = expand_to_flow_graph(net_, unit);
    for (std::size_t v = 0; v < net_.size(); ++v) {
      if (node_at(v) != source_) destinations_.push_back(node_at(v));
    }
  }

  const Network& network() const noexcept { return net_; }
  NodeId source() const noexcept { return source_; }
  const FlowGraph& graph() const noexcept { return graph_; }
  const std::vector<NodeId>& destinations() const noexcept { return destinations_; }

  std::size_t node_count() const noexcept { return net_.size(); }
  std::size_t arc_count() const noexcept { return graph_.arcs.size(); }
  std::size_t var_count() const noexcept {
    return node_count() + destinations_.size() * arc_count();
  }
  std::size_t z_var(NodeId v) const noexcept { return index(v); }
  std::size_t flow_var(std::size_t dest_pos, std::size_t arc) const noexcept {
    return node_count() + dest_pos * arc_count() + arc;
  }

  std::string var_name(std::size_t var) const {
    if (var < node_count()) return "z_" + std::to_string(var);
    const std::size_t k = var - node_count();
    const std::size_t d = k / arc_count();
    return "f_" + std::to_string(index(destinations_.at(d))) + "_" +
           std::to_string(k % arc_count());
  }

  /// Conservation rows for every split vertex and destination, then the
  /// coupling rows f^t(splitter v) - z_v <= 0.
  LinearProgram to_linear_program() const {
    LinearProgram lp;
    const std::size_t nv = var_count();
    lp.objective.assign(nv, 0.0);
    for (std::size_t v = 0; v < node_count(); ++v) lp.objective[v] = 1.0;
    lp.var_names.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i) lp.var_names.push_back(var_name(i));

    const std::size_t verts = graph_.vertex_count();
    for (std::size_t d = 0; d < destinations_.size(); ++d) {
      const NodeId t = destinations_[d];
      std::vector<LinearRow> rows(verts);
      for (std::size_t w = 0; w < verts; ++w) {
        rows[w].name = "cons_" + std::to_string(index(t)) + "_" + std::to_string(w / 2) +
                       (w % 2 == 0 ? "_in" : "_out");
        rows[w].sense = RowSense::eq;
        rows[w].rhs = 0.0;
        if (w == FlowGraph::in(source_)) rows[w].rhs = -1.0;
        if (w == FlowGraph::in(t)) rows[w].rhs = 1.0;
      }
      for (std::size_t a = 0; a < arc_count(); ++a) {
        const auto& arc = graph_.arcs[a];
        rows[arc.head].terms.push_back({flow_var(d, a), 1.0});
        rows[arc.tail].terms.push_back({flow_var(d, a), -1.0});
      }
      for (auto& r : rows) {
        if (!r.terms.empty() || r.rhs != 0.0) lp.rows.push_back(std::move(r));
      }
      for (std::size_t v = 0; v < node_count(); ++v) {
        LinearRow cap;
        cap.name = "cap_" + std::to_string(index(t)) + "_" + std::to_string(v);
        cap.sense = RowSense::le;
        cap.rhs = 0.0;
        cap.terms = {{flow_var(d, FlowGraph::splitter_arc(node_at(v))), 1.0},
                     {z_var(node_at(v)), -1.0}};
        lp.rows.push_back(std::move(cap));
      }
    }
    return lp;
  }

 private:
  Network net_;
  NodeId source_;
  FlowGraph graph_;
  std::vector<NodeId> destinations_;
};

inline LpInstance build_lp(const Network& net, NodeId s) {
  if (!is_connected(net)) throw DisconnectedError("build_lp: network is disconnected");
  return LpInstance(net, s);
}

namespace detail {

// Dual of the covering master  min 1^T z  s.t.  A z >= 1, z >= 0:
//
//   max 1^T y  s.t.  A^T y <= 1, y >= 0,
//
// one row per node and one column per cut. The slack basis is feasible, and
// appending a column keeps the current basis primal feasible, so each
// separation round resumes from the previous optimum. z is read off as the
// simplex multipliers of the node rows.
class CoveringDualSimplex {
 public:
  explicit CoveringDualSimplex(std::size_t rows) : m_(rows), beta_(rows, 1.0), basis_(rows) {
    cols_.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<double> e(rows, 0.0);
      e[i] = 1.0;
      cols_.push_back(std::move(e));
      reduced_.push_back(0.0);
      supports_.push_back({i});
      basis_[i] = i;
    }
  }

  std::size_t column_count() const noexcept { return cols_.size() - m_; }

  /// New cut with frontier `support` (row ids).
  void add_column(const std::vector<std::size_t>& support) {
    std::vector<double> col(m_, 0.0);
    double red = 1.0;
    for (std::size_t r : support) {
      const auto& binv = cols_[r];  // slack columns hold B^{-1}
      for (std::size_t i = 0; i < m_; ++i) col[i] += binv[i];
      red += reduced_[r];
    }
    cols_.push_back(std::move(col));
    reduced_.push_back(red);
    supports_.push_back(support);
  }

  /// Pivots to optimality, reinverting the basis every `refactor_period`
  /// pivots and once more before returning.
  void optimize(std::size_t refactor_period = 100, std::size_t degenerate_switch = 50) {
    std::size_t degenerate_run = 0;
    std::size_t since_refactor = 0;
    for (;;) {
      const bool bland = degenerate_run >= degenerate_switch;
      std::size_t q = cols_.size();
      double best = kOptimalityTol;
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (reduced_[j] <= kOptimalityTol) continue;
        if (bland) {
          q = j;
          break;
        }
        if (reduced_[j] > best) {
          best = reduced_[j];
          q = j;
        }
      }
      if (q == cols_.size()) {
        if (since_refactor == 0) return;
        refactor();
        since_refactor = 0;
        continue;
      }
      const auto& cq = cols_[q];
      std::size_t r = m_;
      double ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        if (cq[i] <= kPivotTol) continue;
        const double t = std::max(0.0, beta_[i]) / cq[i];
        if (r == m_ || t < ratio - kPivotTol || (t <= ratio + kPivotTol && basis_[i] < basis_[r])) {
          ratio = t;
          r = i;
        }
      }
      if (r == m_) throw std::logic_error("covering dual is unbounded");
      degenerate_run = ratio <= kPivotTol ? degenerate_run + 1 : 0;
      pivot(r, q);
      if (++since_refactor >= refactor_period) {
        refactor();
        since_refactor = 0;
      }
    }
  }

  /// Multipliers of the node rows, i.e. the master's optimal z.
  std::vector<double> multipliers() const {
    std::vector<double> z(m_);
    for (std::size_t i = 0; i < m_; ++i) z[i] = std::max(0.0, -reduced_[i]);
    return z;
  }

 private:
  static constexpr double kPivotTol = 1e-9;
  static constexpr double kOptimalityTol = 1e-10;

  void pivot(std::size_t r, std::size_t q) {
    const std::vector<double> cq = cols_[q];
    const double p = cq[r];
    auto update = [&](std::vector<double>& col) {
      const double x = col[r] / p;
      if (x == 0.0) return 0.0;
      for (std::size_t i = 0; i < m_; ++i) col[i] -= x * cq[i];
      col[r] = x;
      return x;
    };
    const double rq = reduced_[q];
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (j == q) continue;
      const double x = update(cols_[j]);
      reduced_[j] -= x * rq;
    }
    update(beta_);
    std::fill(cols_[q].begin(), cols_[q].end(), 0.0);
    cols_[q][r] = 1.0;
    reduced_[q] = 0.0;
    basis_[r] = q;
  }

  // Recomputes the whole tableau from the original columns and the current
  // basis (Gauss-Jordan with partial pivoting).
  void refactor() {
    const std::size_t m = m_;
    std::vector<double> b(m * m, 0.0);
    std::vector<double> inv(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t r : supports_[basis_[i]]) b[r * m + i] = 1.0;
      inv[i * m + i] = 1.0;
    }
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < m; ++r) {
        if (std::abs(b[r * m + c]) > std::abs(b[piv * m + c])) piv = r;
      }
      if (std::abs(b[piv * m + c]) < 1e-12) throw std::logic_error("singular basis");
      if (piv != c) {
        for (std::size_t k = 0; k < m; ++k) {
          std::swap(b[piv * m + k], b[c * m + k]);
          std::swap(inv[piv * m + k], inv[c * m + k]);
        }
      }
      const double d = 1.0 / b[c * m + c];
      for (std::size_t k = 0; k < m; ++k) {
        b[c * m + k] *= d;
        inv[c * m + k] *= d;
      }
      for (std::size_t r = 0; r < m; ++r) {
        const double f = b[r * m + c];
        if (r == c || f == 0.0) continue;
        for (std::size_t k = 0; k < m; ++k) {
          b[r * m + k] -= f * b[c * m + k];
          inv[r * m + k] -= f * inv[c * m + k];
        }
      }
    }
    // pi = c_B B^{-1}; c_B is 1 on cut columns, 0 on slacks.
    std::vector<double> pi(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] < m) continue;
      for (std::size_t k = 0; k < m; ++k) pi[k] += inv[i * m + k];
    }
    for (std::size_t i = 0; i < m; ++i) {
      double sum = 0.0;
      for (std::size_t k = 0; k < m; ++k) sum += inv[i * m + k];
      beta_[i] = sum;
    }
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      auto& col = cols_[j];
      double red = j < m ? 0.0 : 1.0;
      for (std::size_t i = 0; i < m; ++i) {
        double sum = 0.0;
        for (std::size_t r : supports_[j]) sum += inv[i * m + r];
        col[i] = sum;
      }
      for (std::size_t r : supports_[j]) red -= pi[r];
      reduced_[j] = red;
    }
  }

  std::size_t m_;
  std::vector<std::vector<double>> cols_;  // first m_ are slacks
  std::vector<std::vector<std::size_t>> supports_;
  std::vector<double> reduced_;
  std::vector<double> beta_;
  std::vector<std::size_t> basis_;
};

inline LpSolution solve_by_cut_generation(const LpInstance& lp, const LpOptions& opt) {
  const Network& net = lp.network();
  const std::size_t n = net.size();
  const NodeId s = lp.source();
  LpSolution sol;

  std::set<std::vector<std::size_t>> known;
  CoveringDualSimplex master(n);
  auto add_cut = [&](std::vector<std::size_t> support) {
    std::sort(support.begin(), support.end());
    if (support.empty() || !known.insert(support).second) return false;
    master.add_column(support);
    return true;
  };

  add_cut({index(s)});
  for (NodeId t : lp.destinations()) {
    std::vector<std::size_t> support;
    for (NodeId u : net.neighbors(t)) support.push_back(index(u));
    add_cut(std::move(support));
  }

  for (;;) {
    ++sol.rounds;
    master.optimize();
    sol.z = master.multipliers();
    if (sol.rounds > opt.max_rounds) break;
    RateAssignment ra{sol.z, s};
    MinCutSolver solver(net, ra);
    bool added = false;
    for (NodeId t : lp.destinations()) {
      const CutResult cut = solver.cut(s, t);
      if (cut.capacity >= 1.0 - opt.cut_tolerance) continue;
      std::vector<std::size_t> support;
      for (NodeId v : cut_frontier(net, membership(net, cut.source_side))) {
        support.push_back(index(v));
      }
      added = add_cut(std::move(support)) || added;
    }
    if (!added) break;
  }
  sol.cuts = master.column_count();
  sol.objective = 0.0;
  for (double z : sol.z) sol.objective += z;
  sol.status = LpStatus::optimal;
  return sol;
}

inline LpSolution solve_dense_flow(const LpInstance& lp, const LpOptions& opt) {
  LpSolution sol;
  const LinearProgram prog = lp.to_linear_program();
  if (prog.var_count() > opt.limits.max_dense_variables ||
      prog.rows.size() > opt.limits.max_dense_rows) {
    sol.status = LpStatus::scale_exceeded;
    return sol;
  }
  const SimplexResult res = solve_simplex(prog);
  if (res.status != SimplexStatus::optimal) {
    sol.status = LpStatus::infeasible;
    return sol;
  }
  sol.z.assign(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(lp.node_count()));
  sol.objective = 0.0;
  for (double z : sol.z) sol.objective += z;
  sol.status = LpStatus::optimal;
  return sol;
}

}  // namespace detail

inline bool within_limits(const LpInstance& lp, const LpLimits& limits) {
  return lp.node_count() <= limits.max_nodes &&
         lp.network().hyperarc_count() <= limits.max_hyperarcs;
}

/// E_optimal and the optimal rate vector z*.
inline LpSolution solve_lp(const LpInstance& lp, const LpOptions& opt = {}) {
  if (!within_limits(lp, opt.limits)) {
    LpSolution sol;
    sol.status = LpStatus::scale_exceeded;
    return sol;
  }
  if (!is_connected(lp.network())) {
    LpSolution sol;
    sol.status = LpStatus::infeasible;
    return sol;
  }
  return opt.method == LpMethod::dense_flow ? detail::solve_dense_flow(lp, opt)
                                            : detail::solve_by_cut_generation(lp, opt);
}

// ---------------------------------------------------------------------------
// LP text files (CPLEX LP subset) and solution files.

inline void write_linear_program(std::ostream& os, const LinearProgram& lp,
                                 std::string_view comment = {}) {
  auto write_terms = [&](const std::vector<LinearTerm>& terms) {
    std::size_t on_line = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const auto& t = terms[k];
      if (on_line == 8) {
        os << "\n   ";
        on_line = 0;
      }
      const double mag = std::abs(t.coef);
      os << ' ' << (t.coef < 0.0 ? '-' : '+') << ' ';
      if (mag != 1.0) os << format_double(mag) << ' ';
      os << lp.var_names[t.var];
      ++on_line;
    }
  };
  if (!comment.empty()) os << "\\ " << comment << '\n';
  os << "Minimize\n obj:";
  std::vector<LinearTerm> obj;
  for (std::size_t j = 0; j < lp.var_count(); ++j) {
    if (lp.objective[j] != 0.0) obj.push_back({j, lp.objective[j]});
  }
  write_terms(obj);
  os << "\nSubject To\n";
  for (const auto& row : lp.rows) {
    os << ' ' << row.name << ':';
    write_terms(row.terms);
    const char* op = row.sense == RowSense::le ? "<=" : row.sense == RowSense::ge ? ">=" : "=";
    os << ' ' << op << ' ' << format_double(row.rhs) << '\n';
  }
  // All variables are nonnegative and unbounded above, which is the format's
  // default; the section lists them so readers see the full variable set.
  os << "Bounds\n";
  for (std::size_t j = 0; j < lp.var_count(); ++j) os << ' ' << lp.var_names[j] << " >= 0\n";
  os << "End\n";
}

inline void write_lp(std::ostream& os, const LpInstance& lp) {
  write_linear_program(os, lp.to_linear_program(),
                       "broadcast rate LP: N=" + std::to_string(lp.node_count()) +
                           " source=" + std::to_string(index(lp.source())));
}

inline void export_lp(const LpInstance& lp, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write LP file: " + path);
  write_lp(out, lp);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

/// Parses the subset written by write_linear_program.
inline LinearProgram read_linear_program(std::istream& is) {
  LinearProgram lp;
  std::map<std::string, std::size_t> ids;
  auto var_id = [&](const std::string& name) {
    auto [it, inserted] = ids.emplace(name, lp.var_names.size());
    if (inserted) {
      lp.var_names.push_back(name);
      lp.objective.push_back(0.0);
    }
    return it->second;
  };

  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] == '\\') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }

  enum class Section { none, objective, constraints, bounds } section = Section::none;
  std::size_t i = 0;
  auto is_keyword = [](const std::string& t) {
    return t == "Minimize" || t == "Subject" || t == "Bounds" || t == "End";
  };
  // Reads "[+|-] [coef] name" terms until a relational operator or keyword.
  auto read_terms = [&](std::vector<LinearTerm>& out) {
    while (i < tokens.size() && !is_keyword(tokens[i]) && tokens[i] != "<=" &&
           tokens[i] != ">=" && tokens[i] != "=") {
      double sign = 1.0;
      if (tokens[i] == "+" || tokens[i] == "-") {
        sign = tokens[i] == "-" ? -1.0 : 1.0;
        ++i;
      }
      if (i >= tokens.size()) throw std::runtime_error("LP file: dangling sign");
      double coef = 1.0;
      const char c0 = tokens[i][0];
      if ((c0 >= '0' && c0 <= '9') || c0 == '.') {
        coef = parse_double(tokens[i]);
        ++i;
      }
      if (i >= tokens.size()) throw std::runtime_error("LP file: missing variable");
      out.push_back({var_id(tokens[i]), sign * coef});
      ++i;
    }
  };

  while (i < tokens.size()) {
    const std::string& t = tokens[i];
    if (t == "Minimize") {
      section = Section::objective;
      ++i;
      if (i < tokens.size() && tokens[i].back() == ':') ++i;
      std::vector<LinearTerm> terms;
      read_terms(terms);
      for (const auto& term : terms) lp.objective[term.var] += term.coef;
    } else if (t == "Subject") {
      if (i + 1 >= tokens.size() || tokens[i + 1] != "To") throw std::runtime_error("LP file: expected 'Subject To'");
      section = Section::constraints;
      i += 2;
    } else if (t == "Bounds") {
      section = Section::bounds;
      ++i;
    } else if (t == "End") {
      break;
    } else if (section == Section::constraints) {
      LinearRow row;
      if (t.back() != ':') throw std::runtime_error("LP file: constraint without name: " + t);
      row.name = t.substr(0, t.size() - 1);
      ++i;
      read_terms(row.terms);
      if (i + 1 >= tokens.size()) throw std::runtime_error("LP file: truncated constraint");
      const std::string& op = tokens[i];
      row.sense = op == "<=" ? RowSense::le : op == ">=" ? RowSense::ge : RowSense::eq;
      row.rhs = parse_double(tokens[i + 1]);
      i += 2;
      lp.rows.push_back(std::move(row));
    } else if (section == Section::bounds) {
      // only "name >= 0" is ever written
      if (i + 2 >= tokens.size() || tokens[i + 1] != ">=" || parse_double(tokens[i + 2]) != 0.0) {
        throw std::runtime_error("LP file: unsupported bound near " + t);
      }
      var_id(t);
      i += 3;
    } else {
      throw std::runtime_error("LP file: unexpected token " + t);
    }
  }
  return lp;
}

/// Whitespace-separated "name value" lines; blank lines and '#' comments skipped.
inline std::map<std::string, double> read_solution(std::istream& is) {
  std::map<std::string, double> values;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string name;
    std::string value;
    if (!(ls >> name) || name[0] == '#') continue;
    if (!(ls >> value)) throw std::runtime_error("solution file: missing value for " + name);
    values[name] = parse_double(value);
  }
  return values;
}

inline void write_solution(std::ostream& os, const std::vector<std::string>& names,
                           const std::vector<double>& values) {
  for (std::size_t j = 0; j < names.size(); ++j) {
    os << names[j] << ' ' << format_double(values.at(j)) << '\n';
  }
}

/// Rebuilds an LpSolution from imported values; only z_<node> entries are used.
inline LpSolution solution_from_values(const LpInstance& lp,
                                       const std::map<std::string, double>& values) {
  LpSolution sol;
  sol.z.assign(lp.node_count(), 0.0);
  for (std::size_t v = 0; v < lp.node_count(); ++v) {
    auto it = values.find("z_" + std::to_string(v));
    if (it != values.end()) sol.z[v] = it->second;
  }
  for (double z : sol.z) sol.objective += z;
  sol.status = LpStatus::optimal;
  return sol;
}

inline LpSolution import_solution(const LpInstance& lp, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open solution file: " + path);
  return solution_from_values(lp, read_solution(in));
}

}  // namespace ncast

#endif  // NCAST_LP_HPP
