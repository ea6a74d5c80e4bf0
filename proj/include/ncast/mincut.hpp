#ifndef NCAST_MINCUT_HPP
#define NCAST_MINCUT_HPP

// Hypergraph min-cuts for rate-weighted wireless broadcast.
//
// A node v transmitting at rate C_v reaches every u in H_v at once. The
// capacity of a vertex partition (S, T) is the summed rate of the nodes of S
// that have at least one neighbor in T. Min-cuts are computed by splitting each
// node into v_in -> v_out (capacity C_v) with infinite arcs v_out -> u_in for
// u in H_v, then running maxflow from s_in to t_in.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ncast/maxflow.hpp"
#include "ncast/network.hpp"

namespace ncast {

/// Per-node transmission rates C_v. rates[source] is the source rate.
struct RateAssignment {
  std::vector<double> rates;
  NodeId source{};

  double rate(NodeId v) const { return rates.at(index(v)); }
  double source_rate() const { return rate(source); }

  double total() const noexcept {
    double sum = 0.0;
    for (double c : rates) sum += c;
    return sum;
  }

  void validate(const Network& net) const {
    if (rates.size() != net.size()) throw std::invalid_argument("rate assignment size mismatch");
    if (index(source) >= net.size()) throw std::invalid_argument("source out of range");
    for (double c : rates) {
      if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("rates must be finite and >= 0");
    }
    if (!(source_rate() > 0.0)) throw std::invalid_argument("source rate must be positive");
  }
};

struct CutResult {
  double capacity = 0.0;
  std::vector<NodeId> source_side;  // sorted
  NodeId destination{};
};

struct FlowArc {
  std::size_t tail = 0;
  std::size_t head = 0;
  double capacity = 0.0;
};

/// Node-split flow network. Arc v (for v < node_count) is the splitter
/// v_in -> v_out; the remaining arcs are the infinite hyperarc fan-outs.
struct FlowGraph {
  std::size_t node_count = 0;
  std::vector<FlowArc> arcs;
  double infinity = 0.0;

  static constexpr std::size_t in(NodeId v) noexcept { return 2 * index(v); }
  static constexpr std::size_t out(NodeId v) noexcept { return 2 * index(v) + 1; }
  static constexpr std::size_t splitter_arc(NodeId v) noexcept { return index(v); }

  std::size_t vertex_count() const noexcept { return 2 * node_count; }
  bool is_splitter(std::size_t arc) const noexcept { return arc < node_count; }
  NodeId owner(std::size_t arc) const noexcept { return node_at(arcs[arc].tail / 2); }
};

inline FlowGraph expand_to_flow_graph(const Network& net, const RateAssignment& ra) {
  ra.validate(net);
  FlowGraph g;
  g.node_count = net.size();
  g.infinity = ra.total() + 1.0;
  g.arcs.reserve(net.size() + net.hyperarc_count());
  for (std::size_t v = 0; v < net.size(); ++v) {
    g.arcs.push_back({FlowGraph::in(node_at(v)), FlowGraph::out(node_at(v)), ra.rates[v]});
  }
  for (std::size_t v = 0; v < net.size(); ++v) {
    for (NodeId u : net.neighbors(node_at(v))) {
      g.arcs.push_back({FlowGraph::out(node_at(v)), FlowGraph::in(u), g.infinity});
    }
  }
  return g;
}

/// Nodes of S with at least one neighbor outside S.
inline std::vector<NodeId> cut_frontier(const Network& net, const std::vector<char>& in_source_side) {
  std::vector<NodeId> frontier;
  for (std::size_t v = 0; v < net.size(); ++v) {
    if (!in_source_side[v]) continue;
    for (NodeId u : net.neighbors(node_at(v))) {
      if (!in_source_side[index(u)]) {
        frontier.push_back(node_at(v));
        break;
      }
    }
  }
  return frontier;
}

inline std::vector<char> membership(const Network& net, const std::vector<NodeId>& nodes) {
  std::vector<char> in(net.size(), 0);
  for (NodeId v : nodes) in.at(index(v)) = 1;
  return in;
}

/// Cut capacity of a vertex partition: summed rates of its frontier.
inline double cut_capacity(const Network& net, const RateAssignment& ra,
                           const std::vector<NodeId>& source_side) {
  double total = 0.0;
  for (NodeId v : cut_frontier(net, membership(net, source_side))) total += ra.rate(v);
  return total;
}

/// Reusable maxflow state for one (network, rates) pair. Not thread-safe; use
/// one solver per thread.
class MinCutSolver {
 public:
  MinCutSolver(const Network& net, const RateAssignment& ra)
      : net_(&net), graph_(expand_to_flow_graph(net, ra)), flow_(graph_.vertex_count()) {
    for (const auto& a : graph_.arcs) flow_.add_arc(a.tail, a.head, a.capacity);
    eps_ = 1e-12 * graph_.infinity;
  }

  const FlowGraph& graph() const noexcept { return graph_; }

  CutResult cut(NodeId s, NodeId t) {
    if (s == t) throw std::invalid_argument("min_cut: source equals destination");
    if (index(s) >= net_->size() || index(t) >= net_->size()) {
      throw std::out_of_range("min_cut: node out of range");
    }
    flow_.reset();
    CutResult res;
    res.destination = t;
    res.capacity = flow_.solve(FlowGraph::in(s), FlowGraph::in(t), eps_);
    const auto reach = flow_.residual_reachable(FlowGraph::in(s), eps_);
    for (std::size_t v = 0; v < net_->size(); ++v) {
      if (reach[FlowGraph::in(node_at(v))]) res.source_side.push_back(node_at(v));
    }
    return res;
  }

 private:
  const Network* net_;
  FlowGraph graph_;
  MaxFlow<double> flow_;
  double eps_ = 0.0;
};

inline CutResult min_cut(const Network& net, const RateAssignment& ra, NodeId s, NodeId t) {
  MinCutSolver solver(net, ra);
  return solver.cut(s, t);
}

struct DestinationCut {
  NodeId destination{};
  double mincut = 0.0;
};

struct BroadcastCapacity {
  double value = 0.0;
  NodeId argmin{};
  CutResult argmin_cut;
  std::vector<DestinationCut> per_destination;  // every t != s, ascending id
};

/// C_min(s): the minimum over all destinations of C_min(s, t). Destinations
/// may be split across `jobs` threads; the result does not depend on it.
inline BroadcastCapacity broadcast_capacity(const Network& net, const RateAssignment& ra, NodeId s,
                                            unsigned jobs = 1) {
  if (net.size() < 2) throw std::invalid_argument("broadcast needs at least two nodes");
  std::vector<NodeId> dests;
  for (std::size_t v = 0; v < net.size(); ++v) {
    if (node_at(v) != s) dests.push_back(node_at(v));
  }
  std::vector<CutResult> cuts(dests.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    MinCutSolver solver(net, ra);
    for (std::size_t i = begin; i < end; ++i) cuts[i] = solver.cut(s, dests[i]);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(dests.size())));
  if (jobs == 1) {
    work(0, dests.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (dests.size() + jobs - 1) / jobs;
    for (std::size_t b = 0; b < dests.size(); b += chunk) {
      pool.emplace_back(work, b, std::min(dests.size(), b + chunk));
    }
  }

  BroadcastCapacity out;
  out.per_destination.reserve(dests.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    out.per_destination.push_back({dests[i], cuts[i].capacity});
    if (cuts[i].capacity < cuts[best].capacity) best = i;
  }
  out.value = cuts[best].capacity;
  out.argmin = dests[best];
  out.argmin_cut = std::move(cuts[best]);
  return out;
}

/// Exhaustive cut-capacity minimum over every partition with s in S and t outside.
/// Among minimal partitions the lexicographically smallest sorted S wins.
/// Testing oracle: refuses networks above 20 nodes.
inline CutResult brute_force_min_cut(const Network& net, const RateAssignment& ra, NodeId s,
                                     NodeId t) {
  constexpr std::size_t kMaxNodes = 20;
  const std::size_t n = net.size();
  if (n > kMaxNodes) throw std::invalid_argument("brute_force_min_cut: network too large");
  if (s == t) throw std::invalid_argument("brute_force_min_cut: source equals destination");
  ra.validate(net);

  std::vector<std::uint32_t> nbr_mask(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (NodeId u : net.neighbors(node_at(v))) nbr_mask[v] |= 1u << index(u);
  }
  std::vector<std::size_t> free_nodes;
  for (std::size_t v = 0; v < n; ++v) {
    if (node_at(v) != s && node_at(v) != t) free_nodes.push_back(v);
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1u;

  auto to_nodes = [&](std::uint32_t mask) {
    std::vector<NodeId> out;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask & (1u << v)) out.push_back(node_at(v));
    }
    return out;
  };

  double best_cap = std::numeric_limits<double>::infinity();
  std::vector<NodeId> best_side;
  const std::uint64_t combos = std::uint64_t{1} << free_nodes.size();
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::uint32_t side = 1u << index(s);
    for (std::size_t k = 0; k < free_nodes.size(); ++k) {
      if (c & (std::uint64_t{1} << k)) side |= 1u << free_nodes[k];
    }
    const std::uint32_t rest = all & ~side;
    double cap = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((side & (1u << v)) && (nbr_mask[v] & rest)) cap += ra.rates[v];
    }
    const double tol = 1e-12 * (std::isinf(best_cap) ? 1.0 : std::max(1.0, best_cap));
    if (cap < best_cap - tol) {
      best_cap = cap;
      best_side = to_nodes(side);
    } else if (std::abs(cap - best_cap) <= tol) {
      auto candidate = to_nodes(side);
      if (candidate < best_side) best_side = std::move(candidate);
    }
  }
  return {best_cap, std::move(best_side), t};
}

}  // namespace ncast

#endif  // NCAST_MINCUT_HPP
