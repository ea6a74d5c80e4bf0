#ifndef NCAST_BASELINES_HPP
#define NCAST_BASELINES_HPP

// Broadcast without network coding: every forwarder transmits each packet
// once. Two forwarder-set builders are provided, the source-independent
// MPR-based dominating set and a greedy connected dominating set.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ncast/network.hpp"

namespace ncast {

enum class ForwarderBuilder { mpr_cds, greedy_cds };

inline std::string_view to_string(ForwarderBuilder b) {
  return b == ForwarderBuilder::mpr_cds ? "mpr-cds" : "greedy-cds";
}

struct ForwarderSet {
  std::vector<NodeId> members;  // sorted
  ForwarderBuilder builder = ForwarderBuilder::mpr_cds;
  NodeId source{};
};

/// Classic greedy multipoint relay selection for v.
inline std::vector<NodeId> mpr_select(const Network& net, NodeId v) {
  const auto& hv = net.neighbors(v);
  std::vector<char> one_hop(net.size(), 0);
  one_hop[index(v)] = 1;
  for (NodeId u : hv) one_hop[index(u)] = 1;

  // coverers[w]: neighbors of v that reach strict 2-hop node w
  std::vector<std::vector<NodeId>> coverers(net.size());
  std::vector<NodeId> two_hop;
  for (NodeId u : hv) {
    for (NodeId w : net.neighbors(u)) {
      if (one_hop[index(w)]) continue;
      if (coverers[index(w)].empty()) two_hop.push_back(w);
      coverers[index(w)].push_back(u);
    }
  }

  std::vector<char> covered(net.size(), 0);
  std::vector<char> chosen(net.size(), 0);
  std::size_t remaining = two_hop.size();
  auto choose = [&](NodeId u) {
    if (chosen[index(u)]) return;
    chosen[index(u)] = 1;
    for (NodeId w : net.neighbors(u)) {
      if (!one_hop[index(w)] && !covered[index(w)]) {
        covered[index(w)] = 1;
        --remaining;
      }
    }
  };

  for (NodeId w : two_hop) {
    if (coverers[index(w)].size() == 1) choose(coverers[index(w)].front());
  }
  while (remaining > 0) {
    NodeId best{};
    std::size_t best_gain = 0;
    for (NodeId u : hv) {
      if (chosen[index(u)]) continue;
      std::size_t gain = 0;
      for (NodeId w : net.neighbors(u)) {
        if (!one_hop[index(w)] && !covered[index(w)]) ++gain;
      }
      const bool better = gain > best_gain ||
                          (gain == best_gain && gain > 0 &&
                           (net.degree(u) > net.degree(best) ||
                            (net.degree(u) == net.degree(best) && u < best)));
      if (better) {
        best = u;
        best_gain = gain;
      }
    }
    if (best_gain == 0) break;  // unreachable: every 2-hop node has a coverer
    choose(best);
  }

  std::vector<NodeId> out;
  for (NodeId u : hv) {
    if (chosen[index(u)]) out.push_back(u);
  }
  return out;
}

/// Keeps the members connected (through members and s) to s; returns the sorted result.
inline std::vector<NodeId> component_through(const Network& net, const std::vector<char>& member,
                                             NodeId s) {
  std::vector<char> seen(net.size(), 0);
  std::vector<NodeId> stack{s};
  seen[index(s)] = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : net.neighbors(v)) {
      if (member[index(u)] && !seen[index(u)]) {
        seen[index(u)] = 1;
        stack.push_back(u);
      }
    }
  }
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < net.size(); ++v) {
    if (member[v] && seen[v]) out.push_back(node_at(v));
  }
  return out;
}

/// Source-independent MPR-based dominating set: v forwards if it has the
/// smallest id in its closed neighborhood, or if it is a multipoint relay of
/// the smallest-id node of that neighborhood.
inline ForwarderSet mpr_cds(const Network& net, NodeId s) {
  if (index(s) >= net.size()) throw std::invalid_argument("source not in network");
  std::vector<std::vector<NodeId>> mprs(net.size());
  for (std::size_t v = 0; v < net.size(); ++v) mprs[v] = mpr_select(net, node_at(v));

  std::vector<char> member(net.size(), 0);
  for (std::size_t v = 0; v < net.size(); ++v) {
    NodeId smallest = node_at(v);
    for (NodeId u : net.neighbors(node_at(v))) smallest = std::min(smallest, u);
    if (smallest == node_at(v)) {
      member[v] = 1;
    } else {
      const auto& m = mprs[index(smallest)];
      if (std::binary_search(m.begin(), m.end(), node_at(v))) member[v] = 1;
    }
  }
  return {component_through(net, member, s), ForwarderBuilder::mpr_cds, s};
}

/// Greedy connected dominating set grown from the maximum-degree node: at each
/// step the gray node covering the most white nodes turns black. Ties go to
/// the smallest id. The `source` is recorded for flooding cost only.
inline ForwarderSet greedy_cds(const Network& net, NodeId source) {
  const std::size_t n = net.size();
  if (n < 2) throw std::invalid_argument("greedy_cds needs at least two nodes");
  if (index(source) >= n) throw std::invalid_argument("source not in network");
  enum Color : char { white, gray, black };
  std::vector<char> color(n, white);
  std::size_t whites = n;

  auto blacken = [&](NodeId v) {
    if (color[index(v)] == white) --whites;
    color[index(v)] = black;
    for (NodeId u : net.neighbors(v)) {
      if (color[index(u)] == white) {
        color[index(u)] = gray;
        --whites;
      }
    }
  };
  auto white_count = [&](NodeId v) {
    std::size_t c = 0;
    for (NodeId u : net.neighbors(v)) c += color[index(u)] == white;
    return c;
  };

  NodeId start = node_at(0);
  for (std::size_t v = 1; v < n; ++v) {
    if (net.degree(node_at(v)) > net.degree(start)) start = node_at(v);
  }
  blacken(start);
  while (whites > 0) {
    NodeId best{};
    std::size_t best_gain = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] != gray) continue;
      const std::size_t gain = white_count(node_at(v));
      if (gain > best_gain) {
        best_gain = gain;
        best = node_at(v);
      }
    }
    if (best_gain == 0) throw std::invalid_argument("greedy_cds: network is disconnected");
    blacken(best);
  }
  ForwarderSet fs{{}, ForwarderBuilder::greedy_cds, source};
  for (std::size_t v = 0; v < n; ++v) {
    if (color[v] == black) fs.members.push_back(node_at(v));
  }
  return fs;
}

/// Transmissions per packet: every forwarder plus the source sends once.
inline double flooding_cost(const ForwarderSet& fs) {
  const bool has_source = std::binary_search(fs.members.begin(), fs.members.end(), fs.source);
  return static_cast<double>(fs.members.size() + (has_source ? 0 : 1));
}

/// Every node is in the set or adjacent to it.
inline bool is_dominating(const Network& net, const std::vector<NodeId>& set) {
  std::vector<char> dominated(net.size(), 0);
  for (NodeId v : set) {
    dominated[index(v)] = 1;
    for (NodeId u : net.neighbors(v)) dominated[index(u)] = 1;
  }
  return std::all_of(dominated.begin(), dominated.end(), [](char c) { return c != 0; });
}

/// members plus the source induce a connected subgraph.
inline bool is_connected_with_source(const Network& net, const ForwarderSet& fs) {
  std::vector<char> member(net.size(), 0);
  for (NodeId v : fs.members) member[index(v)] = 1;
  member[index(fs.source)] = 1;
  const auto reached = component_through(net, member, fs.source);
  return reached.size() == static_cast<std::size_t>(std::count(member.begin(), member.end(), 1));
}

inline bool is_valid_forwarder_set(const Network& net, const ForwarderSet& fs) {
  std::vector<NodeId> with_source = fs.members;
  with_source.push_back(fs.source);
  return is_dominating(net, with_source) && is_connected_with_source(net, fs);
}

}  // namespace ncast

#endif  // NCAST_BASELINES_HPP
