#ifndef NCAST_MAXFLOW_HPP
#define NCAST_MAXFLOW_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ncast {

// Dinic's blocking-flow maxflow over real capacities. Residual amounts at or
// below `eps` are treated as saturated.
template <typename Cap>
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t vertices) : adj_(vertices), level_(vertices), next_(vertices) {}

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t arc_count() const noexcept { return head_.size() / 2; }

  /// Returns the arc id. Reverse residual arc is id ^ 1 internally.
  std::size_t add_arc(std::size_t from, std::size_t to, Cap cap) {
    if (from >= adj_.size() || to >= adj_.size()) throw std::out_of_range("arc endpoint");
    const std::size_t id = head_.size();
    head_.push_back(to);
    cap_.push_back(cap);
    flow_.push_back(Cap{});
    adj_[from].push_back(id);
    head_.push_back(from);
    cap_.push_back(Cap{});
    flow_.push_back(Cap{});
    adj_[to].push_back(id + 1);
    return id / 2;
  }

  void set_capacity(std::size_t arc, Cap cap) { cap_[2 * arc] = cap; }
  Cap capacity(std::size_t arc) const { return cap_[2 * arc]; }
  Cap flow(std::size_t arc) const { return flow_[2 * arc]; }

  void reset() { std::fill(flow_.begin(), flow_.end(), Cap{}); }

  Cap solve(std::size_t source, std::size_t sink, Cap eps = Cap{}) {
    if (source == sink) throw std::invalid_argument("source equals sink");
    eps_ = eps;
    Cap total{};
    while (bfs(source, sink)) {
      std::fill(next_.begin(), next_.end(), std::size_t{0});
      for (;;) {
        const Cap pushed = dfs(source, sink, std::numeric_limits<Cap>::max());
        if (!(pushed > eps_)) break;
        total += pushed;
      }
    }
    return total;
  }

  /// Vertices reachable from `source` through arcs with residual > eps.
  std::vector<char> residual_reachable(std::size_t source, Cap eps = Cap{}) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e : adj_[v]) {
        const std::size_t w = head_[e];
        if (!seen[w] && cap_[e] - flow_[e] > eps) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

 private:
  bool bfs(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<std::size_t> queue{source};
    level_[source] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t v = queue[qi];
      for (std::size_t e : adj_[v]) {
        const std::size_t w = head_[e];
        if (level_[w] < 0 && cap_[e] - flow_[e] > eps_) {
          level_[w] = level_[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Cap dfs(std::size_t v, std::size_t sink, Cap limit) {
    if (v == sink) return limit;
    for (std::size_t& i = next_[v]; i < adj_[v].size(); ++i) {
      const std::size_t e = adj_[v][i];
      const std::size_t w = head_[e];
      const Cap residual = cap_[e] - flow_[e];
      if (level_[w] != level_[v] + 1 || !(residual > eps_)) continue;
      const Cap pushed = dfs(w, sink, std::min(limit, residual));
      if (pushed > eps_) {
        flow_[e] += pushed;
        flow_[e ^ 1] -= pushed;
        return pushed;
      }
    }
    return Cap{};
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> head_;
  std::vector<Cap> cap_;
  std::vector<Cap> flow_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
  Cap eps_{};
};

}  // namespace ncast

#endif  // NCAST_MAXFLOW_HPP
