#ifndef NCAST_NETWORK_HPP
#define NCAST_NETWORK_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncast {

/// Dense node index in [0, N). Stable for the lifetime of a Network.
enum class NodeId : std::uint32_t {};

constexpr std::size_t index(NodeId v) noexcept { return static_cast<std::size_t>(v); }
constexpr NodeId node_at(std::size_t i) noexcept { return static_cast<NodeId>(i); }

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class Family { random, lattice };

inline std::string_view to_string(Family f) {
  return f == Family::random ? "random" : "lattice";
}

inline Family family_from_string(std::string_view s) {
  if (s == "random") return Family::random;
  if (s == "lattice") return Family::lattice;
  throw std::invalid_argument("unknown network family: " + std::string(s));
}

struct NetworkMeta {
  Family family = Family::random;
  // Nominal density parameter M (expected neighbors per node). Heuristics use
  // this value, not the measured mean degree.
  double density = 0.0;
  std::uint64_t seed = 0;
  // Radio range in grid spacings; 0 for random networks.
  int lattice_radius = 0;
  // Number of regenerations needed to draw a connected random instance. The
  // effective seed is seed + regen_offset.
  std::uint64_t regen_offset = 0;
};

/// Immutable unit-disk topology. Neighbor lists (the hyperedges H_v) are sorted.
class Network {
 public:
  /// Builds the neighbor sets from geometry.
  Network(std::vector<Point> positions, double radio_range, bool torus, double side_length,
          NetworkMeta meta)
      : positions_(std::move(positions)),
        radio_range_(radio_range),
        torus_(torus),
        side_length_(side_length),
        meta_(meta) {
    validate_scalars();
    const std::size_t n = positions_.size();
    neighbors_.assign(n, {});
    const double r2 = radio_range_ * radio_range_;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (squared_distance(positions_[u], positions_[v]) <= r2) {
          neighbors_[u].push_back(node_at(v));
          neighbors_[v].push_back(node_at(u));
        }
      }
    }
  }

  /// Adopts explicit neighbor sets (e.g. a stored topology). Symmetry and the
  /// absence of self-loops are checked; geometry is not re-derived.
  Network(std::vector<Point> positions, double radio_range, bool torus, double side_length,
          NetworkMeta meta, std::vector<std::vector<NodeId>> neighbors)
      : positions_(std::move(positions)),
        radio_range_(radio_range),
        torus_(torus),
        side_length_(side_length),
        meta_(meta),
        neighbors_(std::move(neighbors)) {
    validate_scalars();
    if (neighbors_.size() != positions_.size()) {
      throw std::invalid_argument("neighbor table size does not match node count");
    }
    for (std::size_t v = 0; v < neighbors_.size(); ++v) {
      auto& hv = neighbors_[v];
      std::sort(hv.begin(), hv.end());
      if (std::adjacent_find(hv.begin(), hv.end()) != hv.end()) {
        throw std::invalid_argument("duplicate neighbor entry");
      }
      for (NodeId u : hv) {
        if (index(u) >= neighbors_.size()) throw std::invalid_argument("neighbor id out of range");
        if (index(u) == v) throw std::invalid_argument("self-loop in neighbor table");
      }
    }
    for (std::size_t v = 0; v < neighbors_.size(); ++v) {
      for (NodeId u : neighbors_[v]) {
        const auto& hu = neighbors_[index(u)];
        if (!std::binary_search(hu.begin(), hu.end(), node_at(v))) {
          throw std::invalid_argument("asymmetric neighbor table");
        }
      }
    }
  }

  std::size_t size() const noexcept { return positions_.size(); }
  double radio_range() const noexcept { return radio_range_; }
  bool torus() const noexcept { return torus_; }
  double side_length() const noexcept { return side_length_; }
  const NetworkMeta& meta() const noexcept { return meta_; }

  const Point& position(NodeId v) const { return positions_.at(index(v)); }
  const std::vector<Point>& positions() const noexcept { return positions_; }
  const std::vector<NodeId>& neighbors(NodeId v) const { return neighbors_.at(index(v)); }
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }

  bool adjacent(NodeId u, NodeId v) const {
    const auto& hu = neighbors(u);
    return std::binary_search(hu.begin(), hu.end(), v);
  }

  std::size_t hyperarc_count() const noexcept {
    std::size_t total = 0;
    for (const auto& hv : neighbors_) total += hv.size();
    return total;
  }

  double mean_degree() const noexcept {
    return size() == 0 ? 0.0 : static_cast<double>(hyperarc_count()) / static_cast<double>(size());
  }

  /// Euclidean distance, wrap-around on a torus.
  double distance(NodeId u, NodeId v) const {
    return std::sqrt(squared_distance(position(u), position(v)));
  }

  double squared_distance(const Point& a, const Point& b) const noexcept {
    double dx = std::abs(a.x - b.x);
    double dy = std::abs(a.y - b.y);
    if (torus_) {
      dx = std::min(dx, side_length_ - dx);
      dy = std::min(dy, side_length_ - dy);
    }
    return dx * dx + dy * dy;
  }

 private:
  void validate_scalars() const {
    if (!(radio_range_ > 0.0)) throw std::invalid_argument("radio range must be positive");
    if (!(side_length_ > 0.0)) throw std::invalid_argument("side length must be positive");
  }

  std::vector<Point> positions_;
  double radio_range_;
  bool torus_;
  double side_length_;
  NetworkMeta meta_;
  std::vector<std::vector<NodeId>> neighbors_;
};

inline bool is_connected(const Network& net) {
  const std::size_t n = net.size();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<NodeId> frontier;
  frontier.push(node_at(0));
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const NodeId v = frontier.front();
    frontier.pop();
    for (NodeId u : net.neighbors(v)) {
      if (!seen[index(u)]) {
        seen[index(u)] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == n;
}

/// Number of non-zero integer offsets (dx, dy) with dx^2 + dy^2 <= k^2, i.e. the
/// degree of every node in a torus lattice with range k spacings.
inline std::size_t lattice_degree(int radius_hops) {
  std::size_t count = 0;
  for (int dx = -radius_hops; dx <= radius_hops; ++dx) {
    for (int dy = -radius_hops; dy <= radius_hops; ++dy) {
      if ((dx != 0 || dy != 0) && dx * dx + dy * dy <= radius_hops * radius_hops) ++count;
    }
  }
  return count;
}

/// side x side grid with unit spacing. Node id = row * side + col, position
/// (col, row). On the plane the square spans [0, side-1]; on a torus the wrap
/// period is side.
inline Network generate_lattice(int side, int radius_hops, bool torus) {
  if (side < 3) throw std::invalid_argument("lattice side must be at least 3");
  if (radius_hops < 1) throw std::invalid_argument("lattice radius must be positive");
  if (torus && side <= 2 * radius_hops) {
    throw std::invalid_argument("torus lattice side must exceed twice the radius");
  }
  std::vector<Point> pos;
  pos.reserve(static_cast<std::size_t>(side) * static_cast<std::size_t>(side));
  for (int row = 0; row < side; ++row) {
    for (int col = 0; col < side; ++col) {
      pos.push_back({static_cast<double>(col), static_cast<double>(row)});
    }
  }
  NetworkMeta meta;
  meta.family = Family::lattice;
  meta.density = static_cast<double>(lattice_degree(radius_hops));
  meta.lattice_radius = radius_hops;
  const double extent = torus ? static_cast<double>(side) : static_cast<double>(side - 1);
  return Network(std::move(pos), static_cast<double>(radius_hops), torus, extent, meta);
}

/// Radius whose disk holds density nodes on average among n uniform points in
/// the unit square.
inline double unit_disk_radius(std::size_t n, double density) {
  return std::sqrt(density / (std::numbers::pi * static_cast<double>(n)));
}

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw. Independent
/// of the standard library's distribution implementation.
template <typename Engine>
double unit_uniform(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// splitmix64 finalizer; used for seeding and seed derivation.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Small deterministic 64-bit generator (splitmix64 stream).
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept {
    const std::uint64_t out = mix64(state_);
    state_ += 0x9e3779b97f4a7c15ULL;
    return out;
  }

 private:
  std::uint64_t state_;
};

/// n points i.i.d. uniform on the unit square. May be disconnected; see
/// generate_connected_random_unit_disk.
inline Network generate_random_unit_disk(std::size_t n, double density, bool torus,
                                         std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random network needs at least 2 nodes");
  if (!(density > 0.0) || density >= static_cast<double>(n)) {
    throw std::invalid_argument("density must be in (0, n)");
  }
  const double r = unit_disk_radius(n, density);
  if (r >= 0.5) throw std::invalid_argument("radio range must be below half the square side");
  SplitMix64 rng(seed);
  std::vector<Point> pos(n);
  for (auto& p : pos) {
    p.x = unit_uniform(rng);
    p.y = unit_uniform(rng);
  }
  NetworkMeta meta;
  meta.family = Family::random;
  meta.density = density;
  meta.seed = seed;
  return Network(std::move(pos), r, torus, 1.0, meta);
}

class DisconnectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Draws with seed, seed+1, ... until a connected instance appears. The offset
/// used is kept in meta().regen_offset and meta().seed keeps the requested seed.
inline Network generate_connected_random_unit_disk(std::size_t n, double density, bool torus,
                                                   std::uint64_t seed,
                                                   std::uint64_t max_attempts = 1000) {
  for (std::uint64_t offset = 0; offset < max_attempts; ++offset) {
    Network net = generate_random_unit_disk(n, density, torus, seed + offset);
    if (is_connected(net)) {
      NetworkMeta meta = net.meta();
      meta.seed = seed;
      meta.regen_offset = offset;
      std::vector<Point> pos = net.positions();
      std::vector<std::vector<NodeId>> nbrs(n);
      for (std::size_t v = 0; v < n; ++v) nbrs[v] = net.neighbors(node_at(v));
      return Network(std::move(pos), net.radio_range(), net.torus(), net.side_length(), meta,
                     std::move(nbrs));
    }
  }
  throw DisconnectedError("no connected instance after " + std::to_string(max_attempts) +
                          " draws");
}

/// Random family: maximum degree. Lattice family: nearest to the centroid.
/// Ties go to the smallest id.
inline NodeId pick_source(const Network& net) {
  if (net.size() == 0) throw std::invalid_argument("empty network");
  std::size_t best = 0;
  if (net.meta().family == Family::random) {
    for (std::size_t v = 1; v < net.size(); ++v) {
      if (net.degree(node_at(v)) > net.degree(node_at(best))) best = v;
    }
    return node_at(best);
  }
  Point c;
  for (const auto& p : net.positions()) {
    c.x += p.x;
    c.y += p.y;
  }
  c.x /= static_cast<double>(net.size());
  c.y /= static_cast<double>(net.size());
  auto d2 = [&](std::size_t v) {
    const Point& p = net.positions()[v];
    return (p.x - c.x) * (p.x - c.x) + (p.y - c.y) * (p.y - c.y);
  };
  double best_d = d2(0);
  for (std::size_t v = 1; v < net.size(); ++v) {
    const double d = d2(v);
    if (d < best_d) {
      best_d = d;
      best = v;
    }
  }
  return node_at(best);
}

/// Distance to the nearest side of the square, in units of the radio range.
inline double border_distance(const Network& net, NodeId v) {
  if (net.torus()) throw std::invalid_argument("border distance is undefined on a torus");
  const Point& p = net.position(v);
  const double l = net.side_length();
  const double d = std::min({p.x, l - p.x, p.y, l - p.y});
  return std::max(0.0, d) / net.radio_range();
}

}  // namespace ncast

#endif  // NCAST_NETWORK_HPP
