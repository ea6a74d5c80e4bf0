#ifndef NCAST_TOPOLOGY_IO_HPP
#define NCAST_TOPOLOGY_IO_HPP

// Line-oriented topology text:
//
//   N r torus side family M seed
//   id x y                        (N lines)
//   id deg neighbor-ids...        (N lines)
//
// Reals are written in shortest round-trip form, so positions survive a
// write/read cycle bit-for-bit.

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ncast/format.hpp"
#include "ncast/network.hpp"

namespace ncast {

inline void write_topology(std::ostream& os, const Network& net) {
  const auto& m = net.meta();
  os << net.size() << ' ' << format_double(net.radio_range()) << ' ' << (net.torus() ? 1 : 0)
     << ' ' << format_double(net.side_length()) << ' ' << to_string(m.family) << ' '
     << format_double(m.density) << ' ' << m.seed << '\n';
  for (std::size_t v = 0; v < net.size(); ++v) {
    const Point& p = net.positions()[v];
    os << v << ' ' << format_double(p.x) << ' ' << format_double(p.y) << '\n';
  }
  for (std::size_t v = 0; v < net.size(); ++v) {
    const auto& hv = net.neighbors(node_at(v));
    os << v << ' ' << hv.size();
    for (NodeId u : hv) os << ' ' << index(u);
    os << '\n';
  }
}

inline std::string topology_to_string(const Network& net) {
  std::ostringstream os;
  write_topology(os, net);
  return os.str();
}

namespace detail {

inline std::string next_token(std::istream& is, const char* what) {
  std::string tok;
  if (!(is >> tok)) throw std::runtime_error(std::string("topology: missing ") + what);
  return tok;
}

}  // namespace detail

inline Network read_topology(std::istream& is) {
  using detail::next_token;
  const auto n = parse_integer<std::size_t>(next_token(is, "node count"));
  const double r = parse_double(next_token(is, "radio range"));
  const auto torus_flag = parse_integer<int>(next_token(is, "torus flag"));
  const double side = parse_double(next_token(is, "side length"));
  NetworkMeta meta;
  meta.family = family_from_string(next_token(is, "family"));
  meta.density = parse_double(next_token(is, "density"));
  meta.seed = parse_integer<std::uint64_t>(next_token(is, "seed"));
  if (meta.family == Family::lattice) meta.lattice_radius = static_cast<int>(std::lround(r));

  std::vector<Point> pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto id = parse_integer<std::size_t>(next_token(is, "node id"));
    if (id != i) throw std::runtime_error("topology: node ids must be dense and ordered");
    pos[i].x = parse_double(next_token(is, "x"));
    pos[i].y = parse_double(next_token(is, "y"));
  }
  std::vector<std::vector<NodeId>> nbrs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto id = parse_integer<std::size_t>(next_token(is, "node id"));
    if (id != i) throw std::runtime_error("topology: neighbor lines must be dense and ordered");
    const auto deg = parse_integer<std::size_t>(next_token(is, "degree"));
    nbrs[i].reserve(deg);
    for (std::size_t k = 0; k < deg; ++k) {
      nbrs[i].push_back(node_at(parse_integer<std::size_t>(next_token(is, "neighbor id"))));
    }
  }
  return Network(std::move(pos), r, torus_flag != 0, side, meta, std::move(nbrs));
}

inline Network read_topology_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open topology file: " + path);
  return read_topology(in);
}

inline void write_topology_file(const std::string& path, const Network& net) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write topology file: " + path);
  write_topology(out, net);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ncast

#endif  // NCAST_TOPOLOGY_IO_HPP
