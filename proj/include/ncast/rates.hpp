#ifndef NCAST_RATES_HPP
#define NCAST_RATES_HPP

// Rate-selection heuristics. Every heuristic gives the source rate M.

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ncast/mincut.hpp"
#include "ncast/network.hpp"

namespace ncast {

enum class Heuristic { iron, iren_iron, irms };

inline std::string_view to_string(Heuristic h) {
  switch (h) {
    case Heuristic::iron: return "IRON";
    case Heuristic::iren_iron: return "IREN-IRON";
    case Heuristic::irms: return "IR-MS";
  }
  return "?";
}

inline Heuristic heuristic_from_string(std::string_view s) {
  if (s == "IRON" || s == "iron") return Heuristic::iron;
  if (s == "IREN-IRON" || s == "iren-iron" || s == "IREN/IRON" || s == "iren") return Heuristic::iren_iron;
  if (s == "IR-MS" || s == "irms" || s == "ir-ms") return Heuristic::irms;
  throw std::invalid_argument("unknown heuristic: " + std::string(s));
}

namespace detail {

inline void check_rate_inputs(const Network& net, NodeId s, double m) {
  if (index(s) >= net.size()) throw std::invalid_argument("source not in network");
  if (!(m > 0.0)) throw std::invalid_argument("source rate M must be positive");
}

}  // namespace detail

/// Identical rate 1 for every node, M for the source.
inline RateAssignment rates_iron(const Network& net, NodeId s, double m) {
  detail::check_rate_inputs(net, s, m);
  RateAssignment ra{std::vector<double>(net.size(), 1.0), s};
  ra.rates[index(s)] = m;
  return ra;
}

/// IRON plus rate M for nodes closer than one radio range to the border.
/// On a torus only the source is exceptional.
inline RateAssignment rates_iren_iron(const Network& net, NodeId s, double m) {
  RateAssignment ra = rates_iron(net, s, m);
  if (net.torus()) return ra;
  for (std::size_t v = 0; v < net.size(); ++v) {
    if (border_distance(net, node_at(v)) < 1.0) ra.rates[v] = m;
  }
  return ra;
}

enum class IrmsNeighborhood {
  open,    // min over H_v
  closed,  // min over H_v and v itself
};

/// C_v = M / min_{u in H_v} |H_u|; the source keeps rate M.
inline RateAssignment rates_irms(const Network& net, NodeId s, double m,
                                 IrmsNeighborhood hood = IrmsNeighborhood::open) {
  detail::check_rate_inputs(net, s, m);
  RateAssignment ra{std::vector<double>(net.size(), 0.0), s};
  for (std::size_t v = 0; v < net.size(); ++v) {
    const auto& hv = net.neighbors(node_at(v));
    if (hv.empty()) throw std::invalid_argument("IR-MS is undefined on isolated nodes");
    std::size_t starving = std::numeric_limits<std::size_t>::max();
    for (NodeId u : hv) starving = std::min(starving, net.degree(u));
    if (hood == IrmsNeighborhood::closed) starving = std::min(starving, hv.size());
    ra.rates[v] = m / static_cast<double>(starving);
  }
  ra.rates[index(s)] = m;
  return ra;
}

inline RateAssignment assign_rates(Heuristic h, const Network& net, NodeId s, double m) {
  switch (h) {
    case Heuristic::iron: return rates_iron(net, s, m);
    case Heuristic::iren_iron: return rates_iren_iron(net, s, m);
    case Heuristic::irms: return rates_irms(net, s, m);
  }
  throw std::invalid_argument("unknown heuristic");
}

/// Summed rate heard by v: sum of C_u over u in H_v.
inline double received_rate(const Network& net, const RateAssignment& ra, NodeId v) {
  double sum = 0.0;
  for (NodeId u : net.neighbors(v)) sum += ra.rate(u);
  return sum;
}

}  // namespace ncast

#endif  // NCAST_RATES_HPP
