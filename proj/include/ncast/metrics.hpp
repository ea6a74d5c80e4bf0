#ifndef NCAST_METRICS_HPP
#define NCAST_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <istream>
#include <ostream>
#include <string>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ncast/baselines.hpp"
#include "ncast/format.hpp"
#include "ncast/mincut.hpp"
#include "ncast/network.hpp"

namespace ncast {

/// Approximate relative efficiency achievable without network coding; drawn
/// as a reference line next to measured efficiencies.
inline constexpr double kNoCodingEfficiencyBound = 0.609;

struct CostReport {
  double total_rate = 0.0;
  double capacity = 0.0;
  double e_cost = 0.0;
  std::optional<double> e_rel_eff;
};

/// Transmissions per successfully broadcast packet.
inline double cost_per_broadcast(double total_rate, double capacity) {
  if (!(capacity > 0.0)) throw std::invalid_argument("broadcast capacity must be positive");
  return total_rate / capacity;
}

inline double cost_per_broadcast(const RateAssignment& ra, double capacity) {
  return cost_per_broadcast(ra.total(), capacity);
}

inline double relative_efficiency(double e_cost, double e_optimal) {
  if (!(e_cost > 0.0) || !(e_optimal > 0.0)) {
    throw std::invalid_argument("relative efficiency needs positive costs");
  }
  return e_optimal / e_cost;
}

inline CostReport make_cost_report(const RateAssignment& ra, double capacity,
                                   std::optional<double> e_optimal = std::nullopt) {
  CostReport r;
  r.total_rate = ra.total();
  r.capacity = capacity;
  r.e_cost = cost_per_broadcast(r.total_rate, capacity);
  if (e_optimal) r.e_rel_eff = relative_efficiency(r.e_cost, *e_optimal);
  return r;
}

/// (N-1)/M lower bound on E_optimal. Exact counting bound only when every node
/// reaches exactly M others, i.e. degree-regular torus lattices.
inline double surrogate_optimal(const Network& net) {
  return static_cast<double>(net.size() - 1) / net.meta().density;
}

struct CdfPoint {
  double value = 0.0;
  double fraction = 0.0;
};

/// Empirical CDF: one point per distinct value, fraction of samples <= value.
inline std::vector<CdfPoint> mincut_cdf(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("mincut_cdf: no samples");
  std::sort(values.begin(), values.end());
  std::vector<CdfPoint> cdf;
  const double n = static_cast<double>(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i + 1 < values.size() && values[i + 1] == values[i]) continue;
    cdf.push_back({values[i], static_cast<double>(i + 1) / n});
  }
  return cdf;
}

inline std::vector<CdfPoint> mincut_cdf(const std::vector<DestinationCut>& per_destination) {
  std::vector<double> values;
  values.reserve(per_destination.size());
  for (const auto& d : per_destination) values.push_back(d.mincut);
  return mincut_cdf(std::move(values));
}

/// F(x) for a CDF produced by mincut_cdf.
inline double cdf_at(const std::vector<CdfPoint>& cdf, double x) {
  double f = 0.0;
  for (const auto& p : cdf) {
    if (p.value > x) break;
    f = p.fraction;
  }
  return f;
}

/// True when `upper` puts no more mass below any x than `lower` does, i.e.
/// F_upper(x) <= F_lower(x) at every step of either CDF.
inline bool stochastically_dominates(const std::vector<CdfPoint>& upper,
                                     const std::vector<CdfPoint>& lower, double tol = 1e-12) {
  auto check = [&](const std::vector<CdfPoint>& at) {
    return std::all_of(at.begin(), at.end(), [&](const CdfPoint& p) {
      return cdf_at(upper, p.value) <= cdf_at(lower, p.value) + tol;
    });
  };
  return check(upper) && check(lower);
}

struct BorderBucket {
  double bucket = 0.0;  // lower edge, in radio ranges
  double mean = 0.0;
  double min = 0.0;
  std::size_t count = 0;
};

/// Min-cut statistics grouped by distance to the border, in buckets of
/// `bucket_width` radio ranges.
inline std::vector<BorderBucket> border_distance_stats(const Network& net,
                                                       const std::vector<DestinationCut>& per_destination,
                                                       double bucket_width = 0.5) {
  if (net.torus()) throw std::invalid_argument("border statistics are undefined on a torus");
  if (!(bucket_width > 0.0)) throw std::invalid_argument("bucket width must be positive");
  std::map<long, BorderBucket> buckets;
  for (const auto& d : per_destination) {
    // small slack so lattice distances that are exact multiples land in their own bucket
    const long k = static_cast<long>(std::floor(border_distance(net, d.destination) / bucket_width + 1e-9));
    auto& b = buckets[k];
    if (b.count == 0) {
      b.bucket = static_cast<double>(k) * bucket_width;
      b.min = d.mincut;
    }
    b.min = std::min(b.min, d.mincut);
    b.mean += d.mincut;
    ++b.count;
  }
  std::vector<BorderBucket> out;
  for (auto& [k, b] : buckets) {
    b.mean /= static_cast<double>(b.count);
    out.push_back(b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV writers

inline void write_surface_csv(std::ostream& os, const Network& net,
                              const std::vector<DestinationCut>& per_destination) {
  os << "dest,x,y,mincut\n";
  for (const auto& d : per_destination) {
    const Point& p = net.position(d.destination);
    os << index(d.destination) << ',' << format_double(p.x) << ',' << format_double(p.y) << ','
       << format_double(d.mincut) << '\n';
  }
}

inline void write_cdf_csv(std::ostream& os, const std::vector<CdfPoint>& cdf) {
  os << "value,fraction\n";
  for (const auto& p : cdf) os << format_double(p.value) << ',' << format_double(p.fraction) << '\n';
}

inline void write_border_csv(std::ostream& os, const std::vector<BorderBucket>& buckets) {
  os << "bucket,mean,min,count\n";
  for (const auto& b : buckets) {
    os << format_double(b.bucket) << ',' << format_double(b.mean) << ',' << format_double(b.min)
       << ',' << b.count << '\n';
  }
}

inline void write_rates_csv(std::ostream& os, const RateAssignment& ra, std::string_view heuristic,
                            double m) {
  os << "# heuristic=" << heuristic << " M=" << format_double(m)
     << " source=" << index(ra.source) << '\n';
  os << "node,rate\n";
  for (std::size_t v = 0; v < ra.rates.size(); ++v) {
    os << v << ',' << format_double(ra.rates[v]) << '\n';
  }
}

/// Inverse of write_rates_csv. The source is taken from the header comment.
inline RateAssignment read_rates_csv(std::istream& is) {
  RateAssignment ra;
  bool have_source = false;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("source=");
      if (pos != std::string::npos) {
        auto end = line.find(' ', pos);
        ra.source = node_at(parse_integer<std::size_t>(
            std::string_view(line).substr(pos + 7, end == std::string::npos ? std::string::npos : end - pos - 7)));
        have_source = true;
      }
      continue;
    }
    if (line == "node,rate") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("rates csv: bad line: " + line);
    const auto id = parse_integer<std::size_t>(std::string_view(line).substr(0, comma));
    if (id != ra.rates.size()) throw std::runtime_error("rates csv: node ids must be dense and ordered");
    ra.rates.push_back(parse_double(std::string_view(line).substr(comma + 1)));
  }
  if (!have_source) throw std::runtime_error("rates csv: missing source in header comment");
  return ra;
}

inline void write_forwarders_csv(std::ostream& os, const ForwarderSet& fs) {
  os << "# builder=" << to_string(fs.builder) << " source=" << index(fs.source) << '\n';
  os << "node\n";
  for (NodeId v : fs.members) os << index(v) << '\n';
}

}  // namespace ncast

#endif  // NCAST_METRICS_HPP
