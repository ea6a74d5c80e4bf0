// Min-cut surfaces on a 20x20 plane lattice: uniform rates starve the border,
// IR-MS lifts it. Writes iron.csv and irms.csv for surface.gp.

#include <fstream>
#include <iostream>

#include "ncast/ncast.hpp"

int main() {
  using namespace ncast;
  const Network net = generate_lattice(20, 1, false);
  const NodeId s = pick_source(net);
  for (Heuristic h : {Heuristic::iron, Heuristic::irms}) {
    const RateAssignment ra = assign_rates(h, net, s, 4.0);
    const BroadcastCapacity bc = broadcast_capacity(net, ra, s);
    const char* file = h == Heuristic::iron ? "iron.csv" : "irms.csv";
    std::ofstream out(file);
    write_surface_csv(out, net, bc.per_destination);
    std::cout << to_string(h) << ": capacity " << format_double(bc.value) << ", E_cost "
              << format_double(cost_per_broadcast(ra, bc.value)) << " -> " << file << '\n';
  }
}
