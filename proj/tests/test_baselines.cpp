#include <gtest/gtest.h>

#include "graphs.hpp"
#include "ncast/baselines.hpp"
#include "ncast/lp.hpp"

using namespace ncast;
using ncast::testing::complete_graph;
using ncast::testing::path_graph;
using ncast::testing::star_graph;

namespace {

std::vector<NodeId> ids(std::initializer_list<unsigned> v) {
  std::vector<NodeId> out;
  for (unsigned x : v) out.push_back(node_at(x));
  return out;
}

// Every strict 2-hop neighbor of v is adjacent to some selected relay.
bool covers_two_hop(const Network& net, NodeId v, const std::vector<NodeId>& relays) {
  for (NodeId u : net.neighbors(v)) {
    for (NodeId w : net.neighbors(u)) {
      if (w == v || net.adjacent(v, w)) continue;
      bool hit = false;
      for (NodeId r : relays) hit = hit || net.adjacent(r, w);
      if (!hit) return false;
    }
  }
  return true;
}

}  // namespace

TEST(MprSelect, PathEnds) {
  EXPECT_TRUE(mpr_select(path_graph(3), node_at(1)).empty());
  EXPECT_EQ(mpr_select(path_graph(4), node_at(1)), ids({2}));
}

TEST(MprSelect, StarCenterNeedsNoRelays) {
  EXPECT_TRUE(mpr_select(star_graph(5), node_at(0)).empty());
}

TEST(MprSelect, CoversTwoHopNeighborhood) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const Network net = generate_connected_random_unit_disk(150, 10, seed % 2 == 1, seed);
    for (std::size_t v = 0; v < net.size(); ++v) {
      const auto relays = mpr_select(net, node_at(v));
      ASSERT_TRUE(covers_two_hop(net, node_at(v), relays)) << v;
      for (NodeId r : relays) ASSERT_TRUE(net.adjacent(node_at(v), r));
    }
  }
}

TEST(MprCds, CompleteGraphKeepsSmallestId) {
  const auto fs = mpr_cds(complete_graph(6), node_at(3));
  EXPECT_EQ(fs.members, ids({0}));
  EXPECT_EQ(flooding_cost(mpr_cds(complete_graph(6), node_at(0))), 1.0);
}

TEST(MprCds, PathCoversInterior) {
  const Network net = path_graph(5);
  const auto fs = mpr_cds(net, node_at(0));
  for (unsigned v : {1u, 2u, 3u}) {
    EXPECT_TRUE(std::binary_search(fs.members.begin(), fs.members.end(), node_at(v))) << v;
  }
  EXPECT_TRUE(is_valid_forwarder_set(net, fs));
}

TEST(GreedyCds, StarAndPath) {
  EXPECT_EQ(greedy_cds(star_graph(7), node_at(0)).members, ids({0}));
  const auto fs = greedy_cds(path_graph(5), node_at(0));
  EXPECT_EQ(fs.members, ids({1, 2, 3}));
  EXPECT_EQ(flooding_cost(fs), 4.0);
}

TEST(FloodingCost, Examples) {
  ForwarderSet complete{ids({0}), ForwarderBuilder::greedy_cds, node_at(0)};
  EXPECT_EQ(flooding_cost(complete), 1.0);
  EXPECT_EQ(flooding_cost(greedy_cds(star_graph(4), node_at(0))), 1.0);
  EXPECT_EQ(flooding_cost(greedy_cds(star_graph(4), node_at(2))), 2.0);
}

TEST(ForwarderSets, ValidOnRandomNetworks) {
  for (bool torus : {false, true}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Network net = generate_connected_random_unit_disk(200, 8 + 2 * static_cast<double>(seed % 4), torus, seed);
      const NodeId s = pick_source(net);
      const auto mpr = mpr_cds(net, s);
      const auto greedy = greedy_cds(net, s);
      EXPECT_TRUE(is_valid_forwarder_set(net, mpr)) << seed;
      EXPECT_TRUE(is_valid_forwarder_set(net, greedy)) << seed;
      EXPECT_TRUE(std::is_sorted(mpr.members.begin(), mpr.members.end()));
      EXPECT_TRUE(is_dominating(net, greedy.members));
    }
  }
}

TEST(ForwarderSets, ValidOnLattices) {
  for (bool torus : {false, true}) {
    const Network net = generate_lattice(10, 2, torus);
    const NodeId s = pick_source(net);
    EXPECT_TRUE(is_valid_forwarder_set(net, mpr_cds(net, s)));
    EXPECT_TRUE(is_valid_forwarder_set(net, greedy_cds(net, s)));
  }
}

TEST(ForwarderSets, NeverBeatTheCodingOptimum) {
  SplitMix64 rng(31);
  for (int inst = 0; inst < 25; ++inst) {
    const std::size_t n = 6 + rng() % 15;
    const Network net = ncast::testing::random_connected_graph(n, 0.25, rng);
    const NodeId s = node_at(rng() % n);
    const LpSolution opt = solve_lp(build_lp(net, s));
    ASSERT_EQ(opt.status, LpStatus::optimal);
    EXPECT_GE(flooding_cost(mpr_cds(net, s)), opt.objective - 1e-9);
    EXPECT_GE(flooding_cost(greedy_cds(net, s)), opt.objective - 1e-9);
  }
}

TEST(ForwarderSets, DisconnectedInputRejected) {
  const Network net = ncast::testing::make_graph(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(greedy_cds(net, node_at(0)), std::invalid_argument);
  EXPECT_FALSE(is_valid_forwarder_set(net, mpr_cds(net, node_at(0))));
}
