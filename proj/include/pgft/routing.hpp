#pragma once

#include <string>
#include <vector>

#include "pgft/patterns.hpp"
#include "pgft/policy.hpp"
#include "pgft/topology.hpp"

namespace pgft {

struct Hop {
  SwitchId sw = -1;
  Direction dir = Direction::Down;
  int slot = 0;

  bool operator==(const Hop&) const = default;
};

// One shortest up*-down* route. hops[i] is the output port taken at the i-th
// switch on the path; the last hop is the delivery port towards dst.
struct Route {
  Nid src = -1;
  Nid dst = -1;
  std::vector<Hop> hops;

  bool operator==(const Route&) const = default;
};

struct RouteSet {
  std::string policy_name;
  std::uint64_t seed = 0;
  std::string pattern_name;
  std::vector<Route> routes;  // one per pattern pair, pattern order
};

// Ascends to the first ancestor of dst, then descends with policy-chosen
// parallel rounds. Throws std::invalid_argument on src == dst or bad NIDs.
Route compute_route(const Topology& topo, const SelectionPolicy& policy, Nid src, Nid dst);

// One route per pattern pair; deterministic given policy (including seed).
RouteSet compute_routes(const Topology& topo, const SelectionPolicy& policy,
                        const Pattern& pattern);

// Per-switch destination-based tables: entries[sw][dst] is the output port.
struct ForwardingTables {
  struct Entry {
    Direction dir = Direction::Down;
    int slot = 0;
  };
  std::vector<std::vector<Entry>> entries;
};

// Valid only for the dmodk family (destination-based lookup); throws
// std::invalid_argument otherwise. Table-driven lookup reproduces
// compute_route exactly.
ForwardingTables forwarding_tables(const Topology& topo, const SelectionPolicy& policy);

// Replays a route through the tables, for cross-checking against compute_route.
Route table_route(const Topology& topo, const ForwardingTables& tables, Nid src, Nid dst);

// Structural checks: adjacency, up*-down* shape, shortest length, delivery.
// Empty result iff the route is valid.
std::vector<std::string> validate_route(const Topology& topo, const Route& route);

}  // namespace pgft
