#include "pgft/routing.hpp"

#include <sstream>
#include <stdexcept>

namespace pgft {

namespace {

int up_choice(const Topology& topo, const SelectionPolicy& policy, Nid src, Nid dst, Nid id,
              int level) {
  const PgftParams& params = topo.params();
  if (policy.base == BaseAlgo::Random) {
    int options = params.up_arity[level + 1] * params.parallel[level + 1];
    return random_index(policy.seed, src, dst, level, Direction::Up, options);
  }
  return dmodk_up_index(level, id, params);
}

int down_round_choice(const Topology& topo, const SelectionPolicy& policy, Nid src, Nid dst,
                      Nid id, int level) {
  const PgftParams& params = topo.params();
  if (policy.base == BaseAlgo::Random) {
    return random_index(policy.seed, src, dst, level, Direction::Down, params.parallel[level]);
  }
  return down_parallel_index(level, id, params);
}

}  // namespace

Route compute_route(const Topology& topo, const SelectionPolicy& policy, Nid src, Nid dst) {
  if (src == dst) throw std::invalid_argument("compute_route: src equals dst");
  const PgftParams& params = topo.params();
  const Nid id = policy.routing_id(src, dst);
  const int nca = topo.nca_level(src, dst);
  const std::vector<int> dst_digits = topo.node_digits(dst);

  Route route;
  route.src = src;
  route.dst = dst;
  route.hops.reserve(2 * nca + 1);

  SwitchId cur = topo.leaf_of(src);
  for (int level = 0; level < nca; ++level) {
    int slot = up_choice(topo, policy, src, dst, id, level);
    route.hops.push_back(Hop{cur, Direction::Up, slot});
    cur = topo.resolve_port(cur, Direction::Up, slot).sw;
  }
  for (int level = nca; level >= 0; --level) {
    // Child index forced by the destination: its c_level digit, or the leaf
    // port rank at level 0.
    int child = level > 0 ? dst_digits[params.levels - 1 - level] : dst_digits[params.levels - 1];
    int round = down_round_choice(topo, policy, src, dst, id, level);
    int slot = round * params.down_arity[level] + child;
    route.hops.push_back(Hop{cur, Direction::Down, slot});
    if (level > 0) cur = topo.resolve_port(cur, Direction::Down, slot).sw;
  }
  return route;
}

RouteSet compute_routes(const Topology& topo, const SelectionPolicy& policy,
                        const Pattern& pattern) {
  RouteSet set;
  set.policy_name = policy.name();
  set.seed = policy.seed;
  set.pattern_name = pattern.name;
  set.routes.reserve(pattern.pairs.size());
  for (auto [src, dst] : pattern.pairs) {
    try {
      set.routes.push_back(compute_route(topo, policy, src, dst));
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "pair (" << src << "," << dst << "): " << e.what();
      throw std::invalid_argument(os.str());
    }
  }
  return set;
}

ForwardingTables forwarding_tables(const Topology& topo, const SelectionPolicy& policy) {
  if (!policy.destination_based()) {
    throw std::invalid_argument("forwarding_tables: policy is not destination-based");
  }
  const PgftParams& params = topo.params();
  ForwardingTables tables;
  tables.entries.resize(topo.switch_count());
  for (SwitchId sw = 0; sw < topo.switch_count(); ++sw) {
    const int level = topo.addr(sw).level;
    tables.entries[sw].resize(topo.node_count());
    for (Nid dst = 0; dst < topo.node_count(); ++dst) {
      Nid id = policy.id_map ? (*policy.id_map)[dst] : dst;
      ForwardingTables::Entry& e = tables.entries[sw][dst];
      if (topo.is_ancestor(sw, dst)) {
        std::vector<int> digits = topo.node_digits(dst);
        int child =
            level > 0 ? digits[params.levels - 1 - level] : digits[params.levels - 1];
        int round = down_parallel_index(level, id, params);
        e.dir = Direction::Down;
        e.slot = round * params.down_arity[level] + child;
      } else {
        e.dir = Direction::Up;
        e.slot = dmodk_up_index(level, id, params);
      }
    }
  }
  return tables;
}

Route table_route(const Topology& topo, const ForwardingTables& tables, Nid src, Nid dst) {
  if (src == dst) throw std::invalid_argument("table_route: src equals dst");
  Route route;
  route.src = src;
  route.dst = dst;
  SwitchId cur = topo.leaf_of(src);
  while (true) {
    const ForwardingTables::Entry& e = tables.entries[cur][dst];
    route.hops.push_back(Hop{cur, e.dir, e.slot});
    Topology::Resolved r = topo.resolve_port(cur, e.dir, e.slot);
    if (r.is_node) break;
    cur = r.sw;
  }
  return route;
}

std::vector<std::string> validate_route(const Topology& topo, const Route& route) {
  std::vector<std::string> violations;
  if (route.hops.empty()) {
    violations.push_back("empty route");
    return violations;
  }

  // Adjacency and delivery.
  if (route.hops.front().sw != topo.leaf_of(route.src)) {
    violations.push_back("route does not start at the source leaf");
  }
  SwitchId expected = route.hops.front().sw;
  for (std::size_t i = 0; i < route.hops.size(); ++i) {
    const Hop& hop = route.hops[i];
    if (hop.sw != expected) {
      violations.push_back("hop " + std::to_string(i) + " not adjacent to previous hop");
      return violations;
    }
    Topology::Resolved r;
    try {
      r = topo.resolve_port(hop.sw, hop.dir, hop.slot);
    } catch (const std::exception&) {
      violations.push_back("hop " + std::to_string(i) + " slot out of range");
      return violations;
    }
    if (i + 1 == route.hops.size()) {
      if (!r.is_node || r.nid != route.dst) {
        violations.push_back("last hop does not deliver to the destination");
      }
    } else {
      if (r.is_node) {
        violations.push_back("hop " + std::to_string(i) + " delivers before the route ends");
        return violations;
      }
      expected = r.sw;
    }
  }

  // up*-down* shape: levels strictly rise, then strictly fall; no revisits.
  bool descending = false;
  std::vector<SwitchId> seen;
  for (std::size_t i = 0; i < route.hops.size(); ++i) {
    const Hop& hop = route.hops[i];
    for (SwitchId s : seen) {
      if (s == hop.sw) {
        violations.push_back("shape violation: switch revisited");
        return violations;
      }
    }
    seen.push_back(hop.sw);
    if (hop.dir == Direction::Down) {
      descending = true;
    } else if (descending) {
      violations.push_back("shape violation: up hop after a down hop");
      return violations;
    }
  }

  // Shortest length.
  std::size_t expected_len = 2 * static_cast<std::size_t>(topo.nca_level(route.src, route.dst)) + 1;
  if (route.hops.size() != expected_len) {
    violations.push_back("length violation: expected " + std::to_string(expected_len) +
                         " switches, got " + std::to_string(route.hops.size()));
  }
  return violations;
}

}  // namespace pgft
