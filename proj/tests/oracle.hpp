#pragma once

// Brute-force congestion recount, kept independent of the metric module: it
// walks raw hop lists, re-derives receiving ports from address digits alone,
// and keys ports by printed address rather than dense ids.

#include <map>
#include <set>
#include <string>
#include <tuple>

#include "pgft/metric.hpp"
#include "pgft/routing.hpp"
#include "pgft/topology.hpp"

namespace testutil {

// (address string, "down"/"up", slot) -> (source set, destination set)
using OracleKey = std::tuple<std::string, std::string, int>;
using OracleCounts = std::map<OracleKey, std::pair<std::set<pgft::Nid>, std::set<pgft::Nid>>>;

OracleCounts oracle_flow_counts(const pgft::Topology& topo, const pgft::RouteSet& routes,
                                bool input_view);

// True iff the implementation report matches the oracle on every port.
bool oracle_matches(const pgft::Topology& topo, const pgft::RouteSet& routes,
                    const pgft::CongestionReport& report, std::string* mismatch = nullptr);

}  // namespace testutil
