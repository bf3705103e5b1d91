#pragma once

#include <map>
#include <vector>

#include "pgft/routing.hpp"
#include "pgft/topology.hpp"

namespace pgft {

// Which side of each traversed link the counts are attributed to.
// Output: the sending switch port of every hop, delivery included.
// Input: the receiving port on the downstream switch; delivery hops have no
// downstream switch and are skipped.
enum class MetricDirection { Output, Input };

std::string_view to_string(MetricDirection dir);

struct FlowCounts {
  PortRef port;
  int src_count = 0;  // distinct source NIDs over routes using the port
  int dst_count = 0;  // distinct destination NIDs
};

// min(src_count, dst_count): the number of unrelated flows that can meet at
// the port; 1 means the port carries a single flow.
int c_port(const FlowCounts& counts);

// Per-port counts for every port used by at least one route, ascending port id.
std::vector<FlowCounts> flow_counts(const Topology& topo, const RouteSet& routes,
                                    MetricDirection dir);

struct CongestionReport {
  MetricDirection direction = MetricDirection::Output;
  struct Row {
    PortRef port;
    int src_count = 0;
    int dst_count = 0;
    int c = 0;
  };
  std::vector<Row> rows;           // used ports only, ascending port id
  int c_topo = 0;                  // max c over all ports; 0 for an empty set
  std::vector<PortRef> hotspots;   // ports achieving c_topo (empty when c_topo == 0)

  std::map<int, int> histogram() const;  // c value -> port count
};

CongestionReport analyze(const Topology& topo, const RouteSet& routes, MetricDirection dir);

}  // namespace pgft
