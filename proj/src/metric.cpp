#include "pgft/metric.hpp"

#include <algorithm>
#include <set>

namespace pgft {

std::string_view to_string(MetricDirection dir) {
  return dir == MetricDirection::Output ? "output" : "input";
}

int c_port(const FlowCounts& counts) {
  return std::min(counts.src_count, counts.dst_count);
}

std::vector<FlowCounts> flow_counts(const Topology& topo, const RouteSet& routes,
                                    MetricDirection dir) {
  // Endpoint sets per dense port id; merging is order-independent.
  std::vector<std::set<Nid>> srcs(topo.port_count()), dsts(topo.port_count());
  for (const Route& route : routes.routes) {
    for (const Hop& hop : route.hops) {
      int pid;
      if (dir == MetricDirection::Output) {
        pid = topo.port_id(hop.sw, hop.dir, hop.slot);
      } else {
        std::optional<PortRef> in = topo.receiving_port(hop.sw, hop.dir, hop.slot);
        if (!in) continue;  // delivery: the receiver is an end-node
        pid = topo.port_id(in->sw, in->dir, in->slot);
      }
      srcs[pid].insert(route.src);
      dsts[pid].insert(route.dst);
    }
  }
  std::vector<FlowCounts> out;
  for (int pid = 0; pid < topo.port_count(); ++pid) {
    if (srcs[pid].empty()) continue;
    out.push_back(FlowCounts{topo.port_from_id(pid), static_cast<int>(srcs[pid].size()),
                             static_cast<int>(dsts[pid].size())});
  }
  return out;
}

CongestionReport analyze(const Topology& topo, const RouteSet& routes, MetricDirection dir) {
  CongestionReport report;
  report.direction = dir;
  for (const FlowCounts& fc : flow_counts(topo, routes, dir)) {
    report.rows.push_back(CongestionReport::Row{fc.port, fc.src_count, fc.dst_count, c_port(fc)});
    report.c_topo = std::max(report.c_topo, report.rows.back().c);
  }
  if (report.c_topo > 0) {
    for (const CongestionReport::Row& row : report.rows) {
      if (row.c == report.c_topo) report.hotspots.push_back(row.port);
    }
  }
  return report;
}

std::map<int, int> CongestionReport::histogram() const {
  std::map<int, int> h;
  for (const Row& row : rows) ++h[row.c];
  return h;
}

}  // namespace pgft
