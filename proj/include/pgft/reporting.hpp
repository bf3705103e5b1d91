#pragma once

#include <iosfwd>
#include <string>

#include "pgft/metric.hpp"
#include "pgft/routing.hpp"
#include "pgft/topology.hpp"

namespace pgft {

// Stable, byte-reproducible writers used by the CLI and tests.

// Header: src,dst,hop_index,switch_addr,direction,slot
void write_routes_csv(std::ostream& os, const Topology& topo, const RouteSet& routes);

// Header: switch,dst,direction,slot,display_port
void write_tables_csv(std::ostream& os, const Topology& topo, const ForwardingTables& tables);

// Header: switch,direction,slot,display_port,src_count,dst_count,c
void write_report_csv(std::ostream& os, const Topology& topo, const CongestionReport& report);

// Provenance attached to JSON reports.
struct ReportMeta {
  std::string algorithm;
  std::string base_algorithm;
  std::vector<std::string> type_order;  // grouped algorithms only
  bool has_seed = false;
  std::uint64_t seed = 0;
  std::string pattern;
};

// {algorithm, pattern, direction, c_topo, hotspots:[...], histogram:{...}}
std::string report_json(const Topology& topo, const CongestionReport& report,
                        const ReportMeta& meta);

std::string summary_json(const TopologySummary& summary);
void write_summary_text(std::ostream& os, const TopologySummary& summary);

// DOT rendering of the multigraph; switch names are address tuples, edge
// labels the parallel round. Optional overlay colors the links used by each
// route, classed by destination (or by source for source-based policies).
void write_dot(std::ostream& os, const Topology& topo,
               const std::vector<Route>* highlight = nullptr, bool class_by_source = false);

}  // namespace pgft
