#include "pgft/reporting.hpp"

#include <array>
#include <map>
#include <ostream>

#include "json.hpp"

namespace pgft {

namespace {

using ordered_json = nlohmann::ordered_json;

// Address tuples contain commas, so the field is always quoted.
std::string csv_addr(const Topology& topo, SwitchId sw) {
  return "\"" + topo.addr(sw).to_string() + "\"";
}

ordered_json row_json(const Topology& topo, const CongestionReport::Row& row) {
  ordered_json j;
  j["switch"] = topo.addr(row.port.sw).to_string();
  j["direction"] = to_string(row.port.dir);
  j["slot"] = row.port.slot;
  j["display_port"] = topo.display_port(row.port.sw, row.port.dir, row.port.slot);
  j["src_count"] = row.src_count;
  j["dst_count"] = row.dst_count;
  j["c"] = row.c;
  return j;
}

}  // namespace

void write_routes_csv(std::ostream& os, const Topology& topo, const RouteSet& routes) {
  os << "src,dst,hop_index,switch_addr,direction,slot\n";
  for (const Route& route : routes.routes) {
    for (std::size_t i = 0; i < route.hops.size(); ++i) {
      const Hop& hop = route.hops[i];
      os << route.src << ',' << route.dst << ',' << i << ',' << csv_addr(topo, hop.sw) << ','
         << to_string(hop.dir) << ',' << hop.slot << '\n';
    }
  }
}

void write_tables_csv(std::ostream& os, const Topology& topo, const ForwardingTables& tables) {
  os << "switch,dst,direction,slot,display_port\n";
  for (SwitchId sw = 0; sw < topo.switch_count(); ++sw) {
    for (Nid dst = 0; dst < topo.node_count(); ++dst) {
      const ForwardingTables::Entry& e = tables.entries[sw][dst];
      os << csv_addr(topo, sw) << ',' << dst << ',' << to_string(e.dir) << ',' << e.slot << ','
         << topo.display_port(sw, e.dir, e.slot) << '\n';
    }
  }
}

void write_report_csv(std::ostream& os, const Topology& topo, const CongestionReport& report) {
  os << "switch,direction,slot,display_port,src_count,dst_count,c\n";
  for (const CongestionReport::Row& row : report.rows) {
    os << csv_addr(topo, row.port.sw) << ',' << to_string(row.port.dir) << ',' << row.port.slot
       << ',' << topo.display_port(row.port.sw, row.port.dir, row.port.slot) << ','
       << row.src_count << ',' << row.dst_count << ',' << row.c << '\n';
  }
}

std::string report_json(const Topology& topo, const CongestionReport& report,
                        const ReportMeta& meta) {
  ordered_json j;
  j["algorithm"] = meta.algorithm;
  j["base_algorithm"] = meta.base_algorithm;
  if (!meta.type_order.empty()) j["type_order"] = meta.type_order;
  if (meta.has_seed) j["seed"] = meta.seed;
  j["pattern"] = meta.pattern;
  j["direction"] = to_string(report.direction);
  j["c_topo"] = report.c_topo;
  j["hotspots"] = ordered_json::array();
  for (const CongestionReport::Row& row : report.rows) {
    if (report.c_topo > 0 && row.c == report.c_topo) j["hotspots"].push_back(row_json(topo, row));
  }
  ordered_json hist = ordered_json::object();
  for (auto [c, count] : report.histogram()) hist[std::to_string(c)] = count;
  j["histogram"] = hist;
  return j.dump(2) + "\n";
}

std::string summary_json(const TopologySummary& summary) {
  ordered_json j;
  j["pgft"] = summary.params.to_string();
  j["levels"] = ordered_json::array();
  for (const auto& lev : summary.levels) {
    ordered_json l;
    l["level"] = lev.level;
    l["switches"] = lev.switches;
    l["down_ports"] = lev.down_ports;
    l["up_ports"] = lev.up_ports;
    j["levels"].push_back(l);
  }
  j["cbb"] = ordered_json::array();
  for (const auto& c : summary.cbb) {
    ordered_json e;
    e["level"] = c.level;
    e["up_links"] = c.up_links;
    e["down_links"] = c.down_links;
    e["ratio"] = c.ratio;
    j["cbb"].push_back(e);
  }
  j["nodes"]["total"] = summary.node_count;
  j["nodes"]["by_type"] = ordered_json::object();
  for (const auto& [label, count] : summary.nodes_by_type) j["nodes"]["by_type"][label] = count;
  return j.dump(2) + "\n";
}

void write_summary_text(std::ostream& os, const TopologySummary& summary) {
  os << summary.params.to_string() << "\n";
  os << "nodes: " << summary.node_count;
  const char* sep = " (";
  for (const auto& [label, count] : summary.nodes_by_type) {
    os << sep << label << ": " << count;
    sep = ", ";
  }
  if (!summary.nodes_by_type.empty()) os << ")";
  os << "\n";
  for (const auto& lev : summary.levels) {
    os << "level " << lev.level << ": " << lev.switches << " switches, " << lev.down_ports
       << " down";
    if (lev.up_ports > 0) os << " + " << lev.up_ports << " up";
    os << " ports each\n";
  }
  for (const auto& c : summary.cbb) {
    os << "cbb level " << c.level << ": " << c.up_links << "/" << c.down_links << " = " << c.ratio
       << (c.ratio < 1.0 ? " (nonfull)" : "") << "\n";
  }
}

void write_dot(std::ostream& os, const Topology& topo,
               const std::vector<Route>* highlight, bool class_by_source) {
  // Every link is keyed by its down-side port (unique per link).
  std::map<std::pair<SwitchId, int>, Nid> edge_class;
  if (highlight) {
    for (const Route& route : *highlight) {
      Nid cls = class_by_source ? route.src : route.dst;
      for (const Hop& hop : route.hops) {
        std::pair<SwitchId, int> key;
        if (hop.dir == Direction::Down) {
          key = {hop.sw, hop.slot};
        } else {
          std::optional<PortRef> in = topo.receiving_port(hop.sw, hop.dir, hop.slot);
          key = {in->sw, in->slot};
        }
        auto [it, inserted] = edge_class.try_emplace(key, cls);
        if (!inserted && cls < it->second) it->second = cls;
      }
    }
  }
  static constexpr std::array<const char*, 8> palette = {
      "red", "blue", "forestgreen", "darkorange", "purple", "brown", "deeppink", "teal"};

  os << "graph pgft {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (SwitchId sw = 0; sw < topo.switch_count(); ++sw) {
    os << "  \"" << topo.addr(sw).to_string() << "\";\n";
  }
  for (Nid n = 0; n < topo.node_count(); ++n) {
    os << "  \"n" << n << "\" [shape=record,label=\"" << n << "|" << topo.type_of(n) << "\"];\n";
  }
  for (SwitchId sw = 0; sw < topo.switch_count(); ++sw) {
    for (int slot = 0; slot < topo.down_slot_count(sw); ++slot) {
      Topology::Resolved r = topo.resolve_port(sw, Direction::Down, slot);
      os << "  \"" << topo.addr(sw).to_string() << "\" -- ";
      if (r.is_node) {
        os << "\"n" << r.nid << "\"";
      } else {
        os << "\"" << topo.addr(r.sw).to_string() << "\"";
      }
      os << " [label=\"" << r.parallel_round << "\"";
      auto it = edge_class.find({sw, slot});
      if (it != edge_class.end()) {
        os << ",color=" << palette[it->second % palette.size()] << ",penwidth=2";
      }
      os << "];\n";
    }
  }
  os << "}\n";
}

}  // namespace pgft
