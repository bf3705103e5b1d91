#include "pgft/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "pgft/config.hpp"
#include "pgft/patterns.hpp"
#include "pgft/policy.hpp"
#include "pgft/reporting.hpp"
#include "pgft/routing.hpp"

namespace pgft {

namespace {

// Flag misuse, as opposed to bad input data (std::invalid_argument).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

struct LoadedTopology {
  Topology topo;
  bool has_type_rules = false;
};

LoadedTopology load_topology(const RunConfig& cfg) {
  if (cfg.spec_text.empty() == cfg.config_path.empty()) {
    throw UsageError("exactly one of --spec and --config is required");
  }
  if (!cfg.spec_text.empty()) {
    return LoadedTopology{Topology::build(parse_pgft_spec(cfg.spec_text)), false};
  }
  TopologyConfig tc = parse_topology_config(read_file(cfg.config_path));
  return LoadedTopology{Topology::build(tc.params, tc.type_rules), !tc.type_rules.empty()};
}

SelectionPolicy make_policy(const std::string& algo, const RunConfig& cfg,
                            const LoadedTopology& loaded) {
  SelectionPolicy policy;
  policy.seed = cfg.seed;
  if (algo == "random") {
    policy.base = BaseAlgo::Random;
    return policy;
  }
  bool grouped = false;
  std::string base = algo;
  if (algo == "gdmodk" || algo == "gsmodk") {
    grouped = true;
    base = algo.substr(1);
  }
  if (base == "dmodk") {
    policy.base = BaseAlgo::Dmodk;
  } else if (base == "smodk") {
    policy.base = BaseAlgo::Smodk;
  } else {
    throw UsageError("unknown algorithm '" + algo + "'");
  }
  if (grouped) {
    if (!loaded.has_type_rules) {
      throw UsageError("grouped algorithms require a --config topology with type rules");
    }
    std::vector<std::string> order =
        cfg.type_order.empty() ? loaded.topo.present_types() : cfg.type_order;
    policy.id_map = group_reindex(loaded.topo, order);
  }
  return policy;
}

Pattern select_pattern(const Topology& topo, const std::string& selector) {
  if (selector == "all2all") return all_to_all(topo);
  if (selector == "c2io-mirror") return mirror_c2io(topo);
  if (selector.rfind("type:", 0) == 0) {
    std::string rest = selector.substr(5);
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == rest.size()) {
      throw UsageError("pattern selector 'type:' needs '<src_label>:<dst_label>'");
    }
    return type_to_type(topo, rest.substr(0, colon), rest.substr(colon + 1));
  }
  if (selector.rfind("file:", 0) == 0) {
    Pattern pat = parse_pattern_file(read_file(selector.substr(5)), topo);
    pat.name = selector;
    return pat;
  }
  throw UsageError("unknown pattern selector '" + selector + "'");
}

ReportMeta make_meta(const std::string& algo, const SelectionPolicy& policy,
                     const RunConfig& cfg, const LoadedTopology& loaded,
                     const std::string& pattern_name) {
  ReportMeta meta;
  meta.algorithm = algo;
  meta.base_algorithm = std::string(to_string(policy.base));
  if (policy.grouped()) {
    meta.type_order = cfg.type_order.empty() ? loaded.topo.present_types() : cfg.type_order;
  }
  if (policy.base == BaseAlgo::Random) {
    meta.has_seed = true;
    meta.seed = policy.seed;
  }
  meta.pattern = pattern_name;
  return meta;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write file: " + path);
  f << content;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is{text};
  std::string item;
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run_guarded(const std::function<void()>& body) {
  try {
    body();
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace

int cmd_describe(const RunConfig& cfg) {
  return run_guarded([&] {
    LoadedTopology loaded = load_topology(cfg);
    TopologySummary summary = describe(loaded.topo);
    if (!cfg.out_path.empty()) {
      write_file(cfg.out_path, summary_json(summary));
      write_summary_text(std::cout, summary);
    } else if (cfg.format == "json") {
      std::cout << summary_json(summary);
    } else {
      write_summary_text(std::cout, summary);
    }
  });
}

int cmd_route(const RunConfig& cfg) {
  return run_guarded([&] {
    LoadedTopology loaded = load_topology(cfg);
    SelectionPolicy policy = make_policy(cfg.algo, cfg, loaded);
    if (cfg.dump_tables && !policy.destination_based()) {
      throw UsageError("--tables requires a destination-based algorithm (dmodk or gdmodk)");
    }
    if (cfg.dump_tables && cfg.out_path.empty()) {
      throw UsageError("--tables requires --out");
    }
    Pattern pattern = select_pattern(loaded.topo, cfg.pattern);
    RouteSet routes = compute_routes(loaded.topo, policy, pattern);
    std::ostringstream os;
    write_routes_csv(os, loaded.topo, routes);
    if (cfg.out_path.empty()) {
      std::cout << os.str();
    } else {
      write_file(cfg.out_path, os.str());
    }
    if (cfg.dump_tables) {
      std::ostringstream ts;
      write_tables_csv(ts, loaded.topo, forwarding_tables(loaded.topo, policy));
      write_file(cfg.out_path + ".tables.csv", ts.str());
    }
  });
}

int cmd_analyze(const RunConfig& cfg) {
  return run_guarded([&] {
    LoadedTopology loaded = load_topology(cfg);
    SelectionPolicy policy = make_policy(cfg.algo, cfg, loaded);
    Pattern pattern = select_pattern(loaded.topo, cfg.pattern);
    RouteSet routes = compute_routes(loaded.topo, policy, pattern);
    CongestionReport report = analyze(loaded.topo, routes, cfg.direction);

    std::ostringstream csv;
    write_report_csv(csv, loaded.topo, report);
    std::string json =
        report_json(loaded.topo, report, make_meta(cfg.algo, policy, cfg, loaded, pattern.name));

    if (!cfg.out_path.empty()) {
      if (cfg.format.empty() || cfg.format == "csv") write_file(cfg.out_path + ".csv", csv.str());
      if (cfg.format.empty() || cfg.format == "json") write_file(cfg.out_path + ".json", json);
      std::cout << "c_topo = " << report.c_topo << " (" << report.hotspots.size()
                << " hotspot ports)\n";
    } else if (cfg.format == "csv") {
      std::cout << csv.str();
    } else {
      std::cout << json;
    }
  });
}

int cmd_compare(const RunConfig& cfg) {
  return run_guarded([&] {
    LoadedTopology loaded = load_topology(cfg);
    std::vector<std::string> algos = split_list(cfg.algo);
    std::vector<std::string> patterns = split_list(cfg.pattern);
    if (algos.empty()) throw UsageError("compare needs at least one algorithm");
    if (patterns.empty()) throw UsageError("compare needs at least one pattern");
    if (cfg.seeds < 1) throw UsageError("--seeds must be at least 1");

    struct Row {
      std::string algo, pattern;
      int runs;
      int c_min, c_median, c_max;
      int hot_min, hot_median, hot_max;
    };
    std::vector<Row> rows;
    for (const std::string& algo : algos) {
      for (const std::string& selector : patterns) {
        Pattern pattern = select_pattern(loaded.topo, selector);
        int runs = algo == "random" ? cfg.seeds : 1;
        std::vector<int> cs, hots;
        for (int i = 0; i < runs; ++i) {
          RunConfig run_cfg = cfg;
          run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(i);
          SelectionPolicy policy = make_policy(algo, run_cfg, loaded);
          CongestionReport report =
              analyze(loaded.topo, compute_routes(loaded.topo, policy, pattern), cfg.direction);
          cs.push_back(report.c_topo);
          hots.push_back(static_cast<int>(report.hotspots.size()));
        }
        std::sort(cs.begin(), cs.end());
        std::sort(hots.begin(), hots.end());
        int mid = (runs - 1) / 2;  // lower median
        rows.push_back(Row{algo, pattern.name, runs, cs.front(), cs[mid], cs.back(), hots.front(),
                           hots[mid], hots.back()});
      }
    }

    std::ostringstream os;
    if (cfg.format == "json") {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const Row& r : rows) {
        nlohmann::ordered_json e;
        e["algorithm"] = r.algo;
        e["pattern"] = r.pattern;
        e["direction"] = to_string(cfg.direction);
        e["runs"] = r.runs;
        e["c_topo_min"] = r.c_min;
        e["c_topo_median"] = r.c_median;
        e["c_topo_max"] = r.c_max;
        e["hotspots_min"] = r.hot_min;
        e["hotspots_median"] = r.hot_median;
        e["hotspots_max"] = r.hot_max;
        j.push_back(e);
      }
      os << j.dump(2) << "\n";
    } else {
      os << "algorithm,pattern,direction,runs,c_topo_min,c_topo_median,c_topo_max,"
            "hotspots_min,hotspots_median,hotspots_max\n";
      for (const Row& r : rows) {
        os << r.algo << ',' << r.pattern << ',' << to_string(cfg.direction) << ',' << r.runs
           << ',' << r.c_min << ',' << r.c_median << ',' << r.c_max << ',' << r.hot_min << ','
           << r.hot_median << ',' << r.hot_max << '\n';
      }
    }
    if (cfg.out_path.empty()) {
      std::cout << os.str();
    } else {
      write_file(cfg.out_path, os.str());
    }
  });
}

int cmd_export(const RunConfig& cfg) {
  return run_guarded([&] {
    if (!cfg.format.empty() && cfg.format != "dot") {
      throw UsageError("export only supports --format dot");
    }
    LoadedTopology loaded = load_topology(cfg);
    std::ostringstream os;
    if (cfg.highlight.empty()) {
      write_dot(os, loaded.topo);
    } else {
      SelectionPolicy policy = make_policy(cfg.algo, cfg, loaded);
      Pattern pattern = select_pattern(loaded.topo, cfg.highlight);
      RouteSet routes = compute_routes(loaded.topo, policy, pattern);
      write_dot(os, loaded.topo, &routes.routes, policy.base == BaseAlgo::Smodk);
    }
    if (cfg.out_path.empty()) {
      std::cout << os.str();
    } else {
      write_file(cfg.out_path, os.str());
    }
  });
}

}  // namespace pgft
