// Command-line front end: describe PGFT topologies, compute deterministic
// routes, evaluate the static congestion metric, compare algorithms and
// export DOT graphs.

#include <map>
#include <string>

#include "CLI11.hpp"
#include "pgft/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"parallel generalized fat-tree routing and congestion analysis"};
  app.require_subcommand(1);

  pgft::RunConfig cfg;
  std::string direction = "output";

  auto add_topology_flags = [&](CLI::App* cmd) {
    cmd->add_option("--spec", cfg.spec_text, "inline PGFT notation, e.g. PGFT(3;8,4,2;1,2,1;1,1,4)");
    cmd->add_option("--config", cfg.config_path, "topology config file");
    cmd->add_option("--out", cfg.out_path, "output path (default: stdout)");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "dot"}));
  };
  auto add_routing_flags = [&](CLI::App* cmd) {
    cmd->add_option("--algo", cfg.algo, "random|dmodk|smodk|gdmodk|gsmodk (default dmodk)");
    cmd->add_option("--seed", cfg.seed, "seed for random routing (default 0)");
    cmd->add_option("--type-order", cfg.type_order, "node-type order for grouped algorithms")
        ->delimiter(',');
    cmd->add_option("--pattern", cfg.pattern,
                    "c2io-mirror|all2all|type:<src>:<dst>|file:<path> (default all2all)");
  };
  auto add_direction_flag = [&](CLI::App* cmd) {
    cmd->add_option("--direction", direction, "attribute counts to port outputs or inputs")
        ->check(CLI::IsMember({"output", "input"}));
  };

  CLI::App* describe = app.add_subcommand("describe", "structural summary of a topology");
  add_topology_flags(describe);

  CLI::App* route = app.add_subcommand("route", "dump per-pair routes as CSV");
  add_topology_flags(route);
  add_routing_flags(route);
  route->add_flag("--tables", cfg.dump_tables,
                  "also dump per-switch forwarding tables (dmodk family)");

  CLI::App* analyze = app.add_subcommand("analyze", "congestion report for a pattern");
  add_topology_flags(analyze);
  add_routing_flags(analyze);
  add_direction_flag(analyze);

  CLI::App* compare = app.add_subcommand("compare", "c_topo matrix over algorithms x patterns");
  add_topology_flags(compare);
  add_routing_flags(compare);
  add_direction_flag(compare);
  compare->add_option("--seeds", cfg.seeds, "number of seeds for random rows (default 1)");

  CLI::App* export_cmd = app.add_subcommand("export", "DOT graph of the topology");
  add_topology_flags(export_cmd);
  add_routing_flags(export_cmd);
  export_cmd->add_option("--highlight", cfg.highlight,
                         "overlay the routes of this pattern selector");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? pgft::kExitOk : pgft::kExitUsage;
  }
  cfg.direction =
      direction == "input" ? pgft::MetricDirection::Input : pgft::MetricDirection::Output;

  if (app.got_subcommand(describe)) return pgft::cmd_describe(cfg);
  if (app.got_subcommand(route)) return pgft::cmd_route(cfg);
  if (app.got_subcommand(analyze)) return pgft::cmd_analyze(cfg);
  if (app.got_subcommand(compare)) return pgft::cmd_compare(cfg);
  if (app.got_subcommand(export_cmd)) return pgft::cmd_export(cfg);
  return pgft::kExitUsage;
}
