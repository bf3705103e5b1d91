#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgft/metric.hpp"

namespace pgft {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBadInput = 2;

struct RunConfig {
  std::string spec_text;    // inline PGFT notation (exclusive with config_path)
  std::string config_path;  // topology config file
  std::string algo = "dmodk";
  std::uint64_t seed = 0;
  int seeds = 1;  // compare: number of seeds for random rows
  std::vector<std::string> type_order;
  std::string pattern = "all2all";  // c2io-mirror | all2all | type:<src>:<dst> | file:<path>
  MetricDirection direction = MetricDirection::Output;
  std::string out_path;   // empty = stdout
  std::string format;     // csv | json | dot (command-specific default)
  bool dump_tables = false;
  std::string highlight;  // export: pattern selector to overlay
};

int cmd_describe(const RunConfig& cfg);
int cmd_route(const RunConfig& cfg);
int cmd_analyze(const RunConfig& cfg);
int cmd_compare(const RunConfig& cfg);
int cmd_export(const RunConfig& cfg);

}  // namespace pgft
