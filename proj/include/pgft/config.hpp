#pragma once

#include <string_view>
#include <vector>

#include "pgft/params.hpp"
#include "pgft/topology.hpp"

namespace pgft {

// Line-oriented topology config:
//   pgft = PGFT(3;8,4,2;1,2,1;1,1,4)
//   type io = nid_mod 8 7
//   type svc = nid_list 0,1,2
// Rule order is significant (first match wins); '#' starts a comment.
struct TopologyConfig {
  PgftParams params;
  std::vector<TypeRule> type_rules;
};

TopologyConfig parse_topology_config(std::string_view text);

}  // namespace pgft
