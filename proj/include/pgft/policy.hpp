#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgft/topology.hpp"

namespace pgft {

enum class BaseAlgo { Random, Dmodk, Smodk };

std::string_view to_string(BaseAlgo algo);

// Pure per-hop port-selection rule. An instance with id_map set is the
// grouped variant of its base algorithm (gdmodk / gsmodk).
struct SelectionPolicy {
  BaseAlgo base = BaseAlgo::Dmodk;
  std::optional<std::vector<Nid>> id_map;  // NID -> gNID bijection
  std::uint64_t seed = 0;                  // random only

  bool grouped() const { return id_map.has_value(); }
  bool destination_based() const { return base == BaseAlgo::Dmodk; }
  std::string name() const;  // "random" | "dmodk" | "smodk" | "gdmodk" | "gsmodk"

  // Id fed to the mod-k formulas for the pair (src, dst): destination for the
  // dmodk family, source for the smodk family, after gNID mapping if grouped.
  Nid routing_id(Nid src, Nid dst) const;
};

// Up-slot index chosen at a level-l switch for id: floor(id / prod_{k=1..l} w[k])
// mod (w[l+1]*p[l+1]). With round-robin slots this picks the parent (mod w)
// and the parallel round (div w).
int dmodk_up_index(int level, Nid id, const PgftParams& params);

// Parallel round chosen by a level-l switch sending down towards its forced
// child: floor(id / prod_{k=1..l} w[k]) mod p[l]. Equals the round of the
// mirrored up-link, so xmodk routes reverse exactly.
int down_parallel_index(int level, Nid id, const PgftParams& params);

// Deterministic counter-based draw in [0, option_count); keyed on all inputs
// so results do not depend on evaluation order. Throws on option_count < 1.
int random_index(std::uint64_t seed, Nid src, Nid dst, int level, Direction dir,
                 int option_count);

// NID -> gNID map: gNIDs are assigned contiguously per type following
// type_order, preserving NID order within each type. type_order must list
// exactly the labels present in the topology.
std::vector<Nid> group_reindex(const Topology& topo,
                               const std::vector<std::string>& type_order);

}  // namespace pgft
