#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgft/params.hpp"

namespace pgft {

using Nid = int;       // end-node identifier, mixed radix over (m[h-1],...,m[1],m[0])
using SwitchId = int;  // dense switch index, ordered by level then address rank

enum class Direction { Down = 0, Up = 1 };

std::string_view to_string(Direction dir);

// Switch address: level plus h-1 digits. Digit i corresponds to stage h-1-i
// and is a copy digit (subtree replica, range m) while the stage lies above
// the switch's level, a group digit (range w) at or below it. This matches
// printed tuples like (0,0,1), (1,1,1), (2,0,1).
struct SwitchAddr {
  int level = 0;
  std::vector<int> digits;

  std::string to_string() const;  // "(level,d,...,d)"
  bool operator==(const SwitchAddr&) const = default;
};

struct PortRef {
  SwitchId sw = -1;
  Direction dir = Direction::Down;
  int slot = 0;

  auto operator<=>(const PortRef&) const = default;
};

// Ordered node-typing rule; the first matching rule assigns the label.
struct TypeRule {
  enum class Kind { Mod, List };
  std::string label;
  Kind kind = Kind::Mod;
  int mod_divisor = 1;
  int mod_remainder = 0;
  std::vector<Nid> nids;  // Kind::List

  bool matches(Nid nid) const;
};

// Immutable switch/node/link multigraph of a PGFT. All queries are pure and
// safe for concurrent reads.
class Topology {
 public:
  // Builds the full topology. Unmatched nodes get the label "compute".
  // Throws std::invalid_argument on invalid params or rules.
  static Topology build(const PgftParams& params, const std::vector<TypeRule>& rules = {});

  const PgftParams& params() const { return params_; }
  int levels() const { return params_.levels; }
  int node_count() const { return static_cast<int>(node_type_.size()); }
  int switch_count() const { return static_cast<int>(addrs_.size()); }
  int switch_count(int level) const;
  SwitchId level_begin(int level) const;

  const SwitchAddr& addr(SwitchId sw) const { return addrs_[sw]; }
  // Dense index of an address; throws std::invalid_argument if no such switch.
  SwitchId switch_at(const SwitchAddr& addr) const;

  int down_slot_count(SwitchId sw) const;
  int up_slot_count(SwitchId sw) const;

  struct Resolved {
    bool is_node = false;
    SwitchId sw = -1;      // valid when !is_node
    Nid nid = -1;          // valid when is_node
    int parallel_round = 0;
  };
  // Neighbor behind an output slot. Throws std::out_of_range on a bad slot.
  Resolved resolve_port(SwitchId sw, Direction dir, int slot) const;

  // Port on the downstream switch that receives traffic sent out of (sw,dir,slot);
  // nullopt when the receiver is an end-node (delivery).
  std::optional<PortRef> receiving_port(SwitchId sw, Direction dir, int slot) const;

  // --- end-node queries ---
  SwitchId leaf_of(Nid nid) const;
  int leaf_rank(Nid nid) const;                 // attachment port rank on the leaf
  std::vector<int> node_digits(Nid nid) const;  // (c_{h-1},...,c_1,r)
  Nid node_from_digits(const std::vector<int>& digits) const;

  // Level of the nearest common ancestor; 0 when both share a leaf.
  int nca_level(Nid a, Nid b) const;

  // True iff sw can reach nid travelling only downwards.
  bool is_ancestor(SwitchId sw, Nid nid) const;

  // --- node types ---
  const std::string& type_of(Nid nid) const;
  // Registered labels, "compute" first, then rule labels in file order.
  const std::vector<std::string>& type_names() const { return type_names_; }
  // Registered labels that have at least one node, in registration order.
  std::vector<std::string> present_types() const;
  // Nids carrying the label, ascending. Empty for unknown labels.
  std::vector<Nid> nodes_of_type(std::string_view label) const;

  // --- dense port indexing (down slots first, then up slots) ---
  int port_count() const { return port_count_; }
  int port_id(SwitchId sw, Direction dir, int slot) const;
  PortRef port_from_id(int pid) const;
  // 1-based display number used in figures and reports.
  int display_port(SwitchId sw, Direction dir, int slot) const;

 private:
  Topology() = default;

  void check_nid(Nid nid) const;
  void check_switch(SwitchId sw) const;

  PgftParams params_;
  std::vector<SwitchAddr> addrs_;
  std::vector<int> level_offset_;               // size levels+1
  std::vector<std::vector<SwitchId>> up_;       // per switch, per up slot
  std::vector<std::vector<int>> down_;          // per switch, per down slot; nid at leaves
  std::vector<SwitchId> node_leaf_;
  std::vector<int> node_type_;                  // index into type_names_
  std::vector<std::string> type_names_;
  std::vector<int> port_base_;
  int port_count_ = 0;
};

// Structural summary (switch counts, radix, per-stage bandwidth ratios, types).
struct TopologySummary {
  struct Level {
    int level;
    int switches;
    int down_ports;  // per switch
    int up_ports;    // per switch
  };
  struct Cbb {
    int level;       // switch level looking upward
    int up_links;    // w[l+1]*p[l+1]
    int down_links;  // m[l]*p[l]
    double ratio;
  };
  PgftParams params;
  std::vector<Level> levels;
  std::vector<Cbb> cbb;
  int node_count = 0;
  std::map<std::string, int> nodes_by_type;
};

TopologySummary describe(const Topology& topo);

}  // namespace pgft
