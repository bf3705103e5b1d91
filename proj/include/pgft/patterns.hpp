#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgft/topology.hpp"

namespace pgft {

// A multipair communication pattern. Pairs are ordered (src, dst), src != dst,
// no duplicates.
struct Pattern {
  std::string name;
  std::vector<std::pair<Nid, Nid>> pairs;

  std::size_t size() const { return pairs.size(); }
};

// Each compute-labeled node sends to the io-labeled node of its "symmetrical"
// leaf: the leaf whose top copy digit is rotated by m[h-1]/2, other digits
// unchanged. Requires exactly one io node per leaf and an even top arity.
Pattern mirror_c2io(const Topology& topo, std::string_view compute_label = "compute",
                    std::string_view io_label = "io");

// Full bipartite pattern between two labels, excluding src == dst.
Pattern type_to_type(const Topology& topo, std::string_view src_label,
                     std::string_view dst_label);

// All ordered pairs, src != dst.
Pattern all_to_all(const Topology& topo);

// Swaps every pair; involution.
Pattern transpose(const Pattern& pattern);

// CSV lines "src,dst". Blank lines and lines starting with '#' are skipped.
// Throws on bad NIDs, src == dst, or duplicate pairs.
Pattern parse_pattern_file(std::string_view text, const Topology& topo);

}  // namespace pgft
