#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pgft {

// Parameters of a parallel generalized fat-tree. Arrays are stage-indexed:
// stage 0 is the node<->leaf stage, stage h-1 the topmost switch stage.
struct PgftParams {
  int levels = 0;               // h: number of switch levels
  std::vector<int> down_arity;  // m[k]: children per element at stage k (m[0] = nodes per leaf)
  std::vector<int> up_arity;    // w[k]: parents per element at stage k; w[0] must be 1
  std::vector<int> parallel;    // p[k]: parallel links per connected pair at stage k

  int node_count() const;  // prod(m)

  // Throws std::invalid_argument if the tuple is not a valid PGFT.
  void validate() const;

  std::string to_string() const;  // canonical "PGFT(h;m,...;w,...;p,...)"

  bool operator==(const PgftParams&) const = default;
};

// Parses PGFT notation, e.g. "PGFT(3; 8,4,2; 1,2,1; 1,1,4)".
// Whitespace-tolerant; throws std::invalid_argument on malformed input.
PgftParams parse_pgft_spec(std::string_view text);

}  // namespace pgft
