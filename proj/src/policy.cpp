#include "pgft/policy.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgft {

std::string_view to_string(BaseAlgo algo) {
  switch (algo) {
    case BaseAlgo::Random: return "random";
    case BaseAlgo::Dmodk: return "dmodk";
    case BaseAlgo::Smodk: return "smodk";
  }
  return "?";
}

std::string SelectionPolicy::name() const {
  std::string base_name{to_string(base)};
  if (grouped() && base != BaseAlgo::Random) return "g" + base_name;
  return base_name;
}

Nid SelectionPolicy::routing_id(Nid src, Nid dst) const {
  Nid id = destination_based() ? dst : src;
  if (id_map) id = (*id_map)[id];
  return id;
}

namespace {

long long group_stride(const PgftParams& params, int level) {
  long long s = 1;
  for (int k = 1; k <= level; ++k) s *= params.up_arity[k];
  return s;
}

}  // namespace

int dmodk_up_index(int level, Nid id, const PgftParams& params) {
  if (level < 0 || level >= params.levels - 1) {
    throw std::out_of_range("dmodk_up_index: level has no up ports");
  }
  long long quotient = id / group_stride(params, level);
  return static_cast<int>(quotient %
                          (params.up_arity[level + 1] * params.parallel[level + 1]));
}

int down_parallel_index(int level, Nid id, const PgftParams& params) {
  if (level < 0 || level >= params.levels) {
    throw std::out_of_range("down_parallel_index: level out of range");
  }
  long long quotient = id / group_stride(params, level);
  return static_cast<int>(quotient % params.parallel[level]);
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

int random_index(std::uint64_t seed, Nid src, Nid dst, int level, Direction dir,
                 int option_count) {
  if (option_count < 1) throw std::invalid_argument("random_index: empty option set");
  std::uint64_t x = mix64(seed);
  x = mix64(x ^ static_cast<std::uint64_t>(src));
  x = mix64(x ^ static_cast<std::uint64_t>(dst));
  x = mix64(x ^ ((static_cast<std::uint64_t>(level) << 1) |
                 (dir == Direction::Up ? 1u : 0u)));
  return static_cast<int>(x % static_cast<std::uint64_t>(option_count));
}

std::vector<Nid> group_reindex(const Topology& topo,
                               const std::vector<std::string>& type_order) {
  std::vector<std::string> present = topo.present_types();
  if (type_order.size() != present.size()) {
    throw std::invalid_argument("group_reindex: type order must list every present label");
  }
  for (const std::string& label : type_order) {
    if (std::count(type_order.begin(), type_order.end(), label) != 1) {
      throw std::invalid_argument("group_reindex: duplicate label '" + label + "'");
    }
    if (std::find(present.begin(), present.end(), label) == present.end()) {
      throw std::invalid_argument("group_reindex: unknown label '" + label + "'");
    }
  }
  std::vector<Nid> map(topo.node_count());
  Nid next = 0;
  for (const std::string& label : type_order) {
    for (Nid n = 0; n < topo.node_count(); ++n) {
      if (topo.type_of(n) == label) map[n] = next++;
    }
  }
  return map;
}

}  // namespace pgft
