#include "pgft/topology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pgft {

std::string_view to_string(Direction dir) {
  return dir == Direction::Down ? "down" : "up";
}

std::string SwitchAddr::to_string() const {
  std::ostringstream os;
  os << '(' << level;
  for (int d : digits) os << ',' << d;
  os << ')';
  return os.str();
}

bool TypeRule::matches(Nid nid) const {
  if (kind == Kind::Mod) return nid % mod_divisor == mod_remainder;
  return std::find(nids.begin(), nids.end(), nid) != nids.end();
}

namespace {

// Digit at position i of an address spans stage h-1-i: a copy digit (range m)
// while that stage is above the switch, a group digit (range w) otherwise.
int digit_radix(const PgftParams& params, int level, int pos) {
  int stage = params.levels - 1 - pos;
  return stage > level ? params.down_arity[stage] : params.up_arity[stage];
}

int addr_rank(const PgftParams& params, int level, const std::vector<int>& digits) {
  int rank = 0;
  for (int i = 0; i < static_cast<int>(digits.size()); ++i) {
    rank = rank * digit_radix(params, level, i) + digits[i];
  }
  return rank;
}

}  // namespace

Topology Topology::build(const PgftParams& params, const std::vector<TypeRule>& rules) {
  params.validate();
  Topology topo;
  topo.params_ = params;
  const int h = params.levels;

  // Enumerate switch addresses level by level with a mixed-radix counter.
  topo.level_offset_.assign(h + 1, 0);
  for (int l = 0; l < h; ++l) {
    topo.level_offset_[l] = static_cast<int>(topo.addrs_.size());
    std::vector<int> digits(h - 1, 0);
    while (true) {
      topo.addrs_.push_back(SwitchAddr{l, digits});
      int i = h - 2;
      for (; i >= 0; --i) {
        if (++digits[i] < digit_radix(params, l, i)) break;
        digits[i] = 0;
      }
      if (i < 0) break;
    }
  }
  topo.level_offset_[h] = static_cast<int>(topo.addrs_.size());

  // Adjacency. Moving up replaces the c_{l+1} digit with the chosen g_{l+1};
  // moving down replaces g_l with the chosen child index. Both live at the
  // same digit position, so neighbors differ in exactly one digit.
  const int sw_count = topo.switch_count();
  topo.up_.resize(sw_count);
  topo.down_.resize(sw_count);
  for (SwitchId s = 0; s < sw_count; ++s) {
    const SwitchAddr& a = topo.addrs_[s];
    const int l = a.level;
    if (l < h - 1) {
      const int slots = params.up_arity[l + 1] * params.parallel[l + 1];
      topo.up_[s].resize(slots);
      for (int slot = 0; slot < slots; ++slot) {
        int g = slot % params.up_arity[l + 1];
        SwitchAddr parent{l + 1, a.digits};
        parent.digits[h - 2 - l] = g;
        topo.up_[s][slot] = topo.level_offset_[l + 1] + addr_rank(params, l + 1, parent.digits);
      }
    }
    const int slots = params.down_arity[l] * params.parallel[l];
    topo.down_[s].resize(slots);
    for (int slot = 0; slot < slots; ++slot) {
      int t = slot % params.down_arity[l];
      if (l == 0) {
        // Leaf: child index is the node's port rank.
        int leaf_rank = addr_rank(params, 0, a.digits);
        topo.down_[s][slot] = leaf_rank * params.down_arity[0] + t;
      } else {
        SwitchAddr child{l - 1, a.digits};
        child.digits[h - 1 - l] = t;
        topo.down_[s][slot] = topo.level_offset_[l - 1] + addr_rank(params, l - 1, child.digits);
      }
    }
  }

  // End nodes and type labels.
  const int nodes = params.node_count();
  topo.node_leaf_.resize(nodes);
  for (Nid n = 0; n < nodes; ++n) topo.node_leaf_[n] = n / params.down_arity[0];

  topo.type_names_.push_back("compute");
  for (const TypeRule& r : rules) {
    if (r.label.empty()) throw std::invalid_argument("type rule: empty label");
    if (r.kind == TypeRule::Kind::Mod) {
      if (r.mod_divisor < 1 || r.mod_remainder < 0 || r.mod_remainder >= r.mod_divisor) {
        throw std::invalid_argument("type rule: bad modulo parameters for '" + r.label + "'");
      }
    } else {
      for (Nid n : r.nids) {
        if (n < 0 || n >= nodes) {
          throw std::invalid_argument("type rule: nid out of range for '" + r.label + "'");
        }
      }
    }
    if (std::find(topo.type_names_.begin(), topo.type_names_.end(), r.label) ==
        topo.type_names_.end()) {
      topo.type_names_.push_back(r.label);
    }
  }
  topo.node_type_.assign(nodes, 0);
  for (Nid n = 0; n < nodes; ++n) {
    for (const TypeRule& r : rules) {
      if (r.matches(n)) {
        topo.node_type_[n] = static_cast<int>(
            std::find(topo.type_names_.begin(), topo.type_names_.end(), r.label) -
            topo.type_names_.begin());
        break;
      }
    }
  }

  // Dense port ids: per switch, down slots then up slots.
  topo.port_base_.resize(sw_count);
  int pid = 0;
  for (SwitchId s = 0; s < sw_count; ++s) {
    topo.port_base_[s] = pid;
    pid += static_cast<int>(topo.down_[s].size() + topo.up_[s].size());
  }
  topo.port_count_ = pid;
  return topo;
}

int Topology::switch_count(int level) const {
  if (level < 0 || level >= params_.levels) throw std::out_of_range("level out of range");
  return level_offset_[level + 1] - level_offset_[level];
}

SwitchId Topology::level_begin(int level) const {
  if (level < 0 || level >= params_.levels) throw std::out_of_range("level out of range");
  return level_offset_[level];
}

SwitchId Topology::switch_at(const SwitchAddr& addr) const {
  const int h = params_.levels;
  if (addr.level < 0 || addr.level >= h || static_cast<int>(addr.digits.size()) != h - 1) {
    throw std::invalid_argument("no such switch: " + addr.to_string());
  }
  for (int i = 0; i < h - 1; ++i) {
    if (addr.digits[i] < 0 || addr.digits[i] >= digit_radix(params_, addr.level, i)) {
      throw std::invalid_argument("no such switch: " + addr.to_string());
    }
  }
  return level_offset_[addr.level] + addr_rank(params_, addr.level, addr.digits);
}

int Topology::down_slot_count(SwitchId sw) const {
  check_switch(sw);
  return static_cast<int>(down_[sw].size());
}

int Topology::up_slot_count(SwitchId sw) const {
  check_switch(sw);
  return static_cast<int>(up_[sw].size());
}

Topology::Resolved Topology::resolve_port(SwitchId sw, Direction dir, int slot) const {
  check_switch(sw);
  const int l = addrs_[sw].level;
  Resolved r;
  if (dir == Direction::Up) {
    if (slot < 0 || slot >= static_cast<int>(up_[sw].size())) {
      throw std::out_of_range("up slot out of range");
    }
    r.sw = up_[sw][slot];
    r.parallel_round = slot / params_.up_arity[l + 1];
  } else {
    if (slot < 0 || slot >= static_cast<int>(down_[sw].size())) {
      throw std::out_of_range("down slot out of range");
    }
    r.parallel_round = slot / params_.down_arity[l];
    if (l == 0) {
      r.is_node = true;
      r.nid = down_[sw][slot];
    } else {
      r.sw = down_[sw][slot];
    }
  }
  return r;
}

std::optional<PortRef> Topology::receiving_port(SwitchId sw, Direction dir, int slot) const {
  Resolved r = resolve_port(sw, dir, slot);
  if (r.is_node) return std::nullopt;
  const SwitchAddr& a = addrs_[sw];
  const int h = params_.levels;
  if (dir == Direction::Up) {
    // Parent receives on its down port towards our c_{l+1} child index.
    int t = a.digits[h - 2 - a.level];
    return PortRef{r.sw, Direction::Down, r.parallel_round * params_.down_arity[a.level + 1] + t};
  }
  // Child receives on its up port towards our g_l group digit.
  int g = a.digits[h - 1 - a.level];
  return PortRef{r.sw, Direction::Up, r.parallel_round * params_.up_arity[a.level] + g};
}

SwitchId Topology::leaf_of(Nid nid) const {
  check_nid(nid);
  return node_leaf_[nid];
}

int Topology::leaf_rank(Nid nid) const {
  check_nid(nid);
  return nid % params_.down_arity[0];
}

std::vector<int> Topology::node_digits(Nid nid) const {
  check_nid(nid);
  const int h = params_.levels;
  std::vector<int> digits(h);
  int x = nid;
  for (int k = 0; k < h; ++k) {  // stage k radix m[k], least significant first
    digits[h - 1 - k] = x % params_.down_arity[k];
    x /= params_.down_arity[k];
  }
  return digits;
}

Nid Topology::node_from_digits(const std::vector<int>& digits) const {
  const int h = params_.levels;
  if (static_cast<int>(digits.size()) != h) throw std::invalid_argument("node digit count");
  long long nid = 0;
  for (int i = 0; i < h; ++i) {
    int radix = params_.down_arity[h - 1 - i];
    if (digits[i] < 0 || digits[i] >= radix) throw std::invalid_argument("node digit range");
    nid = nid * radix + digits[i];
  }
  return static_cast<Nid>(nid);
}

int Topology::nca_level(Nid a, Nid b) const {
  check_nid(a);
  check_nid(b);
  const int h = params_.levels;
  std::vector<int> da = node_digits(a), db = node_digits(b);
  int level = 0;
  for (int i = 0; i < h - 1; ++i) {
    if (da[i] != db[i]) level = std::max(level, h - 1 - i);
  }
  return level;
}

bool Topology::is_ancestor(SwitchId sw, Nid nid) const {
  check_switch(sw);
  check_nid(nid);
  const SwitchAddr& a = addrs_[sw];
  std::vector<int> nd = node_digits(nid);
  for (int i = 0; i < params_.levels - 1 - a.level; ++i) {
    if (a.digits[i] != nd[i]) return false;
  }
  return true;
}

const std::string& Topology::type_of(Nid nid) const {
  check_nid(nid);
  return type_names_[node_type_[nid]];
}

std::vector<std::string> Topology::present_types() const {
  std::vector<bool> seen(type_names_.size(), false);
  for (int t : node_type_) seen[t] = true;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < type_names_.size(); ++i) {
    if (seen[i]) out.push_back(type_names_[i]);
  }
  return out;
}

std::vector<Nid> Topology::nodes_of_type(std::string_view label) const {
  std::vector<Nid> out;
  for (Nid n = 0; n < node_count(); ++n) {
    if (type_names_[node_type_[n]] == label) out.push_back(n);
  }
  return out;
}

int Topology::port_id(SwitchId sw, Direction dir, int slot) const {
  check_switch(sw);
  int local = dir == Direction::Down ? slot : static_cast<int>(down_[sw].size()) + slot;
  return port_base_[sw] + local;
}

PortRef Topology::port_from_id(int pid) const {
  if (pid < 0 || pid >= port_count_) throw std::out_of_range("port id out of range");
  auto it = std::upper_bound(port_base_.begin(), port_base_.end(), pid);
  SwitchId sw = static_cast<SwitchId>(it - port_base_.begin()) - 1;
  int local = pid - port_base_[sw];
  int downs = static_cast<int>(down_[sw].size());
  if (local < downs) return PortRef{sw, Direction::Down, local};
  return PortRef{sw, Direction::Up, local - downs};
}

int Topology::display_port(SwitchId sw, Direction dir, int slot) const {
  return port_id(sw, dir, slot) - port_base_[sw] + 1;
}

void Topology::check_nid(Nid nid) const {
  if (nid < 0 || nid >= node_count()) throw std::out_of_range("nid out of range");
}

void Topology::check_switch(SwitchId sw) const {
  if (sw < 0 || sw >= switch_count()) throw std::out_of_range("switch id out of range");
}

TopologySummary describe(const Topology& topo) {
  const PgftParams& params = topo.params();
  TopologySummary s;
  s.params = params;
  s.node_count = topo.node_count();
  for (int l = 0; l < params.levels; ++l) {
    TopologySummary::Level lev;
    lev.level = l;
    lev.switches = topo.switch_count(l);
    lev.down_ports = params.down_arity[l] * params.parallel[l];
    lev.up_ports = l + 1 < params.levels ? params.up_arity[l + 1] * params.parallel[l + 1] : 0;
    s.levels.push_back(lev);
    if (l + 1 < params.levels) {
      TopologySummary::Cbb c;
      c.level = l;
      c.up_links = params.up_arity[l + 1] * params.parallel[l + 1];
      c.down_links = params.down_arity[l] * params.parallel[l];
      c.ratio = static_cast<double>(c.up_links) / c.down_links;
      s.cbb.push_back(c);
    }
  }
  for (const std::string& label : topo.present_types()) {
    s.nodes_by_type[label] = static_cast<int>(topo.nodes_of_type(label).size());
  }
  return s;
}

}  // namespace pgft
