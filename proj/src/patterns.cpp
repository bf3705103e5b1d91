#include "pgft/patterns.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pgft {

Pattern mirror_c2io(const Topology& topo, std::string_view compute_label,
                    std::string_view io_label) {
  const PgftParams& params = topo.params();
  const int h = params.levels;
  const int top_arity = params.down_arity[h - 1];
  if (top_arity % 2 != 0) {
    throw std::invalid_argument("mirror_c2io: top-level arity must be even");
  }

  // One io node per leaf, indexed by leaf.
  std::vector<Nid> io_of_leaf(topo.switch_count(0), -1);
  for (Nid n : topo.nodes_of_type(io_label)) {
    SwitchId leaf = topo.leaf_of(n);
    if (io_of_leaf[leaf] != -1) {
      throw std::invalid_argument("mirror_c2io: leaf with multiple '" + std::string(io_label) +
                                  "' nodes");
    }
    io_of_leaf[leaf] = n;
  }
  for (Nid io : io_of_leaf) {
    if (io == -1) {
      throw std::invalid_argument("mirror_c2io: leaf without an '" + std::string(io_label) +
                                  "' node");
    }
  }

  Pattern pat;
  pat.name = "c2io-mirror";
  for (Nid s : topo.nodes_of_type(compute_label)) {
    std::vector<int> digits = topo.node_digits(s);
    if (h >= 2) digits[0] = (digits[0] + top_arity / 2) % top_arity;
    digits[h - 1] = 0;  // any node on the mirror leaf; we want its leaf
    SwitchId mirror_leaf = topo.leaf_of(topo.node_from_digits(digits));
    pat.pairs.emplace_back(s, io_of_leaf[mirror_leaf]);
  }
  return pat;
}

Pattern type_to_type(const Topology& topo, std::string_view src_label,
                     std::string_view dst_label) {
  std::vector<Nid> srcs = topo.nodes_of_type(src_label);
  std::vector<Nid> dsts = topo.nodes_of_type(dst_label);
  if (srcs.empty()) throw std::invalid_argument("type_to_type: no '" + std::string(src_label) + "' nodes");
  if (dsts.empty()) throw std::invalid_argument("type_to_type: no '" + std::string(dst_label) + "' nodes");
  Pattern pat;
  pat.name = "type:" + std::string(src_label) + ":" + std::string(dst_label);
  for (Nid s : srcs) {
    for (Nid d : dsts) {
      if (s != d) pat.pairs.emplace_back(s, d);
    }
  }
  return pat;
}

Pattern all_to_all(const Topology& topo) {
  Pattern pat;
  pat.name = "all2all";
  for (Nid s = 0; s < topo.node_count(); ++s) {
    for (Nid d = 0; d < topo.node_count(); ++d) {
      if (s != d) pat.pairs.emplace_back(s, d);
    }
  }
  return pat;
}

Pattern transpose(const Pattern& pattern) {
  Pattern out;
  out.name = "transpose(" + pattern.name + ")";
  out.pairs.reserve(pattern.pairs.size());
  for (auto [s, d] : pattern.pairs) out.pairs.emplace_back(d, s);
  return out;
}

Pattern parse_pattern_file(std::string_view text, const Topology& topo) {
  Pattern pat;
  pat.name = "file";
  std::set<std::pair<Nid, Nid>> seen;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string_view sv = line;
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t')) {
      sv.remove_suffix(1);
    }
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;

    auto fail = [&](const std::string& what) {
      throw std::invalid_argument("pattern file line " + std::to_string(lineno) + ": " + what);
    };
    std::size_t comma = sv.find(',');
    if (comma == std::string_view::npos) fail("expected 'src,dst'");
    Nid s, d;
    try {
      s = std::stoi(std::string(sv.substr(0, comma)));
      d = std::stoi(std::string(sv.substr(comma + 1)));
    } catch (const std::exception&) {
      fail("expected 'src,dst'");
      return pat;  // unreachable
    }
    if (s < 0 || s >= topo.node_count() || d < 0 || d >= topo.node_count()) {
      fail("nid out of range");
    }
    if (s == d) fail("src equals dst");
    if (!seen.insert({s, d}).second) fail("duplicate pair");
    pat.pairs.emplace_back(s, d);
  }
  return pat;
}

}  // namespace pgft
