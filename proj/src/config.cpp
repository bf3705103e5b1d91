#include "pgft/config.hpp"

#include <sstream>
#include <stdexcept>

namespace pgft {

namespace {

std::string_view trim(std::string_view sv) {
  while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
  while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r')) {
    sv.remove_suffix(1);
  }
  return sv;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw std::invalid_argument("topology config line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

TopologyConfig parse_topology_config(std::string_view text) {
  TopologyConfig cfg;
  bool have_pgft = false;
  std::istringstream is{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) fail(lineno, "expected 'key = value'");
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));

    if (key == "pgft") {
      if (have_pgft) fail(lineno, "duplicate pgft line");
      try {
        cfg.params = parse_pgft_spec(value);
      } catch (const std::exception& e) {
        fail(lineno, e.what());
      }
      have_pgft = true;
      continue;
    }

    if (key.substr(0, 5) == "type " || key.substr(0, 5) == "type\t") {
      std::string label{trim(key.substr(5))};
      if (label.empty()) fail(lineno, "type rule needs a label");
      std::istringstream vs{std::string(value)};
      std::string kind;
      vs >> kind;
      TypeRule rule;
      rule.label = label;
      if (kind == "nid_mod") {
        rule.kind = TypeRule::Kind::Mod;
        if (!(vs >> rule.mod_divisor >> rule.mod_remainder)) {
          fail(lineno, "nid_mod needs '<divisor> <remainder>'");
        }
        if (rule.mod_divisor < 1 || rule.mod_remainder < 0 ||
            rule.mod_remainder >= rule.mod_divisor) {
          fail(lineno, "nid_mod remainder must lie in [0, divisor)");
        }
      } else if (kind == "nid_list") {
        rule.kind = TypeRule::Kind::List;
        std::string rest;
        std::getline(vs, rest);
        std::istringstream ls{rest};
        std::string item;
        while (std::getline(ls, item, ',')) {
          std::string_view t = trim(item);
          if (t.empty()) fail(lineno, "nid_list has an empty entry");
          try {
            rule.nids.push_back(std::stoi(std::string(t)));
          } catch (const std::exception&) {
            fail(lineno, "nid_list entries must be integers");
          }
        }
        if (rule.nids.empty()) fail(lineno, "nid_list needs at least one nid");
      } else {
        fail(lineno, "unknown predicate '" + kind + "'");
      }
      std::string tail;
      if (vs >> tail) fail(lineno, "trailing tokens");
      cfg.type_rules.push_back(std::move(rule));
      continue;
    }

    fail(lineno, "unknown key");
  }
  if (!have_pgft) throw std::invalid_argument("topology config: missing 'pgft = PGFT(...)' line");
  return cfg;
}

}  // namespace pgft
