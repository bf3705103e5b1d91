// Acceptance suite: reproduces the case-study results on
// PGFT(3;8,4,2;1,2,1;1,1,4) with io nodes at nid % 8 == 7, plus the
// cross-topology recount checks. Prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "oracle.hpp"
#include "pgft/metric.hpp"
#include "pgft/patterns.hpp"
#include "pgft/routing.hpp"
#include "test_helpers.hpp"

using namespace pgft;
using namespace testutil;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << "\n";
  if (!ok) ++failures;
}

std::vector<std::tuple<SwitchId, SwitchId, int>> switch_links(const Topology& topo,
                                                              const Route& route) {
  std::vector<std::tuple<SwitchId, SwitchId, int>> links;
  for (const Hop& hop : route.hops) {
    auto r = topo.resolve_port(hop.sw, hop.dir, hop.slot);
    if (r.is_node) continue;
    if (hop.dir == Direction::Up) {
      links.emplace_back(hop.sw, r.sw, r.parallel_round);
    } else {
      links.emplace_back(r.sw, hop.sw, r.parallel_round);
    }
  }
  return links;
}

void check_topology_shape() {
  Topology topo = case_study();
  bool ok = topo.node_count() == 64;
  std::vector<Nid> io = topo.nodes_of_type("io");
  ok = ok && io.size() == 8;
  for (std::size_t i = 0; i < io.size() && ok; ++i) ok = io[i] == static_cast<Nid>(7 + 8 * i);
  ok = ok && topo.switch_count(0) == 8 && topo.switch_count(1) == 4 && topo.switch_count(2) == 2;

  SwitchId top1 = topo.switch_at(SwitchAddr{2, {0, 1}});
  std::map<std::string, int> links;
  for (int slot = 0; ok && slot < topo.down_slot_count(top1); ++slot) {
    ++links[topo.addr(topo.resolve_port(top1, Direction::Down, slot).sw).to_string()];
  }
  ok = ok && links == std::map<std::string, int>{{"(1,0,1)", 4}, {"(1,1,1)", 4}};
  criterion(1, "64 nodes, io at 7 mod 8, level counts [8,4,2], (2,0,1) links", ok);
}

void check_dmodk_units() {
  PgftParams p = parse_pgft_spec("PGFT(3;8,4,2;1,2,1;1,1,4)");
  bool ok = dmodk_up_index(0, 47, p) == 1 && dmodk_up_index(1, 47, p) == 3;
  for (Nid d = 7; d < 64; d += 8) ok = ok && down_parallel_index(2, d, p) == 3;
  criterion(2, "dmodk unit values (47 -> up 1, up 3; io down round 3)", ok);
}

void check_dmodk_c2io() {
  Topology topo = case_study();
  RouteSet rs = compute_routes(topo, policy(BaseAlgo::Dmodk), mirror_c2io(topo));
  CongestionReport report = analyze(topo, rs, MetricDirection::Output);
  bool ok = report.c_topo == 4;

  std::set<std::pair<std::string, int>> hot_top;
  SwitchId top0 = topo.switch_at(SwitchAddr{2, {0, 0}});
  for (const auto& row : report.rows) {
    if (row.port.sw == top0) ok = false;  // (2,0,0) must stay idle
    if (topo.addr(row.port.sw).level == 2 && row.port.dir == Direction::Down && row.c == 4) {
      hot_top.insert({topo.addr(row.port.sw).to_string(),
                      topo.display_port(row.port.sw, row.port.dir, row.port.slot)});
    }
  }
  ok = ok && hot_top == std::set<std::pair<std::string, int>>{{"(2,0,1)", 7}, {"(2,0,1)", 8}};
  criterion(3, "dmodk x c2io: c_topo 4 on (2,0,1) display ports 7+8 only", ok);
}

void check_smodk_c2io() {
  Topology topo = case_study();
  RouteSet rs = compute_routes(topo, policy(BaseAlgo::Smodk), mirror_c2io(topo));
  CongestionReport report = analyze(topo, rs, MetricDirection::Output);
  int hot_top_down = 0;
  bool round3_used = false;
  SwitchId top1 = topo.switch_at(SwitchAddr{2, {0, 1}});
  for (const auto& row : report.rows) {
    if (topo.addr(row.port.sw).level == 2 && row.port.dir == Direction::Down) {
      if (row.c == 4) ++hot_top_down;
      if (row.port.sw == top1 && row.port.slot >= 6) round3_used = true;
    }
  }
  criterion(4, "smodk x c2io: 14 hot top ports, (2,0,1) round 3 unused",
            hot_top_down == 14 && !round3_used);
}

void check_random_c2io() {
  Topology topo = case_study();
  Pattern pat = mirror_c2io(topo);
  std::map<int, int> histogram;
  int ge2 = 0, in34 = 0;
  const int runs = 100;
  for (int seed = 0; seed < runs; ++seed) {
    RouteSet rs = compute_routes(topo, policy(BaseAlgo::Random, seed), pat);
    int c = analyze(topo, rs, MetricDirection::Output).c_topo;
    ++histogram[c];
    if (c >= 2) ++ge2;
    if (c == 3 || c == 4) ++in34;
  }
  std::ostringstream hist;
  for (auto [c, count] : histogram) hist << " " << c << "->" << count;
  std::cout << "  random c_topo histogram over " << runs << " seeds:" << hist.str() << "\n";
  criterion(5, "random x c2io: c_topo >= 2 always, in {3,4} for >= 90% of seeds",
            ge2 == runs && in34 * 10 >= runs * 9);
}

void check_gdmodk_c2io() {
  Topology topo = case_study();
  auto gdmodk = grouped_policy(BaseAlgo::Dmodk, topo, {"compute", "io"});
  Pattern pat = mirror_c2io(topo);
  RouteSet rs = compute_routes(topo, gdmodk, pat);
  CongestionReport report = analyze(topo, rs, MetricDirection::Output);

  int l1_up_rows = 0, l2_down_rows = 0;
  bool single_flow = true;
  for (const auto& row : report.rows) {
    int level = topo.addr(row.port.sw).level;
    if (level == 1 && row.port.dir == Direction::Up) {
      ++l1_up_rows;
      single_flow = single_flow && row.c == 1;
    } else if (level == 2 && row.port.dir == Direction::Down) {
      ++l2_down_rows;
      single_flow = single_flow && row.c == 1;
    }
  }
  // one port per io destination on each stage
  single_flow = single_flow && l1_up_rows == 8 && l2_down_rows == 8;

  // io destinations 15, 31, 47, 63 (gNIDs 57, 59, 61, 63) must occupy four
  // distinct rounds on the (1,*,1) up stage and on (2,0,1)'s down stage.
  std::set<int> l2_rounds, top_rounds;
  bool placed = true;
  for (Nid dst : {15, 31, 47, 63}) {
    auto pair = std::find_if(pat.pairs.begin(), pat.pairs.end(),
                             [dst](auto pr) { return pr.second == dst; });
    Route route = compute_route(topo, gdmodk, pair->first, dst);
    for (const Hop& hop : route.hops) {
      const SwitchAddr& a = topo.addr(hop.sw);
      if (a.level == 1 && hop.dir == Direction::Up) {
        placed = placed && a.digits[1] == 1;  // one of (1,*,1)
        l2_rounds.insert(topo.resolve_port(hop.sw, hop.dir, hop.slot).parallel_round);
      }
      if (a.level == 2 && hop.dir == Direction::Down) {
        placed = placed && a.to_string() == "(2,0,1)";
        top_rounds.insert(topo.resolve_port(hop.sw, hop.dir, hop.slot).parallel_round);
      }
    }
  }
  placed = placed && l2_rounds.size() == 4 && top_rounds.size() == 4;

  int dmodk_ctopo =
      analyze(topo, compute_routes(topo, policy(BaseAlgo::Dmodk), pat), MetricDirection::Output)
          .c_topo;
  std::string mismatch;
  bool oracle_ok = oracle_matches(topo, rs, report, &mismatch);
  std::cout << "  gdmodk x c2io oracle c_topo = " << report.c_topo
            << " (upper bound 2; dmodk reaches " << dmodk_ctopo << ")\n";
  criterion(6, "gdmodk x c2io: single-flow upper ports, distinct rounds, c_topo <= 2",
            single_flow && placed && report.c_topo <= 2 && report.c_topo < dmodk_ctopo &&
                oracle_ok);
}

// Distinct L2 up-ports of subgroup c2 carrying at least one route.
int used_l2_up_ports(const Topology& topo, const CongestionReport& report, int c2) {
  std::set<std::pair<SwitchId, int>> used;
  for (const auto& row : report.rows) {
    const SwitchAddr& a = topo.addr(row.port.sw);
    if (a.level == 1 && a.digits[0] == c2 && row.port.dir == Direction::Up) {
      used.insert({row.port.sw, row.port.slot});
    }
  }
  return static_cast<int>(used.size());
}

void check_gsmodk_c2io() {
  Topology topo = case_study();
  Pattern pat = mirror_c2io(topo);
  auto gsmodk = grouped_policy(BaseAlgo::Smodk, topo, {"compute", "io"});
  CongestionReport grouped =
      analyze(topo, compute_routes(topo, gsmodk, pat), MetricDirection::Output);
  CongestionReport plain = analyze(topo, compute_routes(topo, policy(BaseAlgo::Smodk), pat),
                                   MetricDirection::Output);
  bool ok = grouped.c_topo == 4;
  for (int c2 = 0; c2 < 2; ++c2) {
    ok = ok && used_l2_up_ports(topo, grouped, c2) == 8;
    ok = ok && used_l2_up_ports(topo, plain, c2) == 7;
  }
  criterion(7, "gsmodk x c2io: c_topo 4; 8 used L2 up-ports per subgroup (smodk: 7)", ok);
}

void check_single_type_identity() {
  Topology topo = Topology::build(parse_pgft_spec("PGFT(3;8,4,2;1,2,1;1,1,4)"));
  Pattern pat = all_to_all(topo);
  auto gdmodk = grouped_policy(BaseAlgo::Dmodk, topo, {"compute"});
  auto gsmodk = grouped_policy(BaseAlgo::Smodk, topo, {"compute"});
  bool ok =
      compute_routes(topo, gdmodk, pat).routes ==
          compute_routes(topo, policy(BaseAlgo::Dmodk), pat).routes &&
      compute_routes(topo, gsmodk, pat).routes ==
          compute_routes(topo, policy(BaseAlgo::Smodk), pat).routes;
  criterion(8, "single node type: grouped route sets identical over all 4032 pairs", ok);
}

void check_duality() {
  Topology topo = case_study();
  auto gdmodk = grouped_policy(BaseAlgo::Dmodk, topo, {"compute", "io"});
  auto gsmodk = grouped_policy(BaseAlgo::Smodk, topo, {"compute", "io"});

  bool ok = true;
  for (Nid s = 0; s < topo.node_count() && ok; ++s) {
    for (Nid d = 0; d < topo.node_count() && ok; ++d) {
      if (s == d) continue;
      auto forward = switch_links(topo, compute_route(topo, policy(BaseAlgo::Dmodk), s, d));
      std::reverse(forward.begin(), forward.end());
      ok = forward == switch_links(topo, compute_route(topo, policy(BaseAlgo::Smodk), d, s));
      if (!ok) break;
      auto gforward = switch_links(topo, compute_route(topo, gdmodk, s, d));
      std::reverse(gforward.begin(), gforward.end());
      ok = gforward == switch_links(topo, compute_route(topo, gsmodk, d, s));
    }
  }

  std::vector<Pattern> patterns = {mirror_c2io(topo), transpose(mirror_c2io(topo)),
                                   type_to_type(topo, "io", "compute")};
  for (const Pattern& pat : patterns) {
    Pattern flipped = transpose(pat);
    auto ctopo = [&](const SelectionPolicy& p, const Pattern& pp) {
      return analyze(topo, compute_routes(topo, p, pp), MetricDirection::Output).c_topo;
    };
    ok = ok && ctopo(policy(BaseAlgo::Dmodk), pat) == ctopo(policy(BaseAlgo::Smodk), flipped);
    ok = ok && ctopo(gdmodk, pat) == ctopo(gsmodk, flipped);
  }
  criterion(9, "reverse duality over all pairs; symmetric-pattern c_topo identities", ok);
}

void check_oracle_equivalence() {
  struct Case {
    std::string name;
    Topology topo;
    bool has_types;
  };
  PgftParams randomized = random_params(2026);
  std::vector<Case> cases;
  cases.push_back({"case-study", case_study(), true});
  cases.push_back({"PGFT(1;4;1;1)", Topology::build(parse_pgft_spec("PGFT(1;4;1;1)")), false});
  cases.push_back(
      {"PGFT(2;2,2;1,2;1,2)", Topology::build(parse_pgft_spec("PGFT(2;2,2;1,2;1,2)")), false});
  cases.push_back({randomized.to_string(),
                   Topology::build(randomized, {mod_rule("io", randomized.down_arity[0],
                                                         randomized.down_arity[0] - 1)}),
                   true});
  std::cout << "  randomized topology: " << randomized.to_string() << "\n";

  bool ok = true;
  int combos = 0;
  for (const Case& c : cases) {
    std::vector<SelectionPolicy> policies = {policy(BaseAlgo::Dmodk), policy(BaseAlgo::Smodk),
                                             policy(BaseAlgo::Random, 1)};
    if (c.has_types) {
      policies.push_back(grouped_policy(BaseAlgo::Dmodk, c.topo, c.topo.present_types()));
      policies.push_back(grouped_policy(BaseAlgo::Smodk, c.topo, c.topo.present_types()));
    }
    std::vector<Pattern> patterns = {all_to_all(c.topo)};
    if (c.has_types && c.topo.params().down_arity[c.topo.levels() - 1] % 2 == 0) {
      patterns.push_back(mirror_c2io(c.topo));
    }
    for (const SelectionPolicy& p : policies) {
      for (const Pattern& pat : patterns) {
        RouteSet rs = compute_routes(c.topo, p, pat);
        for (MetricDirection dir : {MetricDirection::Output, MetricDirection::Input}) {
          std::string mismatch;
          if (!oracle_matches(c.topo, rs, analyze(c.topo, rs, dir), &mismatch)) {
            std::cout << "  mismatch on " << c.name << " / " << p.name() << " / " << pat.name
                      << " / " << to_string(dir) << ": " << mismatch << "\n";
            ok = false;
          }
          ++combos;
        }
      }
    }
  }
  std::cout << "  recount combinations checked: " << combos << "\n";
  criterion(10, "independent recount matches analyze on every suite topology", ok);
}

void check_all_to_all_balance() {
  Topology topo = case_study();
  RouteSet rs = compute_routes(topo, policy(BaseAlgo::Dmodk), all_to_all(topo));
  CongestionReport report = analyze(topo, rs, MetricDirection::Output);
  int top_down_ports = 0;
  bool ok = true;
  for (const auto& row : report.rows) {
    if (topo.addr(row.port.sw).level == 2 && row.port.dir == Direction::Down) {
      ++top_down_ports;
      ok = ok && row.dst_count == 4;
    }
  }
  ok = ok && top_down_ports == 16;  // every top down-port carries traffic
  criterion(11, "all-to-all x dmodk: every top down-port serves exactly 4 destinations", ok);
}

}  // namespace

int main() {
  check_topology_shape();
  check_dmodk_units();
  check_dmodk_c2io();
  check_smodk_c2io();
  check_random_c2io();
  check_gdmodk_c2io();
  check_gsmodk_c2io();
  check_single_type_identity();
  check_duality();
  check_oracle_equivalence();
  check_all_to_all_balance();
  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
