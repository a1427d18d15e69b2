#include "ckp/config.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ckp/errors.hpp"

namespace ckp {

Problem make_problem(Graph graph, std::vector<int> terminals,
                     std::vector<int> sizes) {
  const int n = graph.vertex_count();
  const int k = static_cast<int>(terminals.size());
  if (k < 2) throw input_error("need at least two terminals");
  if (sizes.size() != terminals.size())
    throw input_error("terminals and sizes must have equal length");
  std::set<int> seen;
  for (int t : terminals) {
    if (t < 0 || t >= n)
      throw input_error("terminal out of range: " + std::to_string(t));
    if (!seen.insert(t).second)
      throw input_error("terminals must be distinct");
  }
  long long total = 0;
  for (int s : sizes) {
    if (s < 1) throw input_error("part sizes must be positive");
    total += s;
  }
  if (total > n)
    throw input_error("part sizes sum to " + std::to_string(total) +
                      " but the graph has only " + std::to_string(n) +
                      " vertices");
  return Problem{std::move(graph), std::move(terminals), std::move(sizes)};
}

namespace {

void structural_check(const Problem& pb, const Configuration& cfg) {
  const int k = pb.k();
  const int n = pb.graph.vertex_count();
  auto fail = [&](const std::string& why) {
    throw contract_error("malformed configuration: " + why);
  };
  if (cfg.grow < 0 || cfg.grow >= k) fail("grow index out of range");
  if (static_cast<int>(cfg.parts.size()) != k) fail("wrong number of parts");
  if (static_cast<int>(cfg.cascades.size()) != k)
    fail("wrong number of cascades");
  std::vector<int> owner(static_cast<size_t>(n), -1);
  for (int i = 0; i < k; ++i) {
    if (!cfg.parts[i].count(pb.terminals[i]))
      fail("part " + std::to_string(i) + " misses its terminal");
    for (int v : cfg.parts[i]) {
      if (v < 0 || v >= n) fail("part vertex out of range");
      if (owner[v] != -1) fail("parts overlap at vertex " + std::to_string(v));
      owner[v] = i;
    }
    if (!is_connected(pb.graph, cfg.parts[i]))
      fail("part " + std::to_string(i) + " is disconnected");
  }
  if (!cfg.cascades[cfg.grow].empty()) fail("growing part carries a cascade");
  for (int i = 0; i < k; ++i) {
    std::set<int> entries;
    for (int w : cfg.cascades[i]) {
      if (!cfg.parts[i].count(w))
        fail("cascade entry outside its part: " + std::to_string(w));
      if (w == pb.terminals[i]) fail("terminal used as cascade entry");
      if (!entries.insert(w).second) fail("cascade entry repeated");
    }
  }
  // Derived free set.
  VertexSet expect_free;
  for (int v = 0; v < n; ++v)
    if (owner[v] == -1) expect_free.insert(expect_free.end(), v);
  if (cfg.free_set != expect_free)
    fail("free set is not the complement of the parts");
  // Cascade separation: each entry lies outside the previous entry's
  // reservoir.
  for (int i = 0; i < k; ++i) {
    const auto& casc = cfg.cascades[i];
    for (size_t j = 0; j + 1 < casc.size(); ++j) {
      if (reservoir(pb, cfg, i, casc[j]).count(casc[j + 1]))
        fail("cascade entry " + std::to_string(casc[j + 1]) +
             " lies in the reservoir of its predecessor");
    }
  }
}

}  // namespace

Configuration make_configuration(const Problem& problem, int grow,
                                 std::vector<VertexSet> parts,
                                 std::vector<std::vector<int>> cascades) {
  Configuration cfg;
  cfg.grow = grow;
  cfg.parts = std::move(parts);
  cfg.cascades = std::move(cascades);
  VertexSet free = problem.graph.all_vertices();
  for (const auto& p : cfg.parts)
    for (int v : p) free.erase(v);
  cfg.free_set = std::move(free);
  structural_check(problem, cfg);
  return cfg;
}

Configuration make_configuration(const Problem& problem, int grow,
                                 std::vector<VertexSet> parts) {
  return make_configuration(
      problem, grow, std::move(parts),
      std::vector<std::vector<int>>(static_cast<size_t>(problem.k())));
}

int part_containing(const Configuration& cfg, int v) {
  for (size_t i = 0; i < cfg.parts.size(); ++i)
    if (cfg.parts[i].count(v)) return static_cast<int>(i);
  return -1;
}

VertexSet reservoir(const Problem& problem, const Configuration& cfg, int part,
                    int v) {
  if (part < 0 || part >= problem.k() || part == cfg.grow)
    throw input_error("reservoir: invalid part index");
  const VertexSet& p = cfg.parts[part];
  if (!p.count(v)) throw input_error("reservoir: vertex not in part");
  VertexSet rest = p;
  rest.erase(v);
  return component_of(problem.graph, rest, problem.terminals[part]);
}

std::map<int, VertexSet> all_reservoirs(const Problem& problem,
                                        const Configuration& cfg) {
  std::map<int, VertexSet> res;
  for (int i = 0; i < problem.k(); ++i) {
    if (i == cfg.grow) continue;
    for (int w : cfg.cascades[i])
      res.emplace(w, reservoir(problem, cfg, i, w));
  }
  return res;
}

RankTable compute_ranks(const Problem& problem, const Configuration& cfg) {
  RankTable ranks;
  const auto res = all_reservoirs(problem, cfg);
  std::map<int, int> home;  // cascade vertex -> part
  for (int i = 0; i < problem.k(); ++i)
    for (int w : cfg.cascades[i]) home[w] = i;

  for (int round = 1;; ++round) {
    std::vector<int> assigned;
    for (const auto& [w, part] : home) {
      if (ranks.count(w)) continue;
      bool hit = false;
      if (round == 1) {
        hit = adjacent_to_set(problem.graph, w, cfg.parts[cfg.grow]);
      } else {
        for (const auto& [w2, r2] : res) {
          if (home.at(w2) == part) continue;
          auto it = ranks.find(w2);
          if (it == ranks.end() || it->second != round - 1) continue;
          if (adjacent_to_set(problem.graph, w, r2)) {
            hit = true;
            break;
          }
        }
      }
      if (hit) assigned.push_back(w);
    }
    if (assigned.empty()) return ranks;
    for (int w : assigned) ranks[w] = round;
  }
}

ValidityReport is_valid(const Problem& problem, const Configuration& cfg) {
  ValidityReport report;
  const RankTable ranks = compute_ranks(problem, cfg);
  for (int i = 0; i < problem.k(); ++i) {
    const auto& casc = cfg.cascades[i];
    int prev = 0;
    for (size_t j = 0; j < casc.size(); ++j) {
      auto it = ranks.find(casc[j]);
      if (it == ranks.end()) {
        report.violations.push_back("part " + std::to_string(i) +
                                    " cascade position " + std::to_string(j) +
                                    " (vertex " + std::to_string(casc[j]) +
                                    "): rank undefined");
        prev = -1;
        continue;
      }
      if (prev >= 0 && it->second <= prev)
        report.violations.push_back(
            "part " + std::to_string(i) + " cascade position " +
            std::to_string(j) + ": rank " + std::to_string(it->second) +
            " does not exceed the previous rank " + std::to_string(prev));
      prev = it->second;
    }
  }
  report.valid = report.violations.empty();
  return report;
}

PotentialVector potential(const Problem& problem, const Configuration& cfg,
                          const RankTable& ranks) {
  int max_rank = 0;
  for (int i = 0; i < problem.k(); ++i) {
    int prev = 0;
    for (int w : cfg.cascades[i]) {
      auto it = ranks.find(w);
      if (it == ranks.end())
        throw contract_error("potential: cascade vertex of undefined rank");
      if (it->second <= prev)
        throw contract_error("potential: cascade ranks not increasing");
      prev = it->second;
      max_rank = std::max(max_rank, it->second);
    }
  }
  const auto res = all_reservoirs(problem, cfg);
  std::vector<VertexSet> covered(static_cast<size_t>(max_rank));
  for (int i = 0; i < problem.k(); ++i) {
    for (int w : cfg.cascades[i]) {
      const int r = ranks.at(w);
      const auto& rw = res.at(w);
      covered[r - 1].insert(rw.begin(), rw.end());
    }
  }
  PotentialVector rho(static_cast<size_t>(max_rank));
  for (int r = 0; r < max_rank; ++r)
    rho[r] = static_cast<int>(covered[r].size());
  return rho;
}

PotentialOrder compare_potential(const PotentialVector& p,
                                 const PotentialVector& q) {
  const size_t len = std::max(p.size(), q.size());
  for (size_t i = 0; i < len; ++i) {
    const int a = i < p.size() ? p[i] : 0;
    const int b = i < q.size() ? q[i] : 0;
    if (a < b) return PotentialOrder::less;
    if (a > b) return PotentialOrder::greater;
  }
  return PotentialOrder::equal;
}

const char* potential_order_name(PotentialOrder order) {
  switch (order) {
    case PotentialOrder::less:
      return "less";
    case PotentialOrder::equal:
      return "equal";
    default:
      return "greater";
  }
}

std::vector<Bridge> find_bridges(const Problem& problem,
                                 const Configuration& cfg,
                                 const RankTable& ranks) {
  const auto res = all_reservoirs(problem, cfg);
  // Reservoir membership, vertex -> owning cascade vertices.
  std::map<int, VertexSet> owners_of;
  for (const auto& [w, rw] : res)
    for (int v : rw) owners_of[v].insert(w);

  std::vector<Bridge> bridges;
  auto consider = [&](int a, int b) {
    auto it = owners_of.find(b);
    if (it == owners_of.end()) return;
    Bridge br;
    br.a = a;
    br.b = b;
    br.owners = it->second;
    int best = -1;
    for (int w : br.owners) {
      auto rit = ranks.find(w);
      if (rit == ranks.end())
        throw contract_error("find_bridges: unranked reservoir owner");
      if (best < 0 || rit->second < best) best = rit->second;
    }
    br.rank = best;
    bridges.push_back(std::move(br));
  };
  for (auto [u, v] : problem.graph.edges()) {
    if (cfg.free_set.count(u)) consider(u, v);
    if (cfg.free_set.count(v)) consider(v, u);
  }
  std::sort(bridges.begin(), bridges.end(),
            [](const Bridge& x, const Bridge& y) {
              return std::tie(x.rank, x.a, x.b) < std::tie(y.rank, y.a, y.b);
            });
  return bridges;
}

std::optional<CascadeEdge> find_cascade_edge(const Problem& problem,
                                             const Configuration& cfg,
                                             const RankTable& ranks) {
  (void)ranks;
  const auto res = all_reservoirs(problem, cfg);
  std::map<int, VertexSet> owners_of;
  for (const auto& [w, rw] : res)
    for (int v : rw) owners_of[v].insert(w);

  std::map<int, int> home;
  for (int i = 0; i < problem.k(); ++i)
    for (int w : cfg.cascades[i]) home[w] = i;

  // a qualifies for target part i when it lies in the growing part or in the
  // reservoir of a cascade vertex belonging to a third part.
  auto qualifies = [&](int a, int i) {
    if (cfg.parts[cfg.grow].count(a)) return true;
    auto it = owners_of.find(a);
    if (it == owners_of.end()) return false;
    for (int w : it->second)
      if (home.at(w) != i) return true;
    return false;
  };

  for (int i = 0; i < problem.k(); ++i) {
    if (i == cfg.grow) continue;
    const auto& casc = cfg.cascades[i];
    const int last = casc.empty() ? -1 : casc.back();
    for (int b : cfg.parts[i]) {
      if (b == problem.terminals[i]) continue;
      if (b == last) continue;
      if (owners_of.count(b)) continue;
      for (int a : problem.graph.adjacent(b)) {
        if (qualifies(a, i)) return CascadeEdge{a, b, i};
      }
    }
  }
  return std::nullopt;
}

Configuration prune_undefined(const Problem& problem, Configuration cfg) {
  for (;;) {
    const RankTable ranks = compute_ranks(problem, cfg);
    bool changed = false;
    for (auto& casc : cfg.cascades) {
      int prev = 0;
      size_t keep = casc.size();
      for (size_t j = 0; j < casc.size(); ++j) {
        auto it = ranks.find(casc[j]);
        if (it == ranks.end() || it->second <= prev) {
          keep = j;
          break;
        }
        prev = it->second;
      }
      if (keep < casc.size()) {
        casc.resize(keep);
        changed = true;
      }
    }
    if (!changed) break;
  }
  if (!is_valid(problem, cfg).valid)
    throw internal_error("prune_undefined left an invalid configuration\n" +
                         dump_configuration(problem, cfg));
  return cfg;
}

void check_engine_state(const Problem& problem, const Configuration& cfg) {
  auto fail = [&](const std::string& why) {
    throw internal_error("engine state invariant violated: " + why + "\n" +
                         dump_configuration(problem, cfg));
  };
  try {
    structural_check(problem, cfg);
  } catch (const contract_error& e) {
    fail(e.what());
  }
  if (cfg.free_set.empty()) fail("free set is empty");
  const auto validity = is_valid(problem, cfg);
  if (!validity.valid) fail(validity.violations.front());
  // Every cascade prefix (terminal included) sits inside each entry's
  // reservoir; equivalently vertices outside R(w)+w occur after w.
  for (int i = 0; i < problem.k(); ++i) {
    const auto& casc = cfg.cascades[i];
    for (size_t j = 0; j < casc.size(); ++j) {
      const VertexSet rw = reservoir(problem, cfg, i, casc[j]);
      if (!rw.count(problem.terminals[i]))
        fail("terminal escaped the reservoir of cascade vertex " +
             std::to_string(casc[j]));
      for (size_t j2 = 0; j2 < j; ++j2)
        if (!rw.count(casc[j2]))
          fail("cascade prefix vertex " + std::to_string(casc[j2]) +
               " outside the reservoir of " + std::to_string(casc[j]));
    }
  }
}

std::string dump_configuration(const Problem& problem,
                               const Configuration& cfg) {
  std::ostringstream out;
  auto put_set = [&](const VertexSet& s) {
    out << "{";
    bool first = true;
    for (int v : s) {
      if (!first) out << ",";
      out << v;
      first = false;
    }
    out << "}";
  };
  out << "grow=" << cfg.grow << "\n";
  for (int i = 0; i < problem.k(); ++i) {
    out << "part " << i << " (terminal " << problem.terminals[i] << "): ";
    put_set(cfg.parts[i]);
    out << " cascade=(";
    for (size_t j = 0; j < cfg.cascades[i].size(); ++j) {
      if (j) out << ",";
      out << cfg.cascades[i][j];
    }
    out << ")\n";
  }
  out << "free: ";
  put_set(cfg.free_set);
  out << "\nranks:";
  for (const auto& [w, r] : compute_ranks(problem, cfg))
    out << " " << w << "->" << r;
  out << "\n";
  return out.str();
}

}  // namespace ckp
