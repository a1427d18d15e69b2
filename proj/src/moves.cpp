#include "ckp/moves.hpp"

#include <algorithm>

#include "ckp/errors.hpp"

namespace ckp {

const char* move_kind_name(const Move& move) {
  struct Namer {
    const char* operator()(const CascadeAppend&) { return "cascade-append"; }
    const char* operator()(const CascadeTruncateAppend&) {
      return "cascade-truncate-append";
    }
    const char* operator()(const BridgeSeparating&) {
      return "bridge-separating";
    }
    const char* operator()(const BridgeRankOne&) { return "bridge-rank-one"; }
    const char* operator()(const BridgeHigher&) { return "bridge-higher"; }
  };
  return std::visit(Namer{}, move);
}

namespace {

int min_rank_owner(const Bridge& bridge, const RankTable& ranks) {
  if (bridge.owners.empty())
    throw contract_error("bridge without owners");
  int best = -1;
  int best_rank = 0;
  for (int w : bridge.owners) {
    auto it = ranks.find(w);
    if (it == ranks.end())
      throw contract_error("bridge owner has undefined rank");
    if (best < 0 || it->second < best_rank) {
      best = w;
      best_rank = it->second;
    } else if (it->second == best_rank) {
      throw internal_error("two bridge owners share the minimal rank");
    }
  }
  return best;
}

// Smallest vertex of part `i` outside keep_region whose removal keeps the
// part connected. Such a vertex always exists (a deepest spanning-tree leaf
// below the separator qualifies).
std::optional<int> choose_replacement(const Problem& pb,
                                      const Configuration& cfg, int i,
                                      const VertexSet& keep_region) {
  for (int u : cfg.parts[i]) {
    if (keep_region.count(u)) continue;
    if (!separates(pb.graph, cfg.parts[i], u)) return u;
  }
  return std::nullopt;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw contract_error(what);
}

// potential entries for ranks 1..r-1 must be untouched by rank-r surgery.
void check_prefix_preserved(const Problem& pb, const Configuration& before_cfg,
                            const PotentialVector& before,
                            const PotentialVector& after, int rank,
                            const char* op) {
  for (int idx = 0; idx + 1 < rank; ++idx) {
    const int b = idx < static_cast<int>(before.size()) ? before[idx] : 0;
    const int a = idx < static_cast<int>(after.size()) ? after[idx] : 0;
    if (a != b)
      throw internal_error(std::string(op) +
                           " changed a lower-rank potential entry\n" +
                           dump_configuration(pb, before_cfg));
  }
}

}  // namespace

CascadePlan plan_cascade_insertion(const Problem& problem,
                                   const Configuration& cfg, int a, int b,
                                   int part) {
  (void)a;
  Configuration probe = cfg;
  probe.cascades[part].push_back(b);
  probe = make_configuration(problem, probe.grow, probe.parts, probe.cascades);
  const RankTable probe_ranks = compute_ranks(problem, probe);
  auto it = probe_ranks.find(b);
  if (it == probe_ranks.end())
    throw contract_error("cascade extension leaves b unranked");
  CascadePlan plan;
  plan.rank = it->second;

  const RankTable current = compute_ranks(problem, cfg);
  int keep = 0;
  for (int w : cfg.cascades[part]) {
    auto rit = current.find(w);
    if (rit == current.end())
      throw contract_error("cascade vertex of undefined rank");
    if (rit->second >= plan.rank) break;
    ++keep;
  }
  plan.keep = keep;
  return plan;
}

Configuration apply_cascade_move(const Problem& problem,
                                 const Configuration& cfg, int a, int b,
                                 int part) {
  require(part >= 0 && part < problem.k() && part != cfg.grow,
          "cascade move: bad part index");
  require(problem.graph.has_edge(a, b), "cascade move: (a,b) is not an edge");
  require(cfg.parts[part].count(b) && b != problem.terminals[part],
          "cascade move: b must be a non-terminal vertex of the part");
  const auto res = all_reservoirs(problem, cfg);
  for (const auto& [w, rw] : res)
    require(!rw.count(b), "cascade move: b lies in a reservoir");
  const auto& casc = cfg.cascades[part];
  require(casc.empty() || casc.back() != b,
          "cascade move: b is the last cascade entry");
  require(std::find(casc.begin(), casc.end(), b) == casc.end(),
          "cascade move: b is already a cascade entry");
  {
    bool ok = cfg.parts[cfg.grow].count(a) > 0;
    if (!ok) {
      for (int i = 0; i < problem.k() && !ok; ++i) {
        if (i == cfg.grow || i == part) continue;
        for (int w : cfg.cascades[i])
          if (res.at(w).count(a)) {
            ok = true;
            break;
          }
      }
    }
    require(ok,
            "cascade move: a is neither in the growing part nor in a "
            "cross-part reservoir");
  }

  const RankTable ranks_before = compute_ranks(problem, cfg);
  const PotentialVector before = potential(problem, cfg, ranks_before);
  const CascadePlan plan = plan_cascade_insertion(problem, cfg, a, b, part);

  auto cascades = cfg.cascades;
  cascades[part].resize(static_cast<size_t>(plan.keep));
  cascades[part].push_back(b);
  Configuration next =
      make_configuration(problem, cfg.grow, cfg.parts, std::move(cascades));
  next = prune_undefined(problem, next);

  const RankTable ranks_after = compute_ranks(problem, next);
  const auto& new_casc = next.cascades[part];
  if (new_casc.empty() || new_casc.back() != b ||
      ranks_after.at(b) != plan.rank)
    throw internal_error("cascade move lost the inserted vertex\n" +
                         dump_configuration(problem, next));
  const PotentialVector after = potential(problem, next, ranks_after);
  if (compare_potential(after, before) != PotentialOrder::greater)
    throw internal_error("cascade move failed to increase the potential\n" +
                         dump_configuration(problem, next));
  return next;
}

Configuration apply_bridge_separating(const Problem& problem,
                                      const Configuration& cfg,
                                      const RankTable& ranks,
                                      const Bridge& bridge) {
  require(cfg.free_set.count(bridge.a), "bridge end a must be free");
  const int i = part_containing(cfg, bridge.b);
  require(i >= 0 && i != cfg.grow, "bridge end b must be in a cascade part");
  const int w = min_rank_owner(bridge, ranks);
  const int r = ranks.at(w);
  require(separates(problem.graph, cfg.parts[i], w),
          "bridge-separating requires a separating owner");

  const VertexSet rw = reservoir(problem, cfg, i, w);
  VertexSet keep_region = rw;
  keep_region.insert(w);
  const auto u = choose_replacement(problem, cfg, i, keep_region);
  if (!u)
    throw internal_error(
        "no nonseparating vertex outside the owner's reservoir\n" +
        dump_configuration(problem, cfg));

  auto parts = cfg.parts;
  parts[i].erase(*u);
  parts[i].insert(bridge.a);
  auto cascades = cfg.cascades;
  std::vector<int> kept;
  for (int x : cascades[i])
    if (keep_region.count(x)) kept.push_back(x);
  cascades[i] = std::move(kept);

  Configuration next = make_configuration(problem, cfg.grow, std::move(parts),
                                          std::move(cascades));
  next = prune_undefined(problem, next);

  const PotentialVector before = potential(problem, cfg, ranks);
  const RankTable ranks_after = compute_ranks(problem, next);
  const PotentialVector after = potential(problem, next, ranks_after);
  check_prefix_preserved(problem, cfg, before, after, r, "bridge-separating");
  const int b_idx = r - 1;
  const int rho_before =
      b_idx < static_cast<int>(before.size()) ? before[b_idx] : 0;
  const int rho_after =
      b_idx < static_cast<int>(after.size()) ? after[b_idx] : 0;
  if (rho_after <= rho_before)
    throw internal_error(
        "bridge-separating did not grow the owner's rank entry\n" +
        dump_configuration(problem, next));
  if (!reservoir(problem, next, i, w).count(bridge.a))
    throw internal_error("bridge end a missed the owner's reservoir\n" +
                         dump_configuration(problem, next));
  return next;
}

std::vector<VertexSet> apply_bridge_rank_one(const Problem& problem,
                                             const Configuration& cfg,
                                             const RankTable& ranks,
                                             const Bridge& bridge) {
  require(cfg.free_set.count(bridge.a), "bridge end a must be free");
  const int i = part_containing(cfg, bridge.b);
  require(i >= 0 && i != cfg.grow, "bridge end b must be in a cascade part");
  const int w = min_rank_owner(bridge, ranks);
  require(ranks.at(w) == 1, "bridge-rank-one requires a rank-1 owner");
  require(!separates(problem.graph, cfg.parts[i], w),
          "bridge-rank-one requires a nonseparating owner");
  require(adjacent_to_set(problem.graph, w, cfg.parts[cfg.grow]),
          "rank-1 owner must neighbor the growing part");

  auto parts = cfg.parts;
  parts[i].erase(w);
  parts[i].insert(bridge.a);
  parts[cfg.grow].insert(w);

  for (int j = 0; j < problem.k(); ++j) {
    const size_t expect = cfg.parts[j].size() + (j == cfg.grow ? 1 : 0);
    if (parts[j].size() != expect || !parts[j].count(problem.terminals[j]))
      throw internal_error("bridge-rank-one corrupted a part\n" +
                           dump_configuration(problem, cfg));
    if (!is_connected(problem.graph, parts[j]))
      throw internal_error("bridge-rank-one disconnected part " +
                           std::to_string(j) + "\n" +
                           dump_configuration(problem, cfg));
  }
  return parts;
}

Configuration apply_bridge_higher(const Problem& problem,
                                  const Configuration& cfg,
                                  const RankTable& ranks,
                                  const Bridge& bridge) {
  require(cfg.free_set.count(bridge.a), "bridge end a must be free");
  const int i = part_containing(cfg, bridge.b);
  require(i >= 0 && i != cfg.grow, "bridge end b must be in a cascade part");
  const int w = min_rank_owner(bridge, ranks);
  const int r = ranks.at(w);
  require(r >= 2, "bridge-higher requires rank >= 2");
  require(!separates(problem.graph, cfg.parts[i], w),
          "bridge-higher requires a nonseparating owner");

  auto parts = cfg.parts;
  parts[i].erase(w);
  parts[i].insert(bridge.a);
  auto cascades = cfg.cascades;
  auto& casc = cascades[i];
  auto wit = std::find(casc.begin(), casc.end(), w);
  require(wit != casc.end(), "owner missing from its cascade");
  casc.erase(wit, casc.end());

  Configuration next = make_configuration(problem, cfg.grow, std::move(parts),
                                          std::move(cascades));
  next = prune_undefined(problem, next);

  const PotentialVector before = potential(problem, cfg, ranks);
  const RankTable ranks_after = compute_ranks(problem, next);
  const PotentialVector after = potential(problem, next, ranks_after);
  check_prefix_preserved(problem, cfg, before, after, r, "bridge-higher");
  const auto bridges_after = find_bridges(problem, next, ranks_after);
  if (bridges_after.empty() || bridges_after.front().rank > r - 1)
    throw internal_error(
        "bridge-higher did not surface a lower-rank bridge\n" +
        dump_configuration(problem, next));
  return next;
}

std::optional<Move> select_move(const Problem& problem,
                                const Configuration& cfg,
                                const RankTable& ranks) {
  const auto bridges = find_bridges(problem, cfg, ranks);
  if (!bridges.empty()) {
    const Bridge& bridge = bridges.front();
    const int w = min_rank_owner(bridge, ranks);
    const int i = part_containing(cfg, bridge.b);
    if (separates(problem.graph, cfg.parts[i], w)) {
      VertexSet keep_region = reservoir(problem, cfg, i, w);
      keep_region.insert(w);
      const auto u = choose_replacement(problem, cfg, i, keep_region);
      if (!u)
        throw internal_error(
            "no nonseparating vertex outside the owner's reservoir\n" +
            dump_configuration(problem, cfg));
      return Move{BridgeSeparating{bridge, w, *u}};
    }
    if (ranks.at(w) == 1) return Move{BridgeRankOne{bridge, w}};
    return Move{BridgeHigher{bridge, w}};
  }
  if (const auto edge = find_cascade_edge(problem, cfg, ranks)) {
    const CascadePlan plan =
        plan_cascade_insertion(problem, cfg, edge->a, edge->b, edge->part);
    const int len = static_cast<int>(cfg.cascades[edge->part].size());
    if (plan.keep == len)
      return Move{CascadeAppend{edge->part, edge->b, edge->a}};
    return Move{CascadeTruncateAppend{edge->part, plan.keep, edge->b, edge->a}};
  }
  return std::nullopt;
}

}  // namespace ckp
