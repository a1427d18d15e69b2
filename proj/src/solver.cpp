#include "ckp/solver.hpp"

#include <algorithm>

#include "ckp/errors.hpp"

namespace ckp {

namespace {

constexpr size_t kTailLength = 25;

std::vector<int> sizes_of(const std::vector<VertexSet>& parts) {
  std::vector<int> sizes;
  sizes.reserve(parts.size());
  for (const auto& p : parts) sizes.push_back(static_cast<int>(p.size()));
  return sizes;
}

/// Smallest free vertex with a neighbor in the growing part, if any.
std::optional<int> direct_attach_candidate(const Problem& pb,
                                           const Configuration& cfg) {
  for (int s : cfg.free_set)
    if (adjacent_to_set(pb.graph, s, cfg.parts[cfg.grow])) return s;
  return std::nullopt;
}

struct StepOutcome {
  std::optional<Configuration> next;          // continue from here
  std::optional<std::vector<VertexSet>> done;  // augmentation complete
};

StepOutcome apply_selected(const Problem& pb, const Configuration& cfg,
                           const RankTable& ranks, const Move& move,
                           TraceEvent& ev) {
  StepOutcome out;
  if (const auto* m = std::get_if<CascadeAppend>(&move)) {
    out.next = apply_cascade_move(pb, cfg, m->a, m->b, m->part);
  } else if (const auto* m = std::get_if<CascadeTruncateAppend>(&move)) {
    out.next = apply_cascade_move(pb, cfg, m->a, m->b, m->part);
  } else if (const auto* m = std::get_if<BridgeSeparating>(&move)) {
    ev.bridge_a = m->bridge.a;
    ev.bridge_b = m->bridge.b;
    ev.bridge_rank = m->bridge.rank;
    out.next = apply_bridge_separating(pb, cfg, ranks, m->bridge);
  } else if (const auto* m = std::get_if<BridgeRankOne>(&move)) {
    ev.bridge_a = m->bridge.a;
    ev.bridge_b = m->bridge.b;
    ev.bridge_rank = m->bridge.rank;
    out.done = apply_bridge_rank_one(pb, cfg, ranks, m->bridge);
  } else if (const auto* m = std::get_if<BridgeHigher>(&move)) {
    ev.bridge_a = m->bridge.a;
    ev.bridge_b = m->bridge.b;
    ev.bridge_rank = m->bridge.rank;
    Configuration next = apply_bridge_higher(pb, cfg, ranks, m->bridge);
    const auto bridges = find_bridges(pb, next, compute_ranks(pb, next));
    ev.next_min_bridge_rank = bridges.front().rank;
    out.next = std::move(next);
  }
  return out;
}

}  // namespace

CutWitness certify_cut(const Problem& problem, const Configuration& cfg,
                       const RankTable& ranks) {
  const auto validity = is_valid(problem, cfg);
  if (!validity.valid)
    throw contract_error("certify_cut on an invalid configuration");
  if (!find_bridges(problem, cfg, ranks).empty())
    throw contract_error("certify_cut with a bridge available");
  if (find_cascade_edge(problem, cfg, ranks))
    throw contract_error("certify_cut with a cascade edge available");
  if (direct_attach_candidate(problem, cfg))
    throw internal_error(
        "certify_cut with a free vertex adjacent to the growing part\n" +
        dump_configuration(problem, cfg));

  CutWitness witness;
  for (int i = 0; i < problem.k(); ++i) {
    if (i == cfg.grow) continue;
    const auto& casc = cfg.cascades[i];
    witness.cut.insert(casc.empty() ? problem.terminals[i] : casc.back());
  }
  if (static_cast<int>(witness.cut.size()) != problem.k() - 1)
    throw internal_error("cut certificate has the wrong size\n" +
                         dump_configuration(problem, cfg));

  VertexSet side_a = cfg.parts[cfg.grow];
  for (const auto& [w, rw] : all_reservoirs(problem, cfg))
    side_a.insert(rw.begin(), rw.end());
  for (int c : witness.cut) side_a.erase(c);
  witness.side_a = std::move(side_a);
  for (int v = 0; v < problem.graph.vertex_count(); ++v)
    if (!witness.cut.count(v) && !witness.side_a.count(v))
      witness.side_b.insert(v);

  try {
    check_cut_witness(problem.graph, witness);
  } catch (const internal_error& e) {
    throw internal_error(std::string(e.what()) + "\n" +
                         dump_configuration(problem, cfg));
  }
  return witness;
}

AugmentResult augment_once(const Problem& problem,
                           const std::vector<VertexSet>& parts, int grow,
                           const SolveOptions& options) {
  if (grow < 0 || grow >= problem.k())
    throw input_error("augment_once: grow index out of range");
  const int n = problem.graph.vertex_count();
  long long assigned = 0;
  for (const auto& p : parts) assigned += static_cast<long long>(p.size());
  if (assigned >= n)
    throw contract_error("augment_once: no free vertex to absorb");

  long long budget = options.budget;
  if (budget <= 0)
    budget = 10LL * static_cast<long long>(n) * n * n;

  AugmentResult result;
  Configuration cfg = make_configuration(problem, grow, parts);

  auto emit = [&](TraceEvent ev) {
    ev.augmentation = options.augmentation_index;
    if (options.trace) options.trace(ev);
    result.tail.push_back(std::move(ev));
    if (result.tail.size() > kTailLength)
      result.tail.erase(result.tail.begin());
  };

  for (long long step = 1; step <= budget; ++step) {
    check_engine_state(problem, cfg);
    if (options.observer) options.observer(problem, cfg);
    result.steps = step;

    const RankTable ranks = compute_ranks(problem, cfg);
    const PotentialVector before = potential(problem, cfg, ranks);

    // A free vertex adjacent to the growing part finishes the augmentation
    // outright; the move machinery only matters when no such vertex exists.
    if (const auto s = direct_attach_candidate(problem, cfg)) {
      auto done = cfg.parts;
      done[grow].insert(*s);
      TraceEvent ev;
      ev.step = step;
      ev.kind = "direct-attach";
      ev.grow = grow;
      ev.potential_before = before;
      ev.potential_after = before;
      ev.comparison = potential_order_name(PotentialOrder::equal);
      ev.part_sizes = sizes_of(done);
      emit(std::move(ev));
      result.move_counts["direct-attach"] += 1;
      result.parts = std::move(done);
      return result;
    }

    const auto move = select_move(problem, cfg, ranks);
    if (!move) {
      result.witness = certify_cut(problem, cfg, ranks);
      return result;
    }

    TraceEvent ev;
    ev.step = step;
    ev.kind = move_kind_name(*move);
    ev.grow = grow;
    ev.potential_before = before;
    result.move_counts[ev.kind] += 1;

    StepOutcome outcome = apply_selected(problem, cfg, ranks, *move, ev);
    if (outcome.done) {
      ev.potential_after = {};
      ev.comparison = potential_order_name(
          compare_potential(ev.potential_after, before));
      ev.part_sizes = sizes_of(*outcome.done);
      emit(std::move(ev));
      result.parts = std::move(outcome.done);
      return result;
    }
    cfg = std::move(*outcome.next);
    const RankTable after_ranks = compute_ranks(problem, cfg);
    ev.potential_after = potential(problem, cfg, after_ranks);
    ev.comparison =
        potential_order_name(compare_potential(ev.potential_after, before));
    ev.part_sizes = sizes_of(cfg.parts);
    emit(std::move(ev));
  }

  result.stalled = true;
  return result;
}

SolveReport solve(const Problem& problem, const SolveOptions& options) {
  SolveReport report;
  std::vector<VertexSet> parts;
  parts.reserve(static_cast<size_t>(problem.k()));
  for (int t : problem.terminals) parts.push_back(VertexSet{t});

  int ordinal = 0;
  for (;;) {
    int grow = -1;
    for (int i = 0; i < problem.k(); ++i) {
      if (static_cast<int>(parts[i].size()) < problem.sizes[i]) {
        grow = i;
        break;
      }
    }
    if (grow < 0) break;

    SolveOptions per_call = options;
    per_call.augmentation_index = ordinal;
    AugmentResult step = augment_once(problem, parts, grow, per_call);
    report.total_steps += step.steps;
    for (const auto& [kind, count] : step.move_counts)
      report.move_counts[kind] += count;

    if (step.parts) {
      // Exactly one part grew, by one vertex.
      for (int i = 0; i < problem.k(); ++i) {
        const size_t expect = parts[i].size() + (i == grow ? 1 : 0);
        if ((*step.parts)[i].size() != expect)
          throw internal_error("augmentation changed an unexpected part size");
      }
      parts = std::move(*step.parts);
      ++ordinal;
      continue;
    }
    report.augmentations = ordinal;
    if (step.witness) {
      report.failure = SolveFailure::not_k_connected;
      report.witness = std::move(step.witness);
    } else {
      report.failure = SolveFailure::progress_stall;
      report.stall_tail = std::move(step.tail);
    }
    return report;
  }

  report.augmentations = ordinal;
  Partition partition{std::move(parts)};
  for (int i = 0; i < problem.k(); ++i) {
    if (static_cast<int>(partition.parts[i].size()) != problem.sizes[i] ||
        !partition.parts[i].count(problem.terminals[i]) ||
        !is_connected(problem.graph, partition.parts[i]))
      throw internal_error("solve produced a malformed partition");
  }
  report.partition = std::move(partition);
  return report;
}

}  // namespace ckp
