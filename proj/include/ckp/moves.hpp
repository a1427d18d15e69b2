#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ckp/config.hpp"

namespace ckp {

/// Extend part `part`'s cascade with b; the edge (a, b) justified it.
struct CascadeAppend {
  int part;
  int b;
  int a;
};

/// Drop every cascade entry after position `keep`, then append b.
struct CascadeTruncateAppend {
  int part;
  int keep;
  int b;
  int a;
};

/// The bridge's minimal-rank owner separates its part: swap the free end in
/// for a nonseparating vertex, enlarging the owner's reservoir.
struct BridgeSeparating {
  Bridge bridge;
  int owner;
  int moved_out;  // the nonseparating vertex sent to the free set
};

/// Rank-1 owner, nonseparating: the owner joins the growing part and the
/// augmentation is complete.
struct BridgeRankOne {
  Bridge bridge;
  int owner;
};

/// Rank >= 2 owner, nonseparating: the owner trades places with the free
/// end, which surfaces a strictly lower-rank bridge.
struct BridgeHigher {
  Bridge bridge;
  int owner;
};

using Move = std::variant<CascadeAppend, CascadeTruncateAppend,
                          BridgeSeparating, BridgeRankOne, BridgeHigher>;

const char* move_kind_name(const Move& move);

/// One solver step for logging and replay. `comparison` tags
/// compare_potential(after, before).
struct TraceEvent {
  long long step = 0;    // 1-based within its augmentation
  int augmentation = 0;  // 0-based ordinal within the solve
  std::string kind;
  int grow = 0;
  PotentialVector potential_before;
  PotentialVector potential_after;
  std::string comparison;
  std::vector<int> part_sizes;
  std::optional<int> bridge_a;
  std::optional<int> bridge_b;
  std::optional<int> bridge_rank;
  std::optional<int> next_min_bridge_rank;  // bridge-higher only

  bool operator==(const TraceEvent&) const = default;
};

/// Rank b would receive and the number of leading cascade entries to keep.
/// keep equal to the cascade length means a pure append.
struct CascadePlan {
  int rank = 0;
  int keep = 0;
};

CascadePlan plan_cascade_insertion(const Problem& problem,
                                   const Configuration& cfg, int a, int b,
                                   int part);

/// Applies a cascade extension (append or truncate-then-append, decided by
/// the rank b receives). The result is valid and the potential strictly
/// increases; both are checked.
Configuration apply_cascade_move(const Problem& problem,
                                 const Configuration& cfg, int a, int b,
                                 int part);

/// Owner separates its part: returns the reshaped configuration. Checked:
/// result valid, lower-rank potential entries unchanged, the owner's rank
/// entry strictly larger, and a now inside the owner's reservoir.
Configuration apply_bridge_separating(const Problem& problem,
                                      const Configuration& cfg,
                                      const RankTable& ranks,
                                      const Bridge& bridge);

/// Rank-1 bridge completes the augmentation: returns the new parts (the
/// growing part one larger, the owner's part reshaped, cascades dropped).
std::vector<VertexSet> apply_bridge_rank_one(const Problem& problem,
                                             const Configuration& cfg,
                                             const RankTable& ranks,
                                             const Bridge& bridge);

/// Rank >= 2 bridge: returns the reshaped configuration. Checked: result
/// valid, potential entries below the bridge rank unchanged, and a bridge of
/// strictly smaller rank present afterwards.
Configuration apply_bridge_higher(const Problem& problem,
                                  const Configuration& cfg,
                                  const RankTable& ranks,
                                  const Bridge& bridge);

/// Move policy: minimal-rank bridge first (separating / rank-one / higher by
/// its owner), otherwise a cascade extension. Empty when no move exists, in
/// which case the solver derives a cut certificate.
std::optional<Move> select_move(const Problem& problem,
                                const Configuration& cfg,
                                const RankTable& ranks);

}  // namespace ckp
