#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckp/moves.hpp"

namespace ckp {

struct Partition {
  std::vector<VertexSet> parts;
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct SolveOptions {
  /// Move budget per augmentation; 0 means the default 10 * n^3.
  long long budget = 0;
  TraceSink trace;
  /// Called with every intermediate configuration (diagnostics and tests).
  std::function<void(const Problem&, const Configuration&)> observer;
  /// Ordinal stamped into emitted trace events.
  int augmentation_index = 0;
};

enum class SolveFailure { none, not_k_connected, progress_stall };

struct AugmentResult {
  std::optional<std::vector<VertexSet>> parts;
  std::optional<CutWitness> witness;
  bool stalled = false;
  std::vector<TraceEvent> tail;  // last events of a stalled run
  long long steps = 0;
  std::map<std::string, long long> move_counts;
};

struct SolveReport {
  std::optional<Partition> partition;
  SolveFailure failure = SolveFailure::none;
  std::optional<CutWitness> witness;
  std::vector<TraceEvent> stall_tail;
  std::map<std::string, long long> move_counts;
  long long total_steps = 0;
  int augmentations = 0;
};

/// Grows part `grow` by exactly one vertex while preserving every other part
/// size, terminal and connectivity. Starts from null cascades and iterates
/// select_move/apply until a rank-one bridge (or a free vertex directly
/// adjacent to the growing part) completes the step, no move exists (cut
/// certificate), or the budget runs out.
AugmentResult augment_once(const Problem& problem,
                           const std::vector<VertexSet>& parts, int grow,
                           const SolveOptions& options = {});

/// Starting from singleton parts at the terminals, repeatedly augments the
/// smallest-index deficient part until every target size is met.
SolveReport solve(const Problem& problem, const SolveOptions& options = {});

/// With no bridge, no cascade edge and no free vertex adjacent to the
/// growing part, the last entry of every non-null cascade plus the terminal
/// of every null cascade form a cut of size k-1 separating the growing part
/// and all reservoirs from the rest of the graph. Its existence certifies
/// that the input was not k-connected.
CutWitness certify_cut(const Problem& problem, const Configuration& cfg,
                       const RankTable& ranks);

}  // namespace ckp
