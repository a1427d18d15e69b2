#pragma once

#include <optional>

#include "ckp/graph.hpp"

namespace ckp {

/// The pairwise Menger scan is embarrassingly parallel; the serial path is
/// the reference implementation and both must return identical reports.
enum class ExecMode { serial, parallel };

struct ConnectivityReport {
  bool k_connected = false;
  /// Set when the test failed merely because n <= k.
  bool too_few_vertices = false;
  /// Present when a concrete cut of size < k was found.
  std::optional<CutWitness> witness;
};

/// Decides whether g is k-connected: n >= k+1, minimum degree >= k, and for
/// every nonadjacent pair at least k internally vertex-disjoint paths
/// (unit-vertex-capacity maximum flow). On failure the report carries a
/// separating cut of size < k, or flags n <= k.
ConnectivityReport vertex_connectivity_at_least(
    const Graph& g, int k, ExecMode mode = ExecMode::parallel);

}  // namespace ckp
