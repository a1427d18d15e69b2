#pragma once

#include <utility>
#include <set>
#include <vector>

namespace ckp {

using Vertex = int;
using VertexSet = std::set<Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// all queries are const and safe to run concurrently.
class Graph {
 public:
  Graph() = default;

  /// Normalizes endpoints to u < v; rejects self-loops, duplicates and
  /// out-of-range endpoints.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }

  /// Edges as sorted (u, v) pairs with u < v.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Sorted adjacency list of v.
  const std::vector<int>& adjacent(int v) const;

  bool has_edge(int u, int v) const;

  VertexSet all_vertices() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

/// A vertex cut together with the two separated sides. No edge joins
/// side_a to side_b, and both sides are nonempty.
struct CutWitness {
  VertexSet cut;
  VertexSet side_a;
  VertexSet side_b;
};

VertexSet neighbors(const Graph& g, int v);

/// Connected components of the subgraph induced on s, ordered by their
/// minimum vertex.
std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s);

/// The component of v inside the subgraph induced on s; empty if v is not
/// in s.
VertexSet component_of(const Graph& g, const VertexSet& s, int v);

/// Empty sets are not connected, singletons are.
bool is_connected(const Graph& g, const VertexSet& s);

/// True iff deleting v disconnects the subgraph induced on s.
bool separates(const Graph& g, const VertexSet& s, int v);

/// True iff w has at least one neighbor inside s.
bool adjacent_to_set(const Graph& g, int w, const VertexSet& s);

/// Throws internal_error unless the witness satisfies the CutWitness
/// invariants on g.
void check_cut_witness(const Graph& g, const CutWitness& w);

}  // namespace ckp
