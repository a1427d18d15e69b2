#pragma once

#include <vector>

#include "ckp/graph.hpp"

namespace ckp {

/// A partition instance: k distinct terminals and k positive target sizes
/// on a host graph. Terminal i must end up inside part i, and part i must
/// reach exactly sizes[i] vertices.
struct Problem {
  Graph graph;
  std::vector<int> terminals;
  std::vector<int> sizes;

  int k() const { return static_cast<int>(terminals.size()); }
};

/// Validates k >= 2, distinct in-range terminals, positive sizes and
/// sum(sizes) <= n. Throws input_error otherwise.
Problem make_problem(Graph graph, std::vector<int> terminals,
                     std::vector<int> sizes);

}  // namespace ckp
