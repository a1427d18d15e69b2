#include "ckp/gen.hpp"

#include <string>

#include "ckp/connectivity.hpp"
#include "ckp/errors.hpp"

namespace ckp {

Graph complete(int n) {
  if (n < 1) throw input_error("complete: n must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw input_error("cycle: n must be at least 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph circulant(int n, const std::vector<int>& offsets) {
  if (n < 3) throw input_error("circulant: n must be at least 3");
  std::set<int> seen;
  std::set<std::pair<int, int>> edges;
  for (int o : offsets) {
    if (o < 1 || o > n / 2)
      throw input_error("circulant: offset " + std::to_string(o) +
                        " outside 1..n/2");
    if (!seen.insert(o).second)
      throw input_error("circulant: repeated offset");
    for (int v = 0; v < n; ++v) {
      int u = v, w = (v + o) % n;
      if (u > w) std::swap(u, w);
      edges.emplace(u, w);
    }
  }
  return Graph(n, {edges.begin(), edges.end()});
}

Graph hypercube(int d) {
  if (d < 1 || d > 20) throw input_error("hypercube: dimension out of range");
  const int n = 1 << d;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int bit = 0; bit < d; ++bit) {
      const int u = v ^ (1 << bit);
      if (v < u) edges.emplace_back(v, u);
    }
  return Graph(n, std::move(edges));
}

RandomKConnected random_k_connected(int n, double edge_probability, int k,
                                    std::uint64_t seed) {
  if (!(edge_probability > 0.0) || edge_probability > 1.0)
    throw input_error("random_k_connected: p must be in (0, 1]");
  if (k < 1) throw input_error("random_k_connected: k must be >= 1");
  if (n < k + 1)
    throw input_error("random_k_connected: need n >= k + 1");

  SplitMix64 rng(seed);
  for (int attempt = 1; attempt <= 1000; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next_unit() < edge_probability) edges.emplace_back(u, v);
    Graph g(n, std::move(edges));
    if (vertex_connectivity_at_least(g, k).k_connected)
      return RandomKConnected{std::move(g), attempt};
  }
  throw generation_error(
      "random_k_connected: 1000 samples rejected (n=" + std::to_string(n) +
      ", p=" + std::to_string(edge_probability) + ", k=" + std::to_string(k) +
      "); try a larger edge probability");
}

}  // namespace ckp
