#pragma once

#include <cstdint>
#include <vector>

#include "ckp/graph.hpp"

namespace ckp {

/// Fixed, documented pseudorandom generator (splitmix64) so generated
/// corpora are bit-identical across platforms and implementations.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

Graph complete(int n);
Graph cycle(int n);

/// Vertices 0..n-1 with edges {i, i+o mod n} for each offset o. Offsets must
/// be distinct values in 1..n/2.
Graph circulant(int n, const std::vector<int>& offsets);

/// Vertex v is the bit pattern of its coordinates; edges join patterns at
/// Hamming distance one.
Graph hypercube(int d);

struct RandomKConnected {
  Graph graph;
  int attempts = 0;
};

/// Erdos-Renyi sampling (each pair drawn in lexicographic order from one
/// splitmix64 stream), rejected until the graph is k-connected. Gives up
/// after 1000 attempts with a generation_error suggesting a larger p.
RandomKConnected random_k_connected(int n, double edge_probability, int k,
                                    std::uint64_t seed);

}  // namespace ckp
