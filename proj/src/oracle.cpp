#include "ckp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>

#include "ckp/errors.hpp"

// Everything below works off the raw adjacency lists on purpose: the point
// of the oracle is to agree with the solver without sharing its machinery.

namespace ckp {

namespace {

std::string set_to_string(const VertexSet& s) {
  std::string out = "{";
  for (int v : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

// BFS connectivity over an explicit vertex set, local to the verifier.
bool set_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  VertexSet seen{*s.begin()};
  std::deque<int> queue{*s.begin()};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.adjacent(u)) {
      if (s.count(w) && !seen.count(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
    }
  }
  return seen.size() == s.size();
}

using Mask = std::uint32_t;

// Connectivity of the vertices in `mask` using bit-parallel flooding.
bool mask_connected(const std::vector<Mask>& adj, Mask mask) {
  if (mask == 0) return false;
  Mask frontier = mask & (~mask + 1);  // lowest set bit
  Mask seen = frontier;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f;) {
      const int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj[v] & mask;
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == mask;
}

struct PartitionSearch {
  const Problem& pb;
  std::vector<Mask> adj;
  std::vector<Mask> parts;
  std::vector<Mask> forbidden;
  Mask assigned = 0;

  explicit PartitionSearch(const Problem& problem) : pb(problem) {
    const int n = pb.graph.vertex_count();
    adj.assign(static_cast<size_t>(n), 0);
    for (auto [u, v] : pb.graph.edges()) {
      adj[u] |= Mask{1} << v;
      adj[v] |= Mask{1} << u;
    }
    parts.resize(pb.terminals.size());
    forbidden.assign(pb.terminals.size(), 0);
    for (size_t i = 0; i < pb.terminals.size(); ++i) {
      parts[i] = Mask{1} << pb.terminals[i];
      assigned |= parts[i];
    }
  }

  Mask frontier(size_t i) const {
    Mask f = 0;
    for (Mask p = parts[i]; p;) {
      const int v = std::countr_zero(p);
      p &= p - 1;
      f |= adj[v];
    }
    return f & ~assigned & ~forbidden[i];
  }

  bool search(size_t i) {
    if (i == parts.size()) return true;
    if (std::popcount(parts[i]) == pb.sizes[i]) return search(i + 1);
    const Mask f = frontier(i);
    if (f == 0) return false;
    const int c = std::countr_zero(f);  // lowest-numbered candidate
    // Take c into part i...
    parts[i] |= Mask{1} << c;
    assigned |= Mask{1} << c;
    if (search(i)) return true;
    parts[i] &= ~(Mask{1} << c);
    assigned &= ~(Mask{1} << c);
    // ...or bar it from part i for good.
    forbidden[i] |= Mask{1} << c;
    const bool found = search(i);
    forbidden[i] &= ~(Mask{1} << c);
    return found;
  }
};

}  // namespace

VerifyReport verify_partition(const Problem& problem,
                              const std::vector<VertexSet>& parts) {
  VerifyReport report;
  auto flag = [&](const std::string& code, const std::string& detail) {
    report.violations.emplace_back(code, detail);
  };
  const int n = problem.graph.vertex_count();
  const size_t k = problem.terminals.size();
  if (parts.size() != k)
    flag("SIZE", "expected " + std::to_string(k) + " parts, got " +
                     std::to_string(parts.size()));
  for (size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i])
      if (v < 0 || v >= n)
        throw input_error("partition vertex out of range: " +
                          std::to_string(v));

  const size_t common = std::min(parts.size(), k);
  long long target_total = 0;
  for (int s : problem.sizes) target_total += s;

  for (size_t i = 0; i < common; ++i) {
    if (static_cast<int>(parts[i].size()) != problem.sizes[i])
      flag("SIZE", "part " + std::to_string(i) + " has " +
                       std::to_string(parts[i].size()) + " vertices, want " +
                       std::to_string(problem.sizes[i]));
    if (!parts[i].count(problem.terminals[i]))
      flag("TERMINAL", "part " + std::to_string(i) + " misses terminal " +
                           std::to_string(problem.terminals[i]));
    if (!set_connected(problem.graph, parts[i]))
      flag("CONNECTED",
           "part " + std::to_string(i) + " = " + set_to_string(parts[i]) +
               " is not connected");
  }
  std::vector<int> owner(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < parts.size(); ++i) {
    for (int v : parts[i]) {
      if (owner[v] != -1)
        flag("DISJOINT", "vertex " + std::to_string(v) + " appears in parts " +
                             std::to_string(owner[v]) + " and " +
                             std::to_string(i));
      owner[v] = static_cast<int>(i);
    }
  }
  if (target_total == n) {
    for (int v = 0; v < n; ++v)
      if (owner[v] == -1)
        flag("COVER", "vertex " + std::to_string(v) + " is unassigned");
  }
  report.ok = report.violations.empty();
  return report;
}

std::optional<std::vector<VertexSet>> brute_force_partition(
    const Problem& problem) {
  const int n = problem.graph.vertex_count();
  if (n > 14)
    throw input_error("brute_force_partition is limited to n <= 14");

  PartitionSearch search(problem);
  // Terminal sizes might already satisfy size-1 parts; search handles it.
  if (!search.search(0)) return std::nullopt;

  std::vector<VertexSet> parts(problem.terminals.size());
  for (size_t i = 0; i < parts.size(); ++i) {
    for (Mask p = search.parts[i]; p;) {
      const int v = std::countr_zero(p);
      p &= p - 1;
      parts[i].insert(v);
    }
  }
  const auto verdict = verify_partition(problem, parts);
  if (!verdict.ok)
    throw internal_error("oracle built a partition that fails verification");
  return parts;
}

int brute_force_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 10) throw input_error("brute_force_connectivity is limited to n <= 10");
  if (n == 0) throw input_error("brute_force_connectivity needs vertices");

  std::vector<Mask> adj(static_cast<size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  int best = n - 1;  // complete-graph convention
  for (Mask cut = 0; cut <= all; ++cut) {
    const int size = std::popcount(cut);
    if (size >= best) continue;
    const Mask rest = all & ~cut;
    if (std::popcount(rest) < 2) continue;
    if (!mask_connected(adj, rest)) best = size;
  }
  return best;
}

}  // namespace ckp
