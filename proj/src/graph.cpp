#include "ckp/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ckp/errors.hpp"

namespace ckp {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw input_error("vertex count must be nonnegative");
  adj_.resize(static_cast<size_t>(n_));
  std::vector<std::pair<int, int>> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw input_error("edge endpoint out of range: (" + std::to_string(u) +
                        "," + std::to_string(v) + ")");
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    norm.emplace_back(u, v);
  }
  std::sort(norm.begin(), norm.end());
  if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
    throw input_error("duplicate edge");
  edges_ = std::move(norm);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

const std::vector<int>& Graph::adjacent(int v) const {
  if (v < 0 || v >= n_)
    throw input_error("vertex out of range: " + std::to_string(v));
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw input_error("vertex out of range");
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

VertexSet Graph::all_vertices() const {
  VertexSet all;
  for (int v = 0; v < n_; ++v) all.insert(all.end(), v);
  return all;
}

VertexSet neighbors(const Graph& g, int v) {
  const auto& a = g.adjacent(v);
  return VertexSet(a.begin(), a.end());
}

VertexSet component_of(const Graph& g, const VertexSet& s, int v) {
  VertexSet comp;
  if (!s.count(v)) return comp;
  std::deque<int> queue{v};
  comp.insert(v);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.adjacent(u)) {
      if (s.count(w) && !comp.count(w)) {
        comp.insert(w);
        queue.push_back(w);
      }
    }
  }
  return comp;
}

std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> comps;
  VertexSet seen;
  for (int v : s) {
    if (seen.count(v)) continue;
    VertexSet comp = component_of(g, s, v);
    seen.insert(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  return component_of(g, s, *s.begin()).size() == s.size();
}

bool separates(const Graph& g, const VertexSet& s, int v) {
  if (!s.count(v)) throw input_error("separates: vertex not in set");
  VertexSet rest = s;
  rest.erase(v);
  return induced_components(g, rest).size() >= 2;
}

bool adjacent_to_set(const Graph& g, int w, const VertexSet& s) {
  for (int u : g.adjacent(w))
    if (s.count(u)) return true;
  return false;
}

void check_cut_witness(const Graph& g, const CutWitness& w) {
  auto fail = [](const std::string& why) {
    throw internal_error("bad cut witness: " + why);
  };
  if (w.side_a.empty() || w.side_b.empty()) fail("a side is empty");
  for (int v : w.cut)
    if (w.side_a.count(v) || w.side_b.count(v)) fail("cut overlaps a side");
  for (int v : w.side_a)
    if (w.side_b.count(v)) fail("sides overlap");
  for (auto [u, v] : g.edges()) {
    bool ua = w.side_a.count(u), ub = w.side_b.count(u);
    bool va = w.side_a.count(v), vb = w.side_b.count(v);
    if ((ua && vb) || (ub && va)) fail("edge joins the two sides");
  }
}

}  // namespace ckp
