#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ckp/config.hpp"
#include "ckp/moves.hpp"
#include "ckp/problem.hpp"

namespace ckp {

/// Raw problem document; callers decide what to do with k == 1 before the
/// core (which requires k >= 2) sees it.
struct ProblemDocument {
  Graph graph;
  std::vector<int> terminals;
  std::vector<int> sizes;
};

/// {"edges": [[u,v],...], "n": N} with u < v and ascending edge order.
/// Unknown fields and invariant violations are rejected with the offending
/// invariant named.
Graph parse_graph(const std::string& text);
std::string emit_graph(const Graph& g);

/// {"graph": {...} | "graph_path": "file", "terminals": [...], "sizes": [...]}.
/// graph_path is resolved relative to base_dir.
ProblemDocument parse_problem_document(const std::string& text,
                                       const std::filesystem::path& base_dir);

/// {"parts": [[...], ...]} with each part ascending. Disjointness and the
/// other semantic properties are the verifier's job, not the parser's.
std::vector<VertexSet> parse_partition(const std::string& text);
std::string emit_partition(const std::vector<VertexSet>& parts);

std::string emit_cut_witness(const CutWitness& witness);

/// One JSON object per line; parse_trace_event inverts emit_trace_event.
std::string emit_trace_event(const TraceEvent& ev);
TraceEvent parse_trace_event(const std::string& line);

/// GraphViz rendering: parts colored, reservoir vertices shaded, cascade
/// order and ranks in the labels, bridges highlighted.
std::string emit_dot(const Problem& problem,
                     const std::vector<VertexSet>& parts);
std::string emit_dot(const Problem& problem, const Configuration& cfg);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace ckp
