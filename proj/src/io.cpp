#include "ckp/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ckp/errors.hpp"

namespace ckp {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line/column for the error message.
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw input_error("JSON parse error at line " + std::to_string(line) +
                      ", column " + std::to_string(col) + ": " + e.what());
  }
}

void expect_keys(const json& obj, const std::vector<std::string>& allowed,
                 const std::string& what) {
  if (!obj.is_object()) throw input_error(what + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw input_error(what + ": unknown field \"" + key + "\"");
  }
}

int as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer())
    throw input_error(what + " must be an integer");
  return v.get<int>();
}

std::vector<int> as_int_list(const json& v, const std::string& what) {
  if (!v.is_array()) throw input_error(what + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(as_int(x, what + " entry"));
  return out;
}

Graph graph_from_json(const json& doc) {
  expect_keys(doc, {"n", "edges"}, "graph document");
  if (!doc.contains("n") || !doc.contains("edges"))
    throw input_error("graph document needs \"n\" and \"edges\"");
  const int n = as_int(doc["n"], "n");
  if (!doc["edges"].is_array())
    throw input_error("edges must be an array of [u,v] pairs");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    const auto pair = as_int_list(e, "edge");
    if (pair.size() != 2) throw input_error("edge must be a [u,v] pair");
    if (pair[0] >= pair[1])
      throw input_error("edge [" + std::to_string(pair[0]) + "," +
                        std::to_string(pair[1]) +
                        "] violates the u < v invariant");
    edges.emplace_back(pair[0], pair[1]);
  }
  return Graph(n, std::move(edges));  // range/duplicate checks live here
}

json graph_to_json(const Graph& g) {
  json doc;
  doc["n"] = g.vertex_count();
  auto& edges = doc["edges"] = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return doc;
}

json potential_to_json(const PotentialVector& p) {
  json arr = json::array();
  for (int x : p) arr.push_back(x);
  return arr;
}

const char* part_color(int i) {
  static const char* palette[] = {"#a6cee3", "#b2df8a", "#fdbf6f", "#cab2d6",
                                  "#fb9a99", "#ffff99", "#b3b3cc", "#ccebc5"};
  return palette[i % 8];
}

const char* part_color_dark(int i) {
  static const char* palette[] = {"#3b83b8", "#4f9e3c", "#d98a12", "#8861b8",
                                  "#d6453f", "#b8b828", "#5c5c99", "#57a373"};
  return palette[i % 8];
}

}  // namespace

Graph parse_graph(const std::string& text) {
  return graph_from_json(parse_json(text));
}

std::string emit_graph(const Graph& g) { return graph_to_json(g).dump() + "\n"; }

ProblemDocument parse_problem_document(const std::string& text,
                                       const std::filesystem::path& base_dir) {
  const json doc = parse_json(text);
  expect_keys(doc, {"graph", "graph_path", "terminals", "sizes"},
              "problem document");
  if (!doc.contains("terminals") || !doc.contains("sizes"))
    throw input_error("problem document needs \"terminals\" and \"sizes\"");
  if (doc.contains("graph") == doc.contains("graph_path"))
    throw input_error(
        "problem document needs exactly one of \"graph\" and \"graph_path\"");

  ProblemDocument out;
  if (doc.contains("graph")) {
    out.graph = graph_from_json(doc["graph"]);
  } else {
    if (!doc["graph_path"].is_string())
      throw input_error("graph_path must be a string");
    const auto path = base_dir / doc["graph_path"].get<std::string>();
    out.graph = parse_graph(read_file(path));
  }
  out.terminals = as_int_list(doc["terminals"], "terminals");
  out.sizes = as_int_list(doc["sizes"], "sizes");
  return out;
}

std::vector<VertexSet> parse_partition(const std::string& text) {
  const json doc = parse_json(text);
  expect_keys(doc, {"parts"}, "partition document");
  if (!doc.contains("parts") || !doc["parts"].is_array())
    throw input_error("partition document needs a \"parts\" array");
  std::vector<VertexSet> parts;
  for (const auto& list : doc["parts"]) {
    const auto vertices = as_int_list(list, "part");
    VertexSet part;
    int prev = -1;
    for (int v : vertices) {
      if (v <= prev)
        throw input_error("part vertex lists must be strictly ascending");
      prev = v;
      part.insert(part.end(), v);
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

std::string emit_partition(const std::vector<VertexSet>& parts) {
  json doc;
  auto& arr = doc["parts"] = json::array();
  for (const auto& part : parts) {
    json list = json::array();
    for (int v : part) list.push_back(v);
    arr.push_back(std::move(list));
  }
  return doc.dump() + "\n";
}

std::string emit_cut_witness(const CutWitness& witness) {
  json doc;
  auto put = [&](const char* key, const VertexSet& s) {
    json list = json::array();
    for (int v : s) list.push_back(v);
    doc[key] = std::move(list);
  };
  put("cut", witness.cut);
  put("side_a", witness.side_a);
  put("side_b", witness.side_b);
  return doc.dump() + "\n";
}

std::string emit_trace_event(const TraceEvent& ev) {
  json doc;
  doc["step"] = ev.step;
  doc["augmentation"] = ev.augmentation;
  doc["kind"] = ev.kind;
  doc["grow"] = ev.grow;
  doc["potential_before"] = potential_to_json(ev.potential_before);
  doc["potential_after"] = potential_to_json(ev.potential_after);
  doc["comparison"] = ev.comparison;
  doc["part_sizes"] = ev.part_sizes;
  if (ev.bridge_a) {
    doc["bridge"] = {{"a", *ev.bridge_a},
                     {"b", *ev.bridge_b},
                     {"rank", *ev.bridge_rank}};
  }
  if (ev.next_min_bridge_rank)
    doc["next_min_bridge_rank"] = *ev.next_min_bridge_rank;
  return doc.dump();
}

TraceEvent parse_trace_event(const std::string& line) {
  const json doc = parse_json(line);
  expect_keys(doc,
              {"step", "augmentation", "kind", "grow", "potential_before",
               "potential_after", "comparison", "part_sizes", "bridge",
               "next_min_bridge_rank"},
              "trace event");
  TraceEvent ev;
  ev.step = doc.at("step").get<long long>();
  ev.augmentation = as_int(doc.at("augmentation"), "augmentation");
  ev.kind = doc.at("kind").get<std::string>();
  ev.grow = as_int(doc.at("grow"), "grow");
  for (int x : as_int_list(doc.at("potential_before"), "potential_before"))
    ev.potential_before.push_back(x);
  for (int x : as_int_list(doc.at("potential_after"), "potential_after"))
    ev.potential_after.push_back(x);
  ev.comparison = doc.at("comparison").get<std::string>();
  ev.part_sizes = as_int_list(doc.at("part_sizes"), "part_sizes");
  if (doc.contains("bridge")) {
    expect_keys(doc["bridge"], {"a", "b", "rank"}, "trace bridge");
    ev.bridge_a = as_int(doc["bridge"].at("a"), "bridge a");
    ev.bridge_b = as_int(doc["bridge"].at("b"), "bridge b");
    ev.bridge_rank = as_int(doc["bridge"].at("rank"), "bridge rank");
  }
  if (doc.contains("next_min_bridge_rank"))
    ev.next_min_bridge_rank =
        as_int(doc["next_min_bridge_rank"], "next_min_bridge_rank");
  return ev;
}

namespace {

void dot_header(std::ostringstream& out) {
  out << "graph G {\n";
  out << "  node [style=filled, fontname=\"Helvetica\"];\n";
}

void dot_plain_vertices(std::ostringstream& out, const Problem& pb,
                        const std::vector<VertexSet>& parts) {
  std::vector<int> owner(static_cast<size_t>(pb.graph.vertex_count()), -1);
  for (size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) owner[v] = static_cast<int>(i);
  for (int v = 0; v < pb.graph.vertex_count(); ++v) {
    out << "  " << v << " [";
    if (owner[v] >= 0) {
      out << "fillcolor=\"" << part_color(owner[v]) << "\"";
      if (pb.terminals[owner[v]] == v) out << ", shape=doublecircle";
    } else {
      out << "fillcolor=white";
    }
    out << "];\n";
  }
}

}  // namespace

std::string emit_dot(const Problem& problem,
                     const std::vector<VertexSet>& parts) {
  std::ostringstream out;
  dot_header(out);
  dot_plain_vertices(out, problem, parts);
  for (auto [u, v] : problem.graph.edges())
    out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot(const Problem& problem, const Configuration& cfg) {
  std::ostringstream out;
  dot_header(out);

  const RankTable ranks = compute_ranks(problem, cfg);
  const auto res = all_reservoirs(problem, cfg);
  VertexSet in_reservoir;
  for (const auto& [w, rw] : res) in_reservoir.insert(rw.begin(), rw.end());
  std::map<int, std::pair<int, size_t>> cascade_pos;  // vertex -> (part, idx)
  for (int i = 0; i < problem.k(); ++i)
    for (size_t j = 0; j < cfg.cascades[i].size(); ++j)
      cascade_pos[cfg.cascades[i][j]] = {i, j};

  for (int v = 0; v < problem.graph.vertex_count(); ++v) {
    const int i = part_containing(cfg, v);
    out << "  " << v << " [";
    if (i < 0) {
      out << "fillcolor=white";
    } else {
      // Reservoir members take the darker shade of their part's color.
      out << "fillcolor=\""
          << (in_reservoir.count(v) ? part_color_dark(i) : part_color(i))
          << "\"";
      if (problem.terminals[i] == v) out << ", shape=doublecircle";
    }
    if (auto it = cascade_pos.find(v); it != cascade_pos.end()) {
      out << ", label=\"" << v << "\\ncascade " << it->second.first << " #"
          << (it->second.second + 1);
      if (auto rit = ranks.find(v); rit != ranks.end())
        out << " rank " << rit->second;
      out << "\", shape=box";
    }
    out << "];\n";
  }

  std::set<std::pair<int, int>> bridge_edges;
  std::map<std::pair<int, int>, int> bridge_rank;
  for (const auto& br : find_bridges(problem, cfg, ranks)) {
    const std::pair<int, int> key{std::min(br.a, br.b), std::max(br.a, br.b)};
    bridge_edges.insert(key);
    bridge_rank[key] = br.rank;
  }
  for (auto [u, v] : problem.graph.edges()) {
    out << "  " << u << " -- " << v;
    if (bridge_edges.count({u, v}))
      out << " [color=red, penwidth=2, label=\"bridge r" << bridge_rank[{u, v}]
          << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path.string());
  out << text;
}

}  // namespace ckp
