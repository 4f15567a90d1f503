#include "bb/complex.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bb/word.hpp"
#include "json.hpp"

namespace bb {

int FlagComplex::vertex_index(const std::string& name) const {
  auto it = std::lower_bound(vertex_names.begin(), vertex_names.end(), name);
  if (it == vertex_names.end() || *it != name) throw Error("unknown vertex: " + name);
  return static_cast<int>(it - vertex_names.begin());
}

bool FlagComplex::has_edge(int a, int b) const {
  const auto& adj = adjacency[static_cast<size_t>(a)];
  return std::binary_search(adj.begin(), adj.end(), b);
}

FlagComplex flag_from_graph(std::vector<std::string> vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges,
                            std::optional<std::string> base_hint) {
  FlagComplex cx;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  cx.vertex_names = std::move(vertices);
  int n = cx.vertex_count();
  if (n == 0) throw Error("complex has no vertices");
  cx.adjacency.assign(static_cast<size_t>(n), {});

  std::vector<std::pair<int, int>> es;
  for (const auto& [u, v] : edges) {
    int a = cx.vertex_index(u);
    int b = cx.vertex_index(v);
    if (a == b) throw Error("edge with equal endpoints: " + u);
    if (a > b) std::swap(a, b);
    es.emplace_back(a, b);
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  cx.edges = std::move(es);
  for (const auto& [a, b] : cx.edges) {
    cx.adjacency[static_cast<size_t>(a)].push_back(b);
    cx.adjacency[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& adj : cx.adjacency) std::sort(adj.begin(), adj.end());

  // Connectivity.
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t i = 0; i < queue.size(); ++i) {
    for (int w : cx.adjacency[static_cast<size_t>(queue[i])]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error("complex 1-skeleton is not connected");
  }

  // Triangles = 3-cliques.
  for (const auto& [a, b] : cx.edges) {
    const auto& adj_a = cx.adjacency[static_cast<size_t>(a)];
    for (int c : adj_a) {
      if (c > b && cx.has_edge(b, c)) cx.triangles.push_back({a, b, c});
    }
  }
  std::sort(cx.triangles.begin(), cx.triangles.end());

  cx.base_hint = std::move(base_hint);
  if (cx.base_hint) cx.vertex_index(*cx.base_hint);  // validate
  return cx;
}

FlagComplex parse_complex_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error("edge entries must be pairs");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  std::optional<std::string> base;
  if (j.contains("base")) base = j.at("base").get<std::string>();
  return flag_from_graph(std::move(vertices), edges, std::move(base));
}

FlagComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open complex file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_complex_text(ss.str());
}

std::string complex_hash(const FlagComplex& cx, int base_vertex) {
  std::string canon;
  for (const auto& v : cx.vertex_names) {
    canon += v;
    canon += ';';
  }
  canon += '|';
  for (const auto& [a, b] : cx.edges) {
    canon += cx.vertex_names[static_cast<size_t>(a)];
    canon += '-';
    canon += cx.vertex_names[static_cast<size_t>(b)];
    canon += ';';
  }
  canon += '|';
  canon += cx.vertex_names[static_cast<size_t>(base_vertex)];
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) h = (h ^ c) * 1099511628211ull;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace bb
