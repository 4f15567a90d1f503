#include "bb/builtin.hpp"

#include <charconv>

#include "bb/raag_fill.hpp"

namespace bb {

namespace {

FlagComplex make_tri() {
  return flag_from_graph({"u", "v", "w"}, {{"u", "v"}, {"u", "w"}, {"v", "w"}}, "u");
}

FlagComplex make_path() {
  return flag_from_graph({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}, "u");
}

FlagComplex make_octa() {
  // Octahedron: vertices +-x, +-y, +-z; all pairs except antipodes.
  std::vector<std::string> vs = {"xm", "xp", "ym", "yp", "zm", "zp"};
  std::vector<std::pair<std::string, std::string>> es;
  auto anti = [](const std::string& a, const std::string& b) {
    return a[0] == b[0];  // same axis
  };
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (!anti(vs[i], vs[j])) es.push_back({vs[i], vs[j]});
    }
  }
  return flag_from_graph(vs, es, "xm");
}

std::string grid_vertex(int i, int j) {
  return "v" + std::to_string(i) + std::to_string(j);
}

FlagComplex make_grid(int m) {
  if (m < 1 || m > 9) throw Error("grid size must be between 1 and 9");
  std::vector<std::string> vs;
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      vs.push_back(grid_vertex(i, j));
      if (i < m) es.push_back({grid_vertex(i, j), grid_vertex(i + 1, j)});
      if (j < m) es.push_back({grid_vertex(i, j), grid_vertex(i, j + 1)});
      if (i < m && j < m) es.push_back({grid_vertex(i, j), grid_vertex(i + 1, j + 1)});
    }
  }
  return flag_from_graph(vs, es, "v00");
}

FlagComplex make_annulus() {
  // Square annulus: inner cycle i0..i3, outer cycle o0..o3, spokes and
  // uniform diagonals i_k to o_{k+1}. No 3-clique touches the hole.
  std::vector<std::string> vs;
  std::vector<std::pair<std::string, std::string>> es;
  auto iv = [](int k) { return "i" + std::to_string(k % 4); };
  auto ov = [](int k) { return "o" + std::to_string(k % 4); };
  for (int k = 0; k < 4; ++k) {
    vs.push_back(iv(k));
    vs.push_back(ov(k));
  }
  for (int k = 0; k < 4; ++k) {
    es.push_back({iv(k), iv(k + 1)});
    es.push_back({ov(k), ov(k + 1)});
    es.push_back({iv(k), ov(k)});
    es.push_back({iv(k), ov(k + 1)});
  }
  return flag_from_graph(vs, es, "i0");
}

}  // namespace

FlagComplex builtin_complex(const std::string& name) {
  if (name == "TRI") return make_tri();
  if (name == "PATH") return make_path();
  if (name == "OCTA") return make_octa();
  if (name == "ANNULUS") return make_annulus();
  if (name.rfind("GRID", 0) == 0) {
    int m = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 4, name.data() + name.size(), m);
    if (ec == std::errc() && ptr == name.data() + name.size()) return make_grid(m);
  }
  throw Error("unknown builtin complex: " + name);
}

std::vector<std::string> builtin_complex_names() {
  return {"TRI", "PATH", "OCTA", "GRID1", "GRID2", "GRID3", "ANNULUS"};
}

FlagComplex resolve_complex(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_complex(spec.substr(8));
  return load_complex(spec);
}

Word brady_word(const Context& ctx, int k, int a, int b, int c, int d) {
  for (int e : {a, b, c, d}) {
    if (ctx.alphabet.info(e).kind != GenKind::edge) {
      throw Error("benchmark family labels must be directed edges");
    }
  }
  Word w(ctx.alphabet.uid());
  for (int i = 0; i < k; ++i) {
    w.push_back({d, 1});
    w.push_back({a, 1});
  }
  for (int i = 0; i < k; ++i) {
    w.push_back({b, -1});
    w.push_back({c, -1});
  }
  for (int i = 0; i < k; ++i) {
    w.push_back({a, 1});
    w.push_back({d, 1});
  }
  for (int i = 0; i < k; ++i) {
    w.push_back({c, -1});
    w.push_back({b, -1});
  }
  if (!raag_trivial(ctx, embed_to_vertices(ctx, w))) {
    throw NotNullHomotopic("benchmark family labels do not give a null-homotopic word");
  }
  return w;
}

BradyEdges default_brady_edges(const Context& ctx) {
  // Two triangles sharing the diagonal towards the base corner: the two
  // two-edge routes commute and agree, which makes the family null-homotopic.
  const FlagComplex& cx = ctx.complex;
  for (const auto& tri : cx.triangles) {
    // Look for vertices p, r, s, t with triangles {p,r,t} and {p,s,t}.
    int p = tri[0], r = tri[1], t = tri[2];
    for (int s : cx.adjacency[static_cast<size_t>(p)]) {
      if (s == r || s == t) continue;
      if (cx.has_edge(s, t)) {
        return {ctx.edge_gen(r, t), ctx.edge_gen(s, t), ctx.edge_gen(p, s), ctx.edge_gen(p, r)};
      }
    }
  }
  throw Error("complex has no pair of triangles sharing an edge");
}

}  // namespace bb
