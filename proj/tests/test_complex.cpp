#include "bb/builtin.hpp"
#include "bb/complex.hpp"
#include "bb/context.hpp"
#include "doctest.h"

using namespace bb;

TEST_CASE("flag condition: triangles are exactly the 3-cliques") {
  FlagComplex k3 = flag_from_graph({"u", "v", "w"}, {{"u", "v"}, {"u", "w"}, {"v", "w"}});
  CHECK(k3.triangles.size() == 1);

  FlagComplex path = flag_from_graph({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}});
  CHECK(path.triangles.empty());

  FlagComplex octa = builtin_complex("OCTA");
  CHECK(octa.vertex_count() == 6);
  CHECK(octa.edges.size() == 12);
  CHECK(octa.triangles.size() == 8);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(flag_from_graph({"u", "v"}, {{"u", "x"}}), Error);
  CHECK_THROWS_AS(flag_from_graph({"u", "v", "w"}, {{"u", "v"}}), Error);  // disconnected
}

TEST_CASE("complex file format") {
  FlagComplex cx = parse_complex_text(
      R"({"vertices": ["u", "v", "w"], "edges": [["u","v"],["v","w"],["u","w"]], "base": "v"})");
  CHECK(cx.vertex_count() == 3);
  CHECK(cx.triangles.size() == 1);
  REQUIRE(cx.base_hint.has_value());
  CHECK(*cx.base_hint == "v");
  CHECK_THROWS_AS(parse_complex_text("{\"vertices\": []}"), std::exception);
}

TEST_CASE("hash is stable across rebuilds and distinguishes bases") {
  FlagComplex a = builtin_complex("TRI");
  FlagComplex b = builtin_complex("TRI");
  CHECK(complex_hash(a, 0) == complex_hash(b, 0));
  CHECK(complex_hash(a, 0) != complex_hash(a, 1));
}

TEST_CASE("spanning tree of the triangle complex from u") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  CHECK(ctx->tree.base == ctx->complex.vertex_index("u"));
  CHECK(ctx->tree.tree_edges.size() == 2);
  CHECK(ctx->tree.is_tree_edge(ctx->complex.vertex_index("u"), ctx->complex.vertex_index("v")));
  CHECK(ctx->tree.is_tree_edge(ctx->complex.vertex_index("u"), ctx->complex.vertex_index("w")));
  CHECK(ctx->tree.diameter == 2);

  // Exhaustive: every pair distance at most 2, realized by v-w.
  int v = ctx->complex.vertex_index("v"), w = ctx->complex.vertex_index("w");
  CHECK(ctx->tree.dist[static_cast<size_t>(v)][static_cast<size_t>(w)] == 2);
}

TEST_CASE("path complex tree is the whole graph") {
  auto ctx = make_context(builtin_complex("PATH"), "u");
  CHECK(ctx->tree.tree_edges.size() == ctx->complex.edges.size());
  CHECK(ctx->tree.diameter == 2);
}

TEST_CASE("grid tree diameter matches a pairwise scan") {
  auto ctx = make_context(builtin_complex("GRID2"));
  long long best = 0;
  int n = ctx->complex.vertex_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      best = std::max(best, static_cast<long long>(
                                ctx->tree.dist[static_cast<size_t>(a)][static_cast<size_t>(b)]));
    }
  }
  CHECK(ctx->tree.diameter == best);
}

TEST_CASE("tree power paths") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  int u = ctx->complex.vertex_index("u");
  int v = ctx->complex.vertex_index("v");
  int w = ctx->complex.vertex_index("w");

  for (int a : {u, v, w}) {
    for (int b : {u, v, w}) {
      CHECK(tree_power_path(*ctx, a, b, 0).empty());
    }
  }
  CHECK(tree_power_path(*ctx, u, u, 5).empty());
  CHECK(tree_power_path(*ctx, u, w, 1) == ctx->alphabet.parse_word("u>w"));
  // v to w goes through the root.
  CHECK(tree_power_path(*ctx, v, w, 1) == ctx->alphabet.parse_word("v>u u>w"));
  CHECK(tree_power_path(*ctx, v, w, 2) == ctx->alphabet.parse_word("v>u v>u u>w u>w"));
  CHECK(tree_power_path(*ctx, v, w, -2) ==
        ctx->alphabet.parse_word("v>u^-1 v>u^-1 u>w^-1 u>w^-1"));

  // |p_n(u,v)| = |n| Dist(u,v), and the letterwise flip of the reverse path
  // is the inverse word.
  for (int n : {-3, -1, 0, 1, 2, 5}) {
    for (int a : {u, v, w}) {
      for (int b : {u, v, w}) {
        Word p = tree_power_path(*ctx, a, b, n);
        long long dist = ctx->tree.dist[static_cast<size_t>(a)][static_cast<size_t>(b)];
        CHECK(static_cast<long long>(p.size()) == (n < 0 ? -n : n) * dist);
        Word q = tree_power_path(*ctx, b, a, n);
        Word flipped(ctx->alphabet.uid());
        for (const Letter& l : q.letters) {
          flipped.push_back({ctx->alphabet.reverse_edge(l.gen), -l.sign});
        }
        CHECK(flipped == p.inverse());
      }
    }
  }
}

TEST_CASE("annulus control has the expected shape") {
  FlagComplex ann = builtin_complex("ANNULUS");
  CHECK(ann.vertex_count() == 8);
  CHECK(ann.edges.size() == 16);
  CHECK(ann.triangles.size() == 8);
  // Euler characteristic 8 - 16 + 8 = 0: an annulus, not a disc.
}

TEST_CASE("grid1 is two triangles sharing a diagonal") {
  FlagComplex g = builtin_complex("GRID1");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges.size() == 5);
  CHECK(g.triangles.size() == 2);
}
