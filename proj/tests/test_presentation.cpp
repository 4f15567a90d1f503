#include <random>

#include "bb/builtin.hpp"
#include "bb/context.hpp"
#include "bb/raag_fill.hpp"
#include "doctest.h"

using namespace bb;

namespace {

int count_kind(const Presentation& p, RelKind kind) {
  int n = 0;
  for (int id = 0; id < p.relator_count(); ++id) {
    if (p.meta(id).kind == kind) ++n;
  }
  return n;
}

Word random_edge_word(const Context& ctx, std::mt19937& rng, size_t len) {
  std::uniform_int_distribution<size_t> pick(0, ctx.edge_gens.size() - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  Word w(ctx.alphabet.uid());
  for (size_t i = 0; i < len; ++i) {
    w.push_back({ctx.edge_gens[pick(rng)], sgn(rng) ? 1 : -1});
  }
  return w;
}

}  // namespace

TEST_CASE("edge presentation of the triangle complex") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  CHECK(ctx->edge_gens.size() == 6);
  CHECK(count_kind(ctx->ph, RelKind::edge_pair) == 6);
  CHECK(count_kind(ctx->ph, RelKind::triangle) == 6);
  CHECK(count_kind(ctx->ph, RelKind::anti_triangle) == 6);
  CHECK(ctx->ph.relator_count() == 18);
}

TEST_CASE("edge presentation of a tree complex has only edge pairs") {
  auto ctx = make_context(builtin_complex("PATH"), "u");
  CHECK(ctx->ph.relator_count() == 4);
  CHECK(count_kind(ctx->ph, RelKind::edge_pair) == 4);
}

TEST_CASE("edge presentation of the octahedron") {
  auto ctx = make_context(builtin_complex("OCTA"));
  CHECK(ctx->edge_gens.size() == 24);
  CHECK(count_kind(ctx->ph, RelKind::edge_pair) == 24);
  CHECK(count_kind(ctx->ph, RelKind::triangle) == 8 * 6);
  CHECK(count_kind(ctx->ph, RelKind::anti_triangle) == 8 * 6);
}

TEST_CASE("vertex presentation sizes") {
  auto tri = make_context(builtin_complex("TRI"));
  CHECK(tri->pa.relator_count() == 3);
  auto octa = make_context(builtin_complex("OCTA"));
  CHECK(octa->pa.relator_count() == 12);
}

TEST_CASE("extension defining words") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  int uv = ctx->alphabet.id("u>v");
  // from(e) = base: w_e is the bare edge.
  CHECK(w_e_word(*ctx, uv) == ctx->alphabet.parse_word("u>v"));
  int vw = ctx->alphabet.id("v>w");
  CHECK(w_e_word(*ctx, vw) == ctx->alphabet.parse_word("u>v v>w v>u"));
  long long l = ctx->tree.diameter;
  for (int e : ctx->edge_gens) {
    CHECK(static_cast<long long>(w_e_word(*ctx, e).size()) <= 2 * l + 1);
  }
}

TEST_CASE("extended presentation counts and null-homotopy of its relators") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  CHECK(ctx->pa_ext.relator_count() == 18 + 6);
  // Every relator embeds to the identity of the vertex group.
  for (int id = 0; id < ctx->pa_ext.relator_count(); ++id) {
    Word img = embed_to_vertices(*ctx, ctx->pa_ext.relator_word(id));
    CHECK(raag_trivial(*ctx, img));
  }
  auto path = make_context(builtin_complex("PATH"), "u");
  CHECK(count_kind(path->pa_ext, RelKind::s_relator) == 4);
  for (int id = 0; id < path->pa_ext.relator_count(); ++id) {
    CHECK(raag_trivial(*path, embed_to_vertices(*path, path->pa_ext.relator_word(id))));
  }
}

TEST_CASE("level-0 substitution is the literal identity") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    Word w = random_edge_word(*ctx, rng, 10);
    CHECK(phi_map(*ctx, w, 0) == w);
  }
}

TEST_CASE("level -1 image of an edge drops the middle power") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  int vw = ctx->alphabet.id("v>w");
  Word img = phi_map(*ctx, ctx->alphabet.letter_word(vw, 1), -1);
  Word expected = tree_power_path(*ctx, ctx->complex.vertex_index("u"),
                                  ctx->complex.vertex_index("v"), -1);
  expected.append(tree_power_path(*ctx, ctx->complex.vertex_index("w"),
                                  ctx->complex.vertex_index("u"), -1));
  CHECK(img == expected);
}

TEST_CASE("substitution is a monoid homomorphism commuting with inversion") {
  auto ctx = make_context(builtin_complex("OCTA"));
  std::mt19937 rng(5);
  for (long long n : {-4, -1, 0, 1, 3}) {
    for (int i = 0; i < 10; ++i) {
      Word u = random_edge_word(*ctx, rng, 6);
      Word v = random_edge_word(*ctx, rng, 6);
      CHECK(phi_map(*ctx, concat(u, v), n) == concat(phi_map(*ctx, u, n), phi_map(*ctx, v, n)));
      CHECK(phi_map(*ctx, u.inverse(), n) == phi_map(*ctx, u, n).inverse());
    }
  }
}

TEST_CASE("substitution length bound") {
  auto ctx = make_context(builtin_complex("GRID2"));
  long long l = ctx->tree.diameter;
  std::mt19937 rng(9);
  for (long long n : {-6, -2, 1, 4, 6}) {
    long long an = n < 0 ? -n : n;
    for (int i = 0; i < 10; ++i) {
      Word w = random_edge_word(*ctx, rng, 8);
      Word img = phi_map(*ctx, w, n);
      CHECK(static_cast<long long>(img.size()) <=
            (2 * l * an + an + 1) * static_cast<long long>(w.size()));
    }
  }
}

TEST_CASE("substitution rejects the stable letter") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  Word w(ctx->alphabet.uid());
  w.push_back({ctx->stable_gen, 1});
  CHECK_THROWS_AS(phi_map(*ctx, w, 2), Error);
}

TEST_CASE("level-k image conjugates by the base vertex in the vertex group") {
  // embed(phi_k(w)) equals q^k embed(w) q^-k for all |k| <= 6.
  for (const char* name : {"TRI", "OCTA", "GRID2"}) {
    auto ctx = make_context(builtin_complex(name));
    std::mt19937 rng(21);
    for (long long k = -6; k <= 6; ++k) {
      for (int i = 0; i < 4; ++i) {
        Word w = random_edge_word(*ctx, rng, 5);
        Word lhs = embed_to_vertices(*ctx, phi_map(*ctx, w, k));
        Word rhs = ctx->alphabet.power(ctx->tree.base, k);
        rhs.append(embed_to_vertices(*ctx, w));
        rhs.append(ctx->alphabet.power(ctx->tree.base, -k));
        CHECK(raag_normal_form(*ctx, lhs) == raag_normal_form(*ctx, rhs));
      }
    }
  }
}

TEST_CASE("indexed relators regenerate deterministically and embed trivially") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  auto cycles = directed_triangle_cycles(*ctx);
  for (long long n = -8; n <= 8; ++n) {
    for (int e : ctx->edge_gens) {
      IndexedKey kp{IndexedKind::edge_pair, {e, -1, -1}, n};
      IndexedKey ks{IndexedKind::s_relator, {e, -1, -1}, n};
      for (const IndexedKey& key : {kp, ks}) {
        IndexedRelator r1 = make_indexed_relator(*ctx, key);
        IndexedRelator r2 = make_indexed_relator(*ctx, key);
        CHECK(r1.word == r2.word);
        CHECK(r1.index == (n < 0 ? -n : n));
        CHECK(raag_trivial(*ctx, embed_to_vertices(*ctx, r1.word)));
      }
    }
    for (const auto& cyc : cycles) {
      for (IndexedKind kind : {IndexedKind::triangle, IndexedKind::anti_triangle}) {
        IndexedRelator r = make_indexed_relator(*ctx, {kind, cyc, n});
        CHECK(raag_trivial(*ctx, embed_to_vertices(*ctx, r.word)));
      }
    }
  }
}

TEST_CASE("level-0 indexed relators are the finite relators") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  int e = ctx->alphabet.id("u>v");
  IndexedRelator tri = make_indexed_relator(
      *ctx, {IndexedKind::triangle, directed_triangle_cycles(*ctx)[0], 0});
  CHECK(ctx->ph.find(tri.word).has_value());
  CHECK(tri.index == 0);
  // s-relator at level 0 is the level-1 edge image times the inverse
  // defining word.
  IndexedRelator s = make_indexed_relator(*ctx, {IndexedKind::s_relator, {e, -1, -1}, 0});
  Word expected = phi_map(*ctx, ctx->alphabet.letter_word(e, 1), 1);
  expected.append(w_e_word(*ctx, e).inverse());
  CHECK(s.word == expected);
}

TEST_CASE("bound polynomial coefficients and monotonicity") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  prepare_fillings(*ctx, SearchBudget{});
  const ConstantsRecord& c = ctx->constants;
  CHECK(c.tree_diameter == 2);
  CHECK(c.k_constant == 3);
  CHECK(c.rarea_a == 13);
  CHECK(c.rarea_b == 36);
  CHECK(c.rarea_c == 10);
  CHECK(c.rarea_bound(0) == c.tree_diameter + c.k_constant + 5);
  for (long long n = 0; n < 40; ++n) {
    CHECK(c.rarea_bound(n + 1) >= c.rarea_bound(n));
    CHECK(c.dehn_bound(n + 1) >= c.dehn_bound(n));
  }
}
