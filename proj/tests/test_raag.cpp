#include <map>
#include <random>

#include "bb/builtin.hpp"
#include "bb/context.hpp"
#include "bb/expanders.hpp"
#include "bb/raag_fill.hpp"
#include "doctest.h"

using namespace bb;

namespace {

Word random_vertex_word(const Context& ctx, std::mt19937& rng, size_t len) {
  std::uniform_int_distribution<int> pick(0, ctx.complex.vertex_count() - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  Word w(ctx.alphabet.uid());
  for (size_t i = 0; i < len; ++i) w.push_back({pick(rng), sgn(rng) ? 1 : -1});
  return w;
}

// Random null-homotopic vertex word: a reduced product of conjugated
// commutator relators.
Word random_trivial_vertex_word(const Context& ctx, std::mt19937& rng, int factors,
                                size_t conj_len) {
  std::uniform_int_distribution<int> rel(0, ctx.pa.relator_count() - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  Word w(ctx.alphabet.uid());
  for (int i = 0; i < factors; ++i) {
    Word x = random_vertex_word(ctx, rng, conj_len);
    Word r = ctx.pa.relator_word(rel(rng));
    if (sgn(rng)) r = r.inverse();
    w.append(x);
    w.append(r);
    w.append_inverse(x);
  }
  return free_reduce(w);
}

// Brute-force equality oracle: identify words by breadth-first exploration
// of the ball of the group's Cayley graph, folding commutation relations.
struct CayleyBall {
  const Context& ctx;
  std::map<std::vector<int>, int> canon;  // canonical shortlex geodesic -> id

  explicit CayleyBall(const Context& c) : ctx(c) {}

  // Normal form via exhaustive rewriting within a ball: represent group
  // elements by the shortlex-least word reachable by free reduction and
  // adjacent commuting swaps.
  std::vector<int> least_form(const Word& w) {
    auto encode = [](const Word& v) {
      std::vector<int> out;
      for (const Letter& l : v.letters) out.push_back(l.gen * 2 + (l.sign > 0 ? 0 : 1));
      return out;
    };
    std::vector<Word> frontier{free_reduce(w)};
    std::map<std::vector<int>, bool> seen{{encode(frontier[0]), true}};
    std::vector<int> best = encode(frontier[0]);
    auto better = [](const std::vector<int>& a, const std::vector<int>& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    };
    for (size_t head = 0; head < frontier.size(); ++head) {
      Word cur = frontier[head];
      for (size_t i = 0; i + 1 < cur.size(); ++i) {
        if (cur[i].gen != cur[i + 1].gen && ctx.complex.has_edge(cur[i].gen, cur[i + 1].gen)) {
          Word next = cur;
          std::swap(next.letters[i], next.letters[i + 1]);
          next = free_reduce(next);
          auto code = encode(next);
          if (seen.emplace(code, true).second) {
            if (better(code, best)) best = code;
            frontier.push_back(next);
          }
        }
      }
    }
    return best;
  }
};

}  // namespace

TEST_CASE("embedding images") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  CHECK(embed_to_vertices(*ctx, ctx->alphabet.parse_word("u>v")) ==
        ctx->alphabet.parse_word("u v^-1"));
  CHECK(embed_to_vertices(*ctx, ctx->alphabet.parse_word("v>u")) ==
        ctx->alphabet.parse_word("v u^-1"));
  // Edge pair maps to a freely trivial word.
  Word img = embed_to_vertices(*ctx, ctx->alphabet.parse_word("u>v v>u"));
  CHECK(free_reduce(img).empty());
  // Stable letter maps to the base.
  Word timg = embed_to_vertices(*ctx, ctx->alphabet.parse_word("@t @t"));
  CHECK(timg == ctx->alphabet.parse_word("u u"));
}

TEST_CASE("normal form basics") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  // Commutator of adjacent vertices vanishes.
  CHECK(raag_normal_form(*ctx, ctx->alphabet.parse_word("u v u^-1 v^-1")).empty());
  CHECK(raag_trivial(*ctx, ctx->alphabet.parse_word("u v u^-1 v^-1")));

  auto path = make_context(builtin_complex("PATH"), "u");
  // u and w are not joined in the path complex: the commutator survives.
  Word c = path->alphabet.parse_word("u w u^-1 w^-1");
  CHECK_FALSE(raag_normal_form(*path, c).empty());
  CHECK_FALSE(raag_trivial(*path, c));
}

TEST_CASE("normal form agrees with the exhaustive commutation-class oracle") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  CayleyBall oracle(*ctx);
  // All words of length <= 6 would be 6^6; sample the full length-4 ball and
  // random length-6 words instead, plus every pair comparison by classes.
  std::mt19937 rng(31);
  std::vector<Word> words;
  for (int i = 0; i < 120; ++i) words.push_back(random_vertex_word(*ctx, rng, 4));
  for (int i = 0; i < 80; ++i) words.push_back(random_vertex_word(*ctx, rng, 6));
  for (size_t i = 0; i < words.size(); ++i) {
    for (size_t j = i + 1; j < words.size(); ++j) {
      bool same_nf = raag_normal_form(*ctx, words[i]) == raag_normal_form(*ctx, words[j]);
      bool same_oracle = oracle.least_form(words[i]) == oracle.least_form(words[j]);
      REQUIRE(same_nf == same_oracle);
    }
  }
}

TEST_CASE("triangle vertex group is abelian of rank three") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  std::mt19937 rng(37);
  for (int i = 0; i < 40; ++i) {
    Word w = random_vertex_word(*ctx, rng, 10);
    // Trivial iff all exponent sums vanish.
    bool sums_zero = true;
    for (int g = 0; g < 3; ++g) sums_zero = sums_zero && exponent_sum(w, g) == 0;
    CHECK(raag_trivial(*ctx, w) == sums_zero);
  }
}

TEST_CASE("filler on single commutators") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  NullExpression e = fill_raag(*ctx, ctx->alphabet.parse_word("u v u^-1 v^-1"));
  CHECK(e.terms.size() == 1);
  CHECK(verify_expression(ctx->pa, e));

  auto path = make_context(builtin_complex("PATH"), "u");
  CHECK_THROWS_AS(fill_raag(*path, path->alphabet.parse_word("u w u^-1 w^-1")),
                  NotNullHomotopic);
}

TEST_CASE("filler guarantee on random corpora") {
  for (const char* name : {"TRI", "OCTA", "GRID2"}) {
    auto ctx = make_context(builtin_complex(name));
    std::mt19937 rng(41);
    for (int i = 0; i < 60; ++i) {
      Word w = random_trivial_vertex_word(*ctx, rng, 1 + i % 6, 4);
      if (w.size() > 64) continue;
      NullExpression e = fill_raag(*ctx, w);
      CHECK(verify_expression(ctx->pa, e));
      ExpressionMetrics m = expression_metrics(e);
      long long n = static_cast<long long>(w.size());
      CHECK(m.area <= (n * n + 1) / 2);
      CHECK(m.radius <= n);
    }
  }
}

TEST_CASE("filler succeeds exactly on trivial words") {
  auto ctx = make_context(builtin_complex("OCTA"));
  std::mt19937 rng(43);
  int trivial_seen = 0, nontrivial_seen = 0;
  for (int i = 0; i < 80; ++i) {
    Word w = i % 2 ? random_vertex_word(*ctx, rng, 8)
                   : random_trivial_vertex_word(*ctx, rng, 2, 3);
    bool trivial = raag_trivial(*ctx, w);
    (trivial ? trivial_seen : nontrivial_seen)++;
    if (trivial) {
      CHECK_NOTHROW((void)fill_raag(*ctx, w));
    } else {
      CHECK_THROWS_AS((void)fill_raag(*ctx, w), NotNullHomotopic);
    }
  }
  CHECK(trivial_seen > 0);
  CHECK(nontrivial_seen > 0);
}

TEST_CASE("reverse path scheme costs") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  int v = ctx->complex.vertex_index("v");
  // n = 0: empty scheme.
  TransitionScheme s0 = reverse_path_scheme(*ctx, v, 0);
  CHECK(s0.fillings[0].terms.empty());
  // Dist(u, v) = 1 at n = 1 costs 1; spec pins cost = |n| Dist(q, v).
  CHECK(reverse_path_scheme(*ctx, v, 1).fillings[0].terms.size() == 1);
  auto grid = make_context(builtin_complex("GRID2"));
  for (long long n = -12; n <= 12; ++n) {
    for (int vv = 0; vv < grid->complex.vertex_count(); ++vv) {
      TransitionScheme s = reverse_path_scheme(*grid, vv, n);
      long long dist =
          grid->tree.dist[static_cast<size_t>(grid->tree.base)][static_cast<size_t>(vv)];
      long long an = n < 0 ? -n : n;
      CHECK(static_cast<long long>(s.fillings[0].terms.size()) == an * dist);
      CHECK(static_cast<long long>(s.fillings[0].terms.size()) <= grid->tree.diameter * an);
      CHECK(verify_expression(grid->ph, s.fillings[0]));
    }
  }
}

TEST_CASE("tietze case transforms") {
  auto ctx = make_context(builtin_complex("TRI"), "u");

  // Case 1: extending the store keeps ids valid.
  Word comm = ctx->alphabet.parse_word("u v u^-1 v^-1");
  NullExpression e = fill_raag(*ctx, comm);
  Presentation extended(&ctx->alphabet, PresentationLabel::other);
  for (int id = 0; id < ctx->pa.relator_count(); ++id) {
    extended.add(ctx->pa.relator_word(id), ctx->pa.meta(id));
  }
  extended.add(ctx->alphabet.parse_word("u v w u^-1 v^-1 w^-1"));
  TietzeData d1;
  d1.from = &ctx->pa;
  d1.to = &extended;
  NullExpression e1 = tietze_case_transform(e, 1, d1);
  CHECK(e1.terms.size() == e.terms.size());

  // Case 2: remove that added relator, replacing its uses by a filling.
  Word extra = ctx->alphabet.parse_word("u v w u^-1 v^-1 w^-1");
  int extra_id = *extended.find(extra);
  NullExpression extra_fill = fill_raag(*ctx, extra);
  REQUIRE(verify_expression(ctx->pa, extra_fill));
  NullExpression uses;
  uses.target = extra;
  uses.terms.push_back({Word(ctx->alphabet.uid()), {extra_id, 1, 0}});
  TietzeData d2;
  d2.from = &extended;
  d2.to = &ctx->pa;
  d2.removed_relator = extra_id;
  d2.removed_filling = &extra_fill;
  NullExpression e2 = tietze_case_transform(uses, 2, d2);
  CHECK(e2.terms.size() == extra_fill.terms.size());
  CHECK(verify_expression(ctx->pa, e2));

  // Cases 3 and 4 on a toy alphabet: adjoin b with defining word u v.
  Alphabet toy;
  int u = toy.add_vertex("u");
  int v = toy.add_vertex("v");
  int b = toy.add_vertex("b");
  Presentation small(&toy, PresentationLabel::other);
  int comm_id = small.add(toy.word_of({{u, 1}, {v, 1}, {u, -1}, {v, -1}}));
  Presentation big(&toy, PresentationLabel::other);
  big.add(small.relator_word(comm_id));
  Word ub = toy.word_of({{u, 1}, {v, 1}});
  Word brel = toy.word_of({{b, 1}});
  brel.append_inverse(ub);
  int brel_id = big.add(brel);

  // w = b v^-1 u^-1 ... make it null-homotopic: b (uv)^-1 = b v^-1 u^-1.
  Word w = toy.word_of({{b, 1}, {v, -1}, {u, -1}});
  TietzeData d3;
  d3.from = &small;
  d3.to = &big;
  d3.generator = b;
  d3.defining_word = ub;
  d3.extended_target = w;
  d3.defining_relator = brel_id;
  Word base = tietze_case3_base_word(d3);
  CHECK(base == toy.word_of({{u, 1}, {v, 1}, {v, -1}, {u, -1}}));
  NullExpression base_fill;  // freely trivial: empty expression
  base_fill.target = base;
  NullExpression e3 = tietze_case_transform(base_fill, 3, d3);
  CHECK(verify_expression(big, w, e3));
  CHECK(e3.terms.size() == 1);  // one b-occurrence

  // Case 4 undoes it: retraction by the defining word.
  TietzeData d4;
  d4.from = &big;
  d4.to = &small;
  d4.generator = b;
  d4.defining_word = ub;
  d4.defining_relator = brel_id;
  NullExpression e4 = tietze_case_transform(e3, 4, d4);
  CHECK(verify_expression(small, e4));
  CHECK(e4.terms.size() <= e3.terms.size());
}

TEST_CASE("case 3 handles mixed signs and several occurrences") {
  Alphabet toy;
  int u = toy.add_vertex("u");
  int b = toy.add_vertex("b");
  Presentation small(&toy, PresentationLabel::other);
  // No relators needed: the base word will be freely trivial.
  Presentation big(&toy, PresentationLabel::other);
  Word ub = toy.word_of({{u, 1}, {u, 1}});
  Word brel = toy.word_of({{b, 1}});
  brel.append_inverse(ub);
  int brel_id = big.add(brel);

  // b stands for u^2, so b u b^-1 u^-1 is null-homotopic.
  Word w = toy.word_of({{b, 1}, {u, 1}, {b, -1}, {u, -1}});
  TietzeData d3;
  d3.from = &small;
  d3.to = &big;
  d3.generator = b;
  d3.defining_word = ub;
  d3.extended_target = w;
  d3.defining_relator = brel_id;
  Word base = tietze_case3_base_word(d3);
  CHECK(free_reduce(base).empty());
  NullExpression base_fill;
  base_fill.target = base;
  NullExpression e3 = tietze_case_transform(base_fill, 3, d3);
  CHECK(e3.terms.size() == 2);
  CHECK(verify_expression(big, w, e3));
}

TEST_CASE("bridges are constant-size verified fillings") {
  for (const char* name : {"TRI", "PATH", "OCTA", "GRID2"}) {
    auto ctx = make_context(builtin_complex(name));
    prepare_fillings(*ctx, SearchBudget{});
    const BridgeSet& bridges = ctx->bridge_set();
    long long l = ctx->tree.diameter;
    long long k = ctx->constants.k_constant;
    CHECK(bridges.letter.size() == ctx->edge_gens.size());
    CHECK(bridges.commutator.size() == static_cast<size_t>(ctx->pa.relator_count()));
    for (const auto& [e, fill] : bridges.letter) {
      CHECK(verify_expression(ctx->pa_ext, fill));
      CHECK(static_cast<long long>(fill.terms.size()) <= l + k);
    }
    for (const auto& [id, fill] : bridges.commutator) {
      CHECK(verify_expression(ctx->pa_ext, fill));
      CHECK(static_cast<long long>(fill.terms.size()) <= 2 * k + l + 1);
    }
  }
}

TEST_CASE("transport lifts vertex fillings to the extension") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  prepare_fillings(*ctx, SearchBudget{});

  // Edge pair: the vertex image is freely trivial, so the lift costs only
  // the two letter corrections.
  Word pair = ctx->alphabet.parse_word("u>v v>u");
  NullExpression raag = fill_raag(*ctx, embed_to_vertices(*ctx, pair));
  CHECK(raag.terms.empty());
  NullExpression lifted = transport_to_extended(*ctx, pair, raag);
  CHECK(verify_expression(ctx->pa_ext, lifted));
  CHECK(static_cast<long long>(lifted.terms.size()) <=
        2 * ctx->constants.transport_area_per_letter);

  std::mt19937 rng(47);
  std::uniform_int_distribution<int> rel(0, ctx->ph.relator_count() - 1);
  for (int i = 0; i < 30; ++i) {
    Word w(ctx->alphabet.uid());
    for (int f = 0; f < 1 + i % 4; ++f) {
      Word r = ctx->ph.relator_word(rel(rng));
      w.append(i % 2 ? r : r.inverse());
    }
    w = free_reduce(w);
    NullExpression vr = fill_raag(*ctx, embed_to_vertices(*ctx, w));
    NullExpression lift = transport_to_extended(*ctx, w, vr);
    CHECK(verify_expression(ctx->pa_ext, lift));
    ExpressionMetrics m = expression_metrics(lift);
    long long n = static_cast<long long>(w.size());
    CHECK(m.area <= ctx->constants.alpha_prime(n));
    CHECK(m.radius <= ctx->constants.pi_prime(n));
  }
}
